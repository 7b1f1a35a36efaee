#include "diffvar/sequence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace diffvar {

namespace {
using Quad = boost::multiprecision::cpp_bin_float_quad;
}

const char* to_string(SeqProvenance p) {
  switch (p) {
    case SeqProvenance::ClosedFormOrdinary: return "closed-form-ordinary";
    case SeqProvenance::RootFinding: return "root-finding";
    case SeqProvenance::Explicit: return "explicit";
  }
  return "explicit";
}

SeqProvenance provenance_from_string(const std::string& s) {
  if (s == "closed-form-ordinary") return SeqProvenance::ClosedFormOrdinary;
  if (s == "root-finding") return SeqProvenance::RootFinding;
  if (s == "explicit") return SeqProvenance::Explicit;
  throw std::invalid_argument("unknown provenance: " + s);
}

double constraint_functional(const Eigen::VectorXd& coeffs, int p) {
  const int r = int(coeffs.size()) - 1;
  double total = 0;
  for (int j = 0; j <= r; ++j) {
    // j^p / p! as prod_{q=1..p} (j/q): stays in range for j, p <= 64
    double term = coeffs(j);
    for (int q = 1; q <= p; ++q) term *= double(j) / double(q);
    total += term;
  }
  return total;
}

double delta_of(const Eigen::VectorXd& coeffs) {
  const int r = int(coeffs.size()) - 1;
  double total = 0;
  for (int c = 1; c <= r; ++c) {
    double dc = 0;
    for (int j = 0; j + c <= r; ++j) dc += coeffs(j) * coeffs(j + c);
    total += dc * dc;
  }
  return total;
}

double delta_of(const DifferenceSequence& seq) { return delta_of(seq.coeffs); }

GramCoefficients gram_of(const DifferenceSequence& seq) {
  GramCoefficients g;
  g.r = seq.r;
  g.values.resize(seq.r);
  for (int c = 1; c <= seq.r; ++c) {
    double dc = 0;
    for (int j = 0; j + c <= seq.r; ++j) dc += seq.coeffs(j) * seq.coeffs(j + c);
    g.values(c - 1) = dc;
  }
  return g;
}

DifferenceSequence ordinary_sequence(int r) {
  if (r < 1 || r > kMaxOrder) {
    throw std::out_of_range("order out of supported range: r=" + std::to_string(r));
  }
  const Quad norm = sqrt(binomial_exact(2 * r, r).convert_to<Quad>());
  DifferenceSequence seq;
  seq.r = r;
  seq.k = r - 1;
  seq.provenance = SeqProvenance::ClosedFormOrdinary;
  seq.coeffs.resize(r + 1);
  for (int j = 0; j <= r; ++j) {
    Quad v = binomial_exact(r, j).convert_to<Quad>() / norm;
    seq.coeffs(j) = (j % 2 == 0 ? v : -v).convert_to<double>();
  }
  return seq;
}

DifferenceSequence rice_sequence() {
  DifferenceSequence seq = ordinary_sequence(1);
  return seq;
}

void validate_sequence(const DifferenceSequence& seq) {
  const int r = seq.r;
  if (r < 1) throw std::invalid_argument("sequence order must be positive");
  if (seq.k < 0 || seq.k > r - 1) {
    throw std::invalid_argument("bias level must lie in [0, r-1]");
  }
  if (seq.coeffs.size() != r + 1) {
    throw std::invalid_argument("coefficient count does not match order");
  }
  const Eigen::VectorXd& d = seq.coeffs;
  if (std::abs(d.sum()) > 1e-10) {
    throw std::invalid_argument("coefficients must sum to zero");
  }
  if (std::abs(d.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("coefficients must have unit sum of squares");
  }
  if (!(d(0) > 0) || d(r) == 0) {
    throw std::invalid_argument("identifiability requires d_0 > 0 and d_r != 0");
  }
  for (int p = 1; p <= seq.k; ++p) {
    double scale = 0;
    for (int j = 0; j <= r; ++j) {
      double term = std::abs(d(j));
      for (int q = 1; q <= p; ++q) term *= double(j) / double(q);
      scale += term;
    }
    if (std::abs(constraint_functional(d, p)) > 1e-8 * std::max(1.0, scale)) {
      throw std::invalid_argument("constraint C_" + std::to_string(p) +
                                  " violated for claimed bias level");
    }
  }
}

DifferenceSequence make_explicit_sequence(int r, int k, Eigen::VectorXd coeffs) {
  DifferenceSequence seq;
  seq.r = r;
  seq.k = k;
  seq.coeffs = std::move(coeffs);
  seq.provenance = SeqProvenance::Explicit;
  validate_sequence(seq);
  return seq;
}

Eigen::VectorXd canonical_orientation(const Eigen::VectorXd& coeffs) {
  const int m = int(coeffs.size());
  Eigen::VectorXd fwd = coeffs(0) < 0 ? Eigen::VectorXd(-coeffs) : coeffs;
  Eigen::VectorXd rev = fwd.reverse();
  if (rev(0) < 0) rev = -rev;
  for (int i = 0; i < m; ++i) {
    if (fwd(i) != rev(i)) return fwd(i) > rev(i) ? fwd : rev;
  }
  return fwd;
}

}  // namespace diffvar
