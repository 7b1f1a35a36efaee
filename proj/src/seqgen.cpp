#include "diffvar/seqgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "diffvar/errors.hpp"
#include "diffvar/poly_roots.hpp"

namespace diffvar {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadC = boost::multiprecision::cpp_complex_quad;

constexpr double kGramSumTol = 1e-10;   // |sum_c D_c + 1/2|
constexpr double kMomentTol = 1e-8;     // relative zero test for even gram moments
constexpr double kCircleBand = 1e-8;    // | |z| - 1 | on-circle classification
constexpr double kRealBand = 1e-12;     // |Im z| / (1 + |Re z|) realness test
constexpr double kClusterRadius = 1e-6; // proximity for repeated-root grouping
constexpr double kRoundTripTol = 1e-8;  // per-coefficient gram reproduction

std::vector<BigRational> gram_as_rationals(const GramCoefficients& gram) {
  if (!gram.exact.empty()) {
    if (int(gram.exact.size()) != gram.r) {
      throw std::invalid_argument("gram exact/size mismatch");
    }
    return gram.exact;
  }
  std::vector<BigRational> d(gram.r);
  for (int c = 0; c < gram.r; ++c) d[c] = BigRational(gram.values(c));
  return d;
}

// Pairs of unit roots in R: m pairs iff sum_c c^{2s} D_c = 0 for s = 1..m-1
// (always at least one pair, from sum_c D_c = -1/2).
int unit_pair_count(const std::vector<BigRational>& d, bool is_exact) {
  const int r = int(d.size());
  int m = 1;
  for (int s = 1; s <= r - 1; ++s) {
    BigRational moment = 0;
    double scale = 0;
    for (int c = 1; c <= r; ++c) {
      BigRational w = BigRational(boost::multiprecision::pow(BigInt(c), unsigned(2 * s)));
      moment += w * d[c - 1];
      scale += std::abs((w * d[c - 1]).convert_to<double>());
    }
    const bool zero = is_exact ? moment == 0
                               : std::abs(moment.convert_to<double>()) <=
                                     kMomentTol * std::max(1.0, scale);
    if (!zero) break;
    ++m;
  }
  return m;
}

struct SelectedRoots {
  std::vector<Quad> reals;
  std::vector<QuadC> pairs;  // one representative per conjugate pair, Im > 0
  int count() const { return int(reals.size()) + 2 * int(pairs.size()); }
};

// One member of each reciprocal pair: everything outside the circle as-is;
// on-circle clusters contribute half their multiplicity, conjugate-closed;
// the deflated t = 1 pairs contribute `unit_pairs` copies of 1.
SelectedRoots select_roots(const std::vector<QuadC>& roots, int unit_pairs) {
  using std::abs;
  SelectedRoots sel;
  std::vector<QuadC> outside, inside, circle_pos, circle_neg;
  int circle_real_pos = 0, circle_real_neg = 0;

  for (const QuadC& z : roots) {
    const Quad az = abs(z);
    const bool real = abs(z.imag()) <= Quad(kRealBand) * (Quad(1) + abs(z.real()));
    if (abs(az - Quad(1)) <= Quad(kCircleBand)) {
      if (real) {
        (z.real() > Quad(0) ? circle_real_pos : circle_real_neg) += 1;
      } else {
        (z.imag() > Quad(0) ? circle_pos : circle_neg).push_back(z);
      }
    } else if (az > Quad(1)) {
      outside.push_back(z);
    } else {
      inside.push_back(z);
    }
  }

  if (outside.size() != inside.size()) {
    throw selection_error("reciprocal pairing broken: " + std::to_string(outside.size()) +
                          " roots outside vs " + std::to_string(inside.size()) + " inside");
  }
  if (circle_real_pos % 2 != 0 || circle_real_neg % 2 != 0 ||
      circle_pos.size() != circle_neg.size()) {
    throw selection_error("on-circle roots do not split into reciprocal pairs");
  }

  // Outside roots: reals directly, complex ones matched into conjugate pairs.
  std::vector<QuadC> pos;
  for (const QuadC& z : outside) {
    if (abs(z.imag()) <= Quad(kRealBand) * (Quad(1) + abs(z.real()))) {
      sel.reals.push_back(z.real());
    } else if (z.imag() > Quad(0)) {
      pos.push_back(z);
    }
  }
  std::vector<QuadC> neg;
  for (const QuadC& z : outside) {
    if (abs(z.imag()) > Quad(kRealBand) * (Quad(1) + abs(z.real())) && z.imag() < Quad(0)) {
      neg.push_back(z);
    }
  }
  if (pos.size() != neg.size()) {
    throw selection_error("conjugate closure broken among roots outside the circle");
  }
  std::vector<bool> used(neg.size(), false);
  for (const QuadC& z : pos) {
    int best = -1;
    Quad best_dist = Quad(0);
    for (int j = 0; j < int(neg.size()); ++j) {
      if (used[j]) continue;
      Quad dist = abs(conj(neg[j]) - z);
      if (best < 0 || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best < 0 || best_dist > Quad(kClusterRadius) * (Quad(1) + abs(z))) {
      throw selection_error("conjugate closure broken among roots outside the circle");
    }
    used[best] = true;
    sel.pairs.push_back((z + conj(neg[best])) / Quad(2));
  }

  // On-circle complex roots: cluster by value; a conjugate quadruple of total
  // multiplicity 4m yields m selected pairs, projected back onto the circle.
  std::sort(circle_pos.begin(), circle_pos.end(),
            [](const QuadC& a, const QuadC& b) { return a.real() < b.real(); });
  std::size_t i = 0;
  while (i < circle_pos.size()) {
    std::size_t j = i + 1;
    QuadC sum = circle_pos[i];
    while (j < circle_pos.size() &&
           abs(circle_pos[j] - circle_pos[i]) <= Quad(kClusterRadius)) {
      sum += circle_pos[j];
      ++j;
    }
    const std::size_t group = j - i;  // multiplicity 2m above the axis
    if (group % 2 != 0) {
      throw selection_error("on-circle root cluster has odd multiplicity");
    }
    QuadC mean = sum / Quad(double(group));
    mean /= abs(mean);  // reciprocal splits of an on-circle root are radial
    for (std::size_t c = 0; c < group / 2; ++c) sel.pairs.push_back(mean);
    i = j;
  }

  for (int c = 0; c < circle_real_pos / 2; ++c) sel.reals.push_back(Quad(1));
  for (int c = 0; c < circle_real_neg / 2; ++c) sel.reals.push_back(Quad(-1));
  for (int c = 0; c < unit_pairs; ++c) sel.reals.push_back(Quad(1));
  return sel;
}

Eigen::VectorXd expand_and_normalize(const SelectedRoots& sel) {
  std::vector<Quad> poly{Quad(1)};
  auto mul_linear = [&poly](const Quad& t) {
    std::vector<Quad> q(poly.size() + 1, Quad(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      q[i + 1] += poly[i];
      q[i] -= poly[i] * t;
    }
    poly = std::move(q);
  };
  auto mul_conj_pair = [&poly](const QuadC& z) {
    const Quad b = Quad(-2) * z.real();
    const Quad c = z.real() * z.real() + z.imag() * z.imag();
    std::vector<Quad> q(poly.size() + 2, Quad(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      q[i + 2] += poly[i];
      q[i + 1] += poly[i] * b;
      q[i] += poly[i] * c;
    }
    poly = std::move(q);
  };
  for (const Quad& t : sel.reals) mul_linear(t);
  for (const QuadC& z : sel.pairs) mul_conj_pair(z);

  Quad norm2 = 0;
  for (const Quad& a : poly) norm2 += a * a;
  const Quad norm = sqrt(norm2);
  Eigen::VectorXd d(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    d(int(i)) = (poly[i] / norm).convert_to<double>();
  }
  return d;
}

}  // namespace

GramCoefficients gram_from_theorem2(int r, int k) {
  const BiasMomentMatrix bm = power_sums(r, k);
  GramCoefficients g;
  g.r = r;
  g.values.resize(r);
  g.exact.resize(r);
  for (int c = 1; c <= r; ++c) {
    BigRational dc = 0;
    BigRational cpow = 1;  // c^{2s}
    for (int s = 0; s <= k; ++s) {
      dc += cpow * bm.inverse_first_column_exact[s];
      cpow *= c * c;
    }
    dc = -dc / 2;
    g.exact[c - 1] = dc;
    g.values(c - 1) = dc.convert_to<double>();
  }
  return g;
}

DifferenceSequence sequence_from_gram(const GramCoefficients& gram) {
  const int r = gram.r;
  if (r < 1 || gram.values.size() != r) {
    throw std::invalid_argument("gram must carry D_1..D_r for some r >= 1");
  }
  const std::vector<BigRational> d = gram_as_rationals(gram);
  const bool exact_input = !gram.exact.empty();

  double sum = 0;
  for (const BigRational& v : d) sum += v.convert_to<double>();
  if (std::abs(sum + 0.5) > kGramSumTol) {
    throw std::invalid_argument("invalid gram: lag autocorrelations sum to " +
                                std::to_string(sum) + ", expected -1/2");
  }
  if (d[r - 1] == 0) {
    throw std::invalid_argument("invalid gram: D_r = 0 implies d_0 * d_r = 0");
  }

  // R(t) in ascending order; palindromic with centre coefficient 1.
  std::vector<BigRational> rpoly(2 * r + 1, BigRational(0));
  rpoly[r] = 1;
  for (int c = 1; c <= r; ++c) {
    rpoly[r - c] = d[c - 1];
    rpoly[r + c] = d[c - 1];
  }

  const int unit_pairs = unit_pair_count(d, exact_input);
  const std::vector<BigRational> quotient = deflate_unit_root(std::move(rpoly), 2 * unit_pairs);

  std::vector<Quad> coeffs(quotient.size());
  for (std::size_t i = 0; i < quotient.size(); ++i) {
    coeffs[i] = quotient[i].convert_to<Quad>();
  }

  std::vector<QuadC> roots;
  if (coeffs.size() > 1) {
    roots = aberth_roots<Quad, QuadC>(coeffs).roots;
  }

  const SelectedRoots sel = select_roots(roots, unit_pairs);
  if (sel.count() != r) {
    throw selection_error("selected " + std::to_string(sel.count()) + " roots, expected " +
                          std::to_string(r));
  }

  DifferenceSequence seq;
  seq.r = r;
  seq.k = unit_pairs - 1;
  seq.coeffs = canonical_orientation(expand_and_normalize(sel));
  seq.provenance = SeqProvenance::RootFinding;
  validate_sequence(seq);

  const GramCoefficients check = gram_of(seq);
  const double residual = (check.values - gram.values).cwiseAbs().maxCoeff();
  if (residual > kRoundTripTol) {
    throw convergence_error("reconstructed sequence reproduces the gram only to " +
                            std::to_string(residual));
  }
  return seq;
}

DifferenceSequence generate(int r, int k) {
  require_supported_pair(r, k);
  if (k == r - 1) return ordinary_sequence(r);
  DifferenceSequence seq = sequence_from_gram(gram_from_theorem2(r, k));
  const double want = delta_k(r, k);
  if (std::abs(delta_of(seq) - want) > 1e-9) {
    throw convergence_error("generated sequence misses the delta target for (r=" +
                            std::to_string(r) + ", k=" + std::to_string(k) + ")");
  }
  return seq;
}

}  // namespace diffvar
