#include "diffvar/mean_function.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace diffvar {

namespace {
constexpr double kPi = std::numbers::pi;
}

MeanFunction MeanFunction::sinusoid(double amplitude, double frequency) {
  if (!(frequency > 0)) throw std::invalid_argument("sinusoid frequency must be positive");
  MeanFunction g;
  g.kind_ = Kind::Sinusoid;
  g.amplitude_ = amplitude;
  g.frequency_ = frequency;
  std::ostringstream label;
  label << amplitude << "*sin(" << frequency << "*pi*x)";
  g.description_ = label.str();
  return g;
}

MeanFunction MeanFunction::tabulated(Eigen::VectorXd values, std::string label) {
  if (values.size() < 2) throw std::invalid_argument("tabulated mean needs at least two points");
  MeanFunction g;
  g.kind_ = Kind::Tabulated;
  g.values_ = std::move(values);
  g.description_ = std::move(label);
  return g;
}

double MeanFunction::value(double x) const {
  if (kind_ == Kind::Sinusoid) return amplitude_ * std::sin(frequency_ * kPi * x);
  const int q = int(values_.size());
  const double pos = std::clamp(x, 0.0, 1.0) * (q - 1);
  const int lo = std::min(int(pos), q - 2);
  const double f = pos - lo;
  return (1.0 - f) * values_(lo) + f * values_(lo + 1);
}

Eigen::VectorXd MeanFunction::sample(int n) const {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  Eigen::VectorXd out(n);
  for (int i = 1; i <= n; ++i) out(i - 1) = value(double(i) / n);
  return out;
}

double MeanFunction::derivative_l2sq(int p) const {
  if (p < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (kind_ == Kind::Sinusoid) {
    // g^(p)(x) = A (w pi)^p sin(w pi x + p pi/2); the squared integral is
    // A^2 (w pi)^{2p} [ 1/2 - (-1)^p sin(2 w pi) / (4 w pi) ].
    const double wpi = frequency_ * kPi;
    const double parity = p % 2 == 0 ? 1.0 : -1.0;
    return amplitude_ * amplitude_ * std::pow(wpi, 2 * p) *
           (0.5 - parity * std::sin(2.0 * frequency_ * kPi) / (4.0 * frequency_ * kPi));
  }

  const int q = int(values_.size());
  if (q < 2 * p + 3) {
    throw std::invalid_argument("grid of " + std::to_string(q) +
                                " points cannot support derivative order " + std::to_string(p));
  }
  const double h = 1.0 / (q - 1);
  Eigen::VectorXd deriv = values_;
  for (int level = 0; level < p; ++level) {
    Eigen::VectorXd next(q);
    for (int i = 1; i + 1 < q; ++i) next(i) = (deriv(i + 1) - deriv(i - 1)) / (2.0 * h);
    next(0) = (-3.0 * deriv(0) + 4.0 * deriv(1) - deriv(2)) / (2.0 * h);
    next(q - 1) = (3.0 * deriv(q - 1) - 4.0 * deriv(q - 2) + deriv(q - 3)) / (2.0 * h);
    deriv = std::move(next);
  }
  double total = 0;
  for (int i = 0; i + 1 < q; ++i) {
    total += 0.5 * h * (deriv(i) * deriv(i) + deriv(i + 1) * deriv(i + 1));
  }
  return total;
}

double j_functional(const MeanFunction& g, int p) {
  if (p < 1) throw std::invalid_argument("j_functional needs a positive derivative order");
  return g.derivative_l2sq(p);
}

}  // namespace diffvar
