#include "diffvar/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diffvar {

RegressionSample equidistant_sample(Eigen::VectorXd y) {
  RegressionSample s;
  const int n = int(y.size());
  s.x = Eigen::VectorXd::LinSpaced(n, 1.0 / n, 1.0);
  s.y = std::move(y);
  s.equidistant = true;
  return s;
}

RegressionSample sample_from_xy(Eigen::VectorXd x, Eigen::VectorXd y) {
  RegressionSample s;
  s.x = std::move(x);
  s.y = std::move(y);
  const int n = s.n();
  s.equidistant = s.x.size() == n;
  for (int i = 0; i < n && s.equidistant; ++i) {
    if (std::abs(s.x(i) - double(i + 1) / n) > 1e-12) s.equidistant = false;
  }
  validate_sample(s);
  return s;
}

void validate_sample(const RegressionSample& sample) {
  const int n = sample.n();
  if (n < 1) throw std::invalid_argument("sample is empty");
  if (sample.x.size() != n) {
    throw std::invalid_argument("x and y lengths differ");
  }
  for (int i = 1; i < n; ++i) {
    if (!(sample.x(i) > sample.x(i - 1))) {
      throw std::invalid_argument("design points must be strictly increasing (position " +
                                  std::to_string(i) + ")");
    }
  }
  if (sample.equidistant) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(sample.x(i) - double(i + 1) / n) > 1e-12) {
        throw std::invalid_argument("equidistant flag set but x_i != i/n at position " +
                                    std::to_string(i));
      }
    }
  }
}

double estimate_variance(const Eigen::VectorXd& y, const Eigen::VectorXd& coeffs) {
  const int n = int(y.size());
  const int r = int(coeffs.size()) - 1;
  if (n <= r) {
    throw std::invalid_argument("insufficient data: n = " + std::to_string(n) +
                                " observations for order r = " + std::to_string(r));
  }
  double acc = 0;
  for (int i = 0; i + r < n; ++i) {
    double s = 0;
    for (int j = 0; j <= r; ++j) s += coeffs(j) * y(i + j);
    acc += s * s;
  }
  return acc / (n - r);
}

double estimate_variance(const RegressionSample& sample, const DifferenceSequence& seq) {
  return estimate_variance(sample.y, seq.coeffs);
}

ErrorModel ErrorModel::normal(double sigma) { return ErrorModel{sigma, 0.0, 3.0}; }

double ErrorModel::var_eps_sq() const {
  const double s2 = sigma * sigma;
  return s2 * s2 * (gamma4 - 1.0);
}

void validate_error_model(const ErrorModel& err) {
  if (!(err.sigma > 0)) throw std::invalid_argument("sigma must be positive");
  if (!(err.gamma4 >= 1)) throw std::invalid_argument("gamma4 must be at least 1");
}

KernelSummary kernel_summary(const Eigen::VectorXd& g, const DifferenceSequence& seq) {
  const int n = int(g.size());
  const int r = seq.r;
  if (n <= r) {
    throw std::invalid_argument("insufficient data: n = " + std::to_string(n) +
                                " points for order r = " + std::to_string(r));
  }
  const Eigen::VectorXd& d = seq.coeffs;
  const int m = n - r;  // rows of the banded difference matrix

  KernelSummary out;
  out.r = r;
  out.n = n;

  // v = Dtilde g, w = Dtilde^T v = D g
  Eigen::VectorXd v(m);
  for (int t = 0; t < m; ++t) {
    double s = 0;
    for (int j = 0; j <= r; ++j) s += d(j) * g(t + j);
    v(t) = s;
  }
  out.gDg = v.squaredNorm();

  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  for (int t = 0; t < m; ++t) {
    for (int j = 0; j <= r; ++j) w(t + j) += d(j) * v(t);
  }
  out.gDDg = w.squaredNorm();

  // diag(D)_i = sum of d_j^2 over the band rows covering column i
  Eigen::VectorXd diag(n);
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - m + 1);
    const int hi = std::min(r, i);
    double s = 0;
    for (int j = lo; j <= hi; ++j) s += d(j) * d(j);
    diag(i) = s;
  }
  out.tr_diagD_sq = diag.squaredNorm();

  // g^T D diag(D) u = (Dtilde g) . (Dtilde diag)
  double dot = 0;
  for (int t = 0; t < m; ++t) {
    double s = 0;
    for (int j = 0; j <= r; ++j) s += d(j) * diag(t + j);
    dot += v(t) * s;
  }
  out.gDdiagDu = dot;

  // tr(D^2) = sum of squared band entries; D_{i,i+c} truncates near the ends
  double tr2 = 0;
  for (int i = 0; i < n; ++i) {
    const int lo_j = std::max(0, i - m + 1);
    for (int c = 0; c <= std::min(r, n - 1 - i); ++c) {
      const int hi_j = std::min(i, r - c);
      double e = 0;
      for (int j = lo_j; j <= hi_j; ++j) e += d(j) * d(j + c);
      tr2 += (c == 0 ? 1.0 : 2.0) * e * e;
    }
  }
  out.tr_Dsq = tr2;
  return out;
}

ExactMoments exact_moments(const KernelSummary& summary, const ErrorModel& err) {
  validate_error_model(err);
  const double m = summary.n - summary.r;
  const double s2 = err.sigma * err.sigma;
  const double s3 = s2 * err.sigma;
  const double s4 = s2 * s2;

  ExactMoments out;
  out.bias = summary.gDg / m;
  out.variance = (4.0 * s2 * summary.gDDg + 4.0 * s3 * err.gamma3 * summary.gDdiagDu +
                  s4 * (err.gamma4 - 3.0) * summary.tr_diagD_sq + 2.0 * s4 * summary.tr_Dsq) /
                 (m * m);
  out.mse = out.bias * out.bias + out.variance;
  return out;
}

}  // namespace diffvar
