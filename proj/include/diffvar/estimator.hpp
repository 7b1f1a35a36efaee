#pragma once

#include <Eigen/Dense>

#include "diffvar/sequence.hpp"

namespace diffvar {

// Observations y at design points x in [0,1]. `equidistant` marks the
// x_i = i/n layout that the exact-moment and asymptotic formulas assume;
// the variance estimate itself only needs the ordering.
struct RegressionSample {
  Eigen::VectorXd x;
  Eigen::VectorXd y;
  bool equidistant = false;

  int n() const { return int(y.size()); }
};

RegressionSample equidistant_sample(Eigen::VectorXd y);

// Detects the equidistant layout within 1e-12 and sets the flag.
RegressionSample sample_from_xy(Eigen::VectorXd x, Eigen::VectorXd y);

// Throws std::invalid_argument on size mismatch, non-increasing x, or a set
// equidistant flag that the x values contradict.
void validate_sample(const RegressionSample& sample);

// sigma^2_hat = sum_i ( sum_j d_j y_{i+j} )^2 / (n - r), streaming in O(n r).
double estimate_variance(const RegressionSample& sample, const DifferenceSequence& seq);
double estimate_variance(const Eigen::VectorXd& y, const Eigen::VectorXd& coeffs);

// Error distribution through its standardized moments; var(eps^2) =
// sigma^4 (gamma4 - 1). The normal preset fixes (gamma3, gamma4) = (0, 3).
struct ErrorModel {
  double sigma = 1.0;
  double gamma3 = 0.0;
  double gamma4 = 3.0;

  static ErrorModel normal(double sigma);
  double var_eps_sq() const;
};

void validate_error_model(const ErrorModel& err);

// The handful of quadratic-form statistics of D = Dtilde^T Dtilde that the
// exact moments need. Computed from the band structure (bandwidth 2r+1):
// gDg and gDDg from one and two banded applications, diag(D) from partial
// sums of d_j^2 (exact at the truncated boundary rows), tr(D^2) from the
// squared band entries. O(n r^2) time, O(n) memory; the n x n matrix is
// never formed.
struct KernelSummary {
  int r = 0;
  int n = 0;
  double gDg = 0;         // g^T D g
  double gDDg = 0;        // g^T D^2 g
  double gDdiagDu = 0;    // g^T D diag(D) u
  double tr_diagD_sq = 0; // tr(diag(D)^2)
  double tr_Dsq = 0;      // tr(D^2)
};

KernelSummary kernel_summary(const Eigen::VectorXd& g_values, const DifferenceSequence& seq);

// Exact finite-sample moments of the estimator under mean vector g and the
// given error model:
//   bias = g^T D g / (n-r)
//   var  = [4 s^2 gDDg + 4 s^3 gamma3 gDdiagDu + s^4 (gamma4-3) tr(diag(D)^2)
//           + 2 s^4 tr(D^2)] / (n-r)^2
struct ExactMoments {
  double bias = 0;
  double variance = 0;
  double mse = 0;
};

ExactMoments exact_moments(const KernelSummary& summary, const ErrorModel& err);

}  // namespace diffvar
