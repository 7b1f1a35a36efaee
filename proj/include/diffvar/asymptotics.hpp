#pragma once

#include <vector>

#include "diffvar/estimator.hpp"
#include "diffvar/mean_function.hpp"
#include "diffvar/sequence.hpp"

namespace diffvar {

// C_p = sum_j j^p d_j / p!. Rejects p > r (the Taylor expansion behind the
// bias control stops at the sequence order).
double c_coefficient(const DifferenceSequence& seq, int p);

// Leading-order bias and variance of the level-k estimator at order r,
//   bias = C_{k+1}^2 J_{k+1} / n^{2(k+1)}
//   var  = { var(eps^2) + sigma^4 V_k^{-1}(1,1) } / n
// plus the same quantities scaled by var(eps^2)/n (RVAR, RSB, RMSE). The
// leading bias constant depends on which of the equivalent sequences was
// generated, so the report keeps the sequence it used.
struct AsymptoticReport {
  int r = 0;
  int k = 0;
  int n = 0;
  double c_next = 0;        // C_{k+1}
  double j_next = 0;        // J_{k+1}
  double bias_leading = 0;
  double var_leading = 0;
  double rvar = 0;
  double rsb = 0;
  double rmse = 0;
  DifferenceSequence sequence;
};

AsymptoticReport theorem3_report(int r, int k, const MeanFunction& g, const ErrorModel& err,
                                 int n);

// Reports over the grid {(r,k): 1 <= r <= r_max, k in {0,1,2,3,r-1}}.
std::vector<AsymptoticReport> figure2_curves(const MeanFunction& g, const ErrorModel& err, int n,
                                             int r_max);

}  // namespace diffvar
