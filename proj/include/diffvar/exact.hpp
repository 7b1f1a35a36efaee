#pragma once

#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace diffvar {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Supported envelope. The moment matrix V_k is assembled for k up to
// kMaxBiasLevel; the ordinary level k = r-1 is additionally available at any
// order through its binomial closed form.
inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxBiasLevel = 8;

// True iff V_k can be assembled for (r, k).
bool matrix_envelope(int r, int k);

// True iff (r, k) names a constructible sequence: the matrix envelope plus
// the closed-form ordinary diagonal k = r-1.
bool supported_pair(int r, int k);

// Throws std::out_of_range naming the offending pair.
void require_matrix_envelope(int r, int k);
void require_supported_pair(int r, int k);

// I_m = sum_{c=1}^r c^m, exact.
BigInt power_sum_exact(int r, int m);

BigInt binomial_exact(int n, int j);

// Even power sums I_0, I_2, ..., I_{4k}, the (k+1)x(k+1) moment matrix
// V_k(i,j) = I_{2(i+j-2)}, and the first column of its inverse. The matrix is
// severely ill-conditioned in floating point (entries up to r^{4k+1}), so the
// solve is done on exact rationals and rounded once at the end; the double
// mirrors are for display and interop only.
struct BiasMomentMatrix {
  int r = 0;
  int k = 0;
  std::vector<BigInt> power_sums;                       // I_0, I_2, ..., I_{4k}
  Eigen::MatrixXd matrix;                               // V_k, rounded
  std::vector<BigRational> inverse_first_column_exact;  // V_k^{-1}(s+1, 1)
  Eigen::VectorXd inverse_first_column;                 // rounded
};

BiasMomentMatrix power_sums(int r, int k);

// Solve M x = e1 by rational Gaussian elimination with full pivoting.
std::vector<BigRational> solve_e1_exact(std::vector<std::vector<BigRational>> m);

// Minimum of delta(r) over sequences annihilating trends up to degree k:
// V_k^{-1}(1,1) / 4. The ordinary diagonal k = r-1 dispatches to
// delta_ordinary_exact when V_{r-1} is outside the matrix envelope.
BigRational delta_k_exact(int r, int k);
double delta_k(int r, int k);

// [ C(2r,r)^{-2} C(4r,2r) - 1 ] / 2 with exact binomials.
BigRational delta_ordinary_exact(int r);

}  // namespace diffvar
