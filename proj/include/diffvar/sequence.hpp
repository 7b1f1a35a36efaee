#pragma once

#include <vector>

#include <Eigen/Dense>

#include "diffvar/exact.hpp"

namespace diffvar {

enum class SeqProvenance { ClosedFormOrdinary, RootFinding, Explicit };

const char* to_string(SeqProvenance p);
SeqProvenance provenance_from_string(const std::string& s);

// A difference sequence (d_0, ..., d_r): coefficients summing to zero with
// unit sum of squares, d_0 > 0 and d_r != 0. Bias level k means the sequence
// annihilates polynomial trends up to degree k (C_1 = ... = C_k = 0).
struct DifferenceSequence {
  int r = 0;
  int k = 0;
  Eigen::VectorXd coeffs;  // size r+1
  SeqProvenance provenance = SeqProvenance::Explicit;
};

// Lag autocorrelations D_c = sum_{j=0}^{r-c} d_j d_{j+c}, c = 1..r.
// `exact` is carried when the gram was produced by exact arithmetic; the
// reconstruction uses it to keep the unit-root deflation error-free.
struct GramCoefficients {
  int r = 0;
  Eigen::VectorXd values;
  std::vector<BigRational> exact;  // empty unless exactly known
};

// C_p = sum_j j^p d_j / p!, evaluated with range-safe incremental products.
double constraint_functional(const Eigen::VectorXd& coeffs, int p);

// delta = sum_c D_c^2, straight from the coefficients.
double delta_of(const Eigen::VectorXd& coeffs);
double delta_of(const DifferenceSequence& seq);

GramCoefficients gram_of(const DifferenceSequence& seq);

// d_j = (-1)^j C(r,j) / sqrt(C(2r,r)), binomials exact, one rounding at the end.
DifferenceSequence ordinary_sequence(int r);

DifferenceSequence rice_sequence();

// The recommended default pair d_1(3).
inline constexpr int kRuleOfThumbOrder = 3;
inline constexpr int kRuleOfThumbLevel = 1;

// Checks all DifferenceSequence invariants; tolerances scale with the
// magnitude of the summands so high orders do not trip on roundoff.
// Throws std::invalid_argument on violation.
void validate_sequence(const DifferenceSequence& seq);

// Wraps user-supplied coefficients after validation.
DifferenceSequence make_explicit_sequence(int r, int k, Eigen::VectorXd coeffs);

// Of the two admissible orientations (a sequence and its reversal, signs
// fixed so the head is positive) returns the lexicographically larger one.
Eigen::VectorXd canonical_orientation(const Eigen::VectorXd& coeffs);

}  // namespace diffvar
