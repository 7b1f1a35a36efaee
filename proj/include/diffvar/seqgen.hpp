#pragma once

#include "diffvar/sequence.hpp"

namespace diffvar {

// D_c = -(1/2) sum_{s=0}^k c^{2s} V_k^{-1}(s+1,1) for c = 1..r, with the
// exact rationals carried alongside the rounded values.
GramCoefficients gram_from_theorem2(int r, int k);

// Reconstructs a difference sequence whose lag autocorrelations reproduce
// `gram`: builds the self-reciprocal polynomial
//   R(t) = t^r { D_r (t^r + t^-r) + ... + D_1 (t + t^-1) + 1 },
// strips the roots at t = 1 (their pair count equals the number of vanishing
// even gram moments), finds the remaining roots, and keeps t = 1 plus one
// member of every reciprocal pair {z, 1/z} -- the member on or outside the
// unit circle, closed under conjugation. The selected product is expanded and
// normalized to unit length with a positive head.
//
// Deflation runs on exact rationals and root finding in quad precision: the
// deflated quotient's coefficients span up to ten orders of magnitude at the
// far corner of the envelope, which double precision cannot absorb. Accuracy
// is therefore limited only by the input gram; grams carrying their exact
// values reconstruct to full double precision.
DifferenceSequence sequence_from_gram(const GramCoefficients& gram);

// Optimal-k construction: the ordinary closed form on the diagonal k = r-1,
// otherwise gram_from_theorem2 followed by sequence_from_gram.
DifferenceSequence generate(int r, int k);

}  // namespace diffvar
