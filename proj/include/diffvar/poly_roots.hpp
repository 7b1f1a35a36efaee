#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "diffvar/errors.hpp"

namespace diffvar {

template <class Real, class Complex>
struct RootSolve {
  std::vector<Complex> roots;
  int iterations = 0;
  Real residual = Real(0);  // worst coefficient-space residual at exit
};

// p(z) and p'(z) by Horner; also the scale sum_k |c_k| |z|^k used for the
// coefficient-space (backward) residual |p(z)| / scale.
template <class Real, class Complex>
void eval_with_scale(const std::vector<Real>& c, const Complex& z, Complex& p, Complex& dp,
                     Real& scale) {
  using std::abs;
  p = Complex(c.back());
  dp = Complex(0);
  scale = abs(c.back());
  const Real az = abs(z);
  for (int j = int(c.size()) - 2; j >= 0; --j) {
    dp = dp * z + p;
    p = p * z + Complex(c[j]);
    scale = scale * az + abs(c[j]);
  }
}

// Aberth-Ehrlich simultaneous iteration for a real-coefficient polynomial in
// ascending order. Initial guesses sit on a circle of radius slightly above
// one (the target roots straddle the unit circle), with an irrational phase
// offset so that symmetric configurations cannot lock. A root's residual is
// measured in coefficient space; the sweep continues until every correction
// falls to the precision floor, and the result is accepted only if the worst
// residual is below `accept_tol` (otherwise convergence_error).
template <class Real, class Complex>
RootSolve<Real, Complex> aberth_roots(const std::vector<Real>& coeffs, double accept_tol = 1e-13,
                                      int max_iter = 500) {
  using std::abs;
  using std::acos;
  using std::cos;
  using std::sin;
  RootSolve<Real, Complex> out;
  const int deg = int(coeffs.size()) - 1;
  if (deg < 1) return out;
  if (!(abs(coeffs.back()) > Real(0))) {
    throw std::invalid_argument("leading coefficient must be nonzero");
  }
  if (deg == 1) {
    out.roots.assign(1, Complex(-coeffs[0] / coeffs[1]));
    return out;
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real floor_tol = eps * Real(64);
  const Real pi = acos(Real(-1));
  const Real radius = Real(105) / Real(100);

  std::vector<Complex> z(deg);
  for (int i = 0; i < deg; ++i) {
    Real theta = Real(2) * pi * (Real(i) + Real(37) / Real(100)) / Real(deg) + Real(1) / Real(17);
    z[i] = Complex(radius * cos(theta), radius * sin(theta));
  }

  std::vector<Real> resid(deg, Real(1));
  for (int iter = 1; iter <= max_iter; ++iter) {
    bool settled = true;
    for (int i = 0; i < deg; ++i) {
      Complex p, dp;
      Real scale;
      eval_with_scale(coeffs, z[i], p, dp, scale);
      resid[i] = abs(p) / scale;
      if (resid[i] <= floor_tol) continue;  // already at the precision floor
      if (!(abs(dp) > Real(0))) {
        z[i] *= Real(1) + Real(1) / Real(1000);  // off a stationary point
        settled = false;
        continue;
      }
      Complex newton = p / dp;
      Complex repel(0);
      for (int j = 0; j < deg; ++j) {
        if (j != i) repel += Real(1) / (z[i] - z[j]);
      }
      Complex w = newton / (Real(1) - newton * repel);
      z[i] -= w;
      if (abs(w) > eps * Real(8) * (Real(1) + abs(z[i]))) settled = false;
    }
    out.iterations = iter;
    if (settled) break;
  }

  out.residual = Real(0);
  for (int i = 0; i < deg; ++i) {
    Complex p, dp;
    Real scale;
    eval_with_scale(coeffs, z[i], p, dp, scale);
    Real ri = abs(p) / scale;
    if (ri > out.residual) out.residual = ri;
  }
  if (!(out.residual < Real(accept_tol))) {
    throw convergence_error("root iteration stalled: worst coefficient-space residual " +
                            std::to_string(static_cast<double>(out.residual)) + " after " +
                            std::to_string(out.iterations) + " sweeps");
  }
  out.roots = std::move(z);
  return out;
}

// Synthetic division of an ascending-coefficient polynomial by (t - 1),
// applied `times` times; remainders are dropped.
template <class Scalar>
std::vector<Scalar> deflate_unit_root(std::vector<Scalar> p, int times) {
  for (int t = 0; t < times; ++t) {
    const int n = int(p.size()) - 1;
    std::vector<Scalar> q(n);
    Scalar acc = p[n];
    for (int j = n - 1; j >= 0; --j) {
      q[j] = acc;
      acc += p[j];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace diffvar
