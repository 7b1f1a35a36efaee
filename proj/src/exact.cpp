#include "diffvar/exact.hpp"

#include <stdexcept>
#include <string>

#include "diffvar/errors.hpp"

namespace diffvar {

namespace {

std::string pair_str(int r, int k) {
  return "(r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")";
}

// Everything inside the envelope fits 256 bits: I_m <= r^{m+1} <= 64^33 < 2^199.
const BigInt kWidestSupported = BigInt(1) << 255;

}  // namespace

bool matrix_envelope(int r, int k) {
  return r >= 1 && r <= kMaxOrder && k >= 0 && k <= r - 1 && k <= kMaxBiasLevel;
}

bool supported_pair(int r, int k) {
  return matrix_envelope(r, k) || (r >= 1 && r <= kMaxOrder && k == r - 1);
}

void require_matrix_envelope(int r, int k) {
  if (!matrix_envelope(r, k)) {
    throw std::out_of_range("order/bias level out of supported range " + pair_str(r, k) +
                            ": need 1 <= r <= 64 and 0 <= k <= min(r-1, 8)");
  }
}

void require_supported_pair(int r, int k) {
  if (!supported_pair(r, k)) {
    throw std::out_of_range("order/bias level out of supported range " + pair_str(r, k) +
                            ": need 1 <= r <= 64 and k in [0, min(r-1, 8)] or k = r-1");
  }
}

BigInt power_sum_exact(int r, int m) {
  BigInt total = 0;
  for (int c = 1; c <= r; ++c) {
    total += boost::multiprecision::pow(BigInt(c), unsigned(m));
  }
  return total;
}

BigInt binomial_exact(int n, int j) {
  if (j < 0 || j > n) return 0;
  j = std::min(j, n - j);
  BigInt acc = 1;
  for (int i = 1; i <= j; ++i) {
    acc *= n - j + i;
    acc /= i;  // exact: acc is C(n-j+i, i) after each step
  }
  return acc;
}

std::vector<BigRational> solve_e1_exact(std::vector<std::vector<BigRational>> m) {
  const int n = int(m.size());
  std::vector<BigRational> rhs(n, 0);
  rhs[0] = 1;
  std::vector<int> col_of(n);
  for (int i = 0; i < n; ++i) col_of[i] = i;

  for (int p = 0; p < n; ++p) {
    int br = p, bc = p;
    BigRational best = abs(m[p][p]);
    for (int i = p; i < n; ++i) {
      for (int j = p; j < n; ++j) {
        BigRational cand = abs(m[i][j]);
        if (cand > best) {
          best = cand;
          br = i;
          bc = j;
        }
      }
    }
    if (best == 0) {
      throw std::invalid_argument("singular moment matrix in exact solve");
    }
    std::swap(m[p], m[br]);
    std::swap(rhs[p], rhs[br]);
    for (int i = 0; i < n; ++i) std::swap(m[i][p], m[i][bc]);
    std::swap(col_of[p], col_of[bc]);
    for (int i = p + 1; i < n; ++i) {
      if (m[i][p] == 0) continue;
      BigRational f = m[i][p] / m[p][p];
      for (int j = p; j < n; ++j) m[i][j] -= f * m[p][j];
      rhs[i] -= f * rhs[p];
    }
  }

  std::vector<BigRational> x(n);
  for (int i = n - 1; i >= 0; --i) {
    BigRational s = rhs[i];
    for (int j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  std::vector<BigRational> out(n);
  for (int p = 0; p < n; ++p) out[col_of[p]] = x[p];
  return out;
}

BiasMomentMatrix power_sums(int r, int k) {
  require_matrix_envelope(r, k);
  BiasMomentMatrix out;
  out.r = r;
  out.k = k;
  out.power_sums.reserve(2 * k + 1);
  for (int j = 0; j <= 2 * k; ++j) {
    BigInt s = power_sum_exact(r, 2 * j);
    if (abs(s) >= kWidestSupported) {
      throw capacity_error("power sum exceeds the widest supported integer at " + pair_str(r, k));
    }
    out.power_sums.push_back(std::move(s));
  }

  const int dim = k + 1;
  std::vector<std::vector<BigRational>> vk(dim, std::vector<BigRational>(dim));
  out.matrix.resize(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      vk[i][j] = BigRational(out.power_sums[i + j]);
      out.matrix(i, j) = out.power_sums[i + j].convert_to<double>();
    }
  }

  out.inverse_first_column_exact = solve_e1_exact(std::move(vk));
  out.inverse_first_column.resize(dim);
  for (int s = 0; s < dim; ++s) {
    out.inverse_first_column(s) = out.inverse_first_column_exact[s].convert_to<double>();
  }
  return out;
}

BigRational delta_ordinary_exact(int r) {
  if (r < 1 || r > kMaxOrder) {
    throw std::out_of_range("order out of supported range: r=" + std::to_string(r));
  }
  BigInt c2r = binomial_exact(2 * r, r);
  BigInt c4r = binomial_exact(4 * r, 2 * r);
  return (BigRational(c4r, c2r * c2r) - 1) / 2;
}

BigRational delta_k_exact(int r, int k) {
  require_supported_pair(r, k);
  if (!matrix_envelope(r, k)) {
    return delta_ordinary_exact(r);  // k = r-1 beyond the matrix envelope
  }
  return power_sums(r, k).inverse_first_column_exact[0] / 4;
}

double delta_k(int r, int k) {
  return delta_k_exact(r, k).convert_to<double>();
}

}  // namespace diffvar
