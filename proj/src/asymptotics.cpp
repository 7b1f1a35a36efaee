#include "diffvar/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "diffvar/seqgen.hpp"

namespace diffvar {

double c_coefficient(const DifferenceSequence& seq, int p) {
  if (p < 0) throw std::invalid_argument("expansion order must be nonnegative");
  if (p > seq.r) {
    throw std::invalid_argument("expansion order " + std::to_string(p) +
                                " exceeds sequence order " + std::to_string(seq.r));
  }
  return constraint_functional(seq.coeffs, p);
}

AsymptoticReport theorem3_report(int r, int k, const MeanFunction& g, const ErrorModel& err,
                                 int n) {
  require_supported_pair(r, k);
  validate_error_model(err);
  if (n <= r) {
    throw std::invalid_argument("sample size must exceed the order");
  }

  AsymptoticReport rep;
  rep.r = r;
  rep.k = k;
  rep.n = n;
  rep.sequence = generate(r, k);
  rep.c_next = c_coefficient(rep.sequence, k + 1);
  rep.j_next = j_functional(g, k + 1);

  const double s4 = std::pow(err.sigma, 4);
  const double var_eps2 = err.var_eps_sq();
  const double vk11 = 4.0 * delta_k(r, k);

  rep.bias_leading = rep.c_next * rep.c_next * rep.j_next * std::pow(double(n), -2.0 * (k + 1));
  rep.var_leading = (var_eps2 + s4 * vk11) / n;
  rep.rvar = 1.0 + s4 * vk11 / var_eps2;
  rep.rsb = double(n) * rep.bias_leading * rep.bias_leading / var_eps2;
  rep.rmse = rep.rvar + rep.rsb;
  return rep;
}

std::vector<AsymptoticReport> figure2_curves(const MeanFunction& g, const ErrorModel& err, int n,
                                             int r_max) {
  if (r_max < 1 || r_max > kMaxOrder) {
    throw std::out_of_range("r_max out of supported range: " + std::to_string(r_max));
  }
  std::vector<AsymptoticReport> out;
  for (int r = 1; r <= r_max; ++r) {
    for (int k = 0; k <= r - 1; ++k) {
      if (k > 3 && k != r - 1) continue;
      out.push_back(theorem3_report(r, k, g, err, n));
    }
  }
  return out;
}

}  // namespace diffvar
