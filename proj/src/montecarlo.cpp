#include "diffvar/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "diffvar/estimator.hpp"
#include "diffvar/rng.hpp"
#include "diffvar/seqgen.hpp"

namespace diffvar {

namespace {

void parallel_for_index(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = threads > 0 ? std::size_t(threads) : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

struct Accumulator {
  double sum = 0;
  double sum_sq = 0;
  long count = 0;

  void add(double z) {
    sum += z;
    sum_sq += z * z;
    ++count;
  }
  CellResult result() const {
    CellResult out;
    out.rmse = sum / count;
    const double var = std::max(0.0, (sum_sq - sum * sum / count) / (count - 1));
    out.stderr_ = std::sqrt(var / count);
    return out;
  }
};

// All candidates on one (n, sigma, omega) cell. With common random numbers
// every candidate sees the same replicate noise; otherwise each candidate
// gets its own stream.
std::vector<CellResult> evaluate_cell(int n, double sigma, double omega,
                                      const std::vector<DifferenceSequence>& candidates,
                                      int replications, std::uint64_t stream, bool crn,
                                      double amplitude) {
  const double sigma2 = sigma * sigma;
  const double scale = double(n) / (2.0 * sigma2 * sigma2);
  Eigen::VectorXd mean(n), y(n);
  for (int i = 1; i <= n; ++i) {
    mean(i - 1) = amplitude * std::sin(omega * std::numbers::pi * double(i) / n);
  }
  std::vector<Accumulator> acc(candidates.size());
  if (crn) {
    for (int rep = 0; rep < replications; ++rep) {
      for (int i = 1; i <= n; ++i) {
        y(i - 1) = mean(i - 1) + sigma * counter_normal(stream, std::uint64_t(rep), std::uint64_t(i));
      }
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const double dev = estimate_variance(y, candidates[c].coeffs) - sigma2;
        acc[c].add(scale * dev * dev);
      }
    }
  } else {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const std::uint64_t own = key_chain(stream, std::uint64_t(c) + 1);
      for (int rep = 0; rep < replications; ++rep) {
        for (int i = 1; i <= n; ++i) {
          y(i - 1) = mean(i - 1) + sigma * counter_normal(own, std::uint64_t(rep), std::uint64_t(i));
        }
        const double dev = estimate_variance(y, candidates[c].coeffs) - sigma2;
        acc[c].add(scale * dev * dev);
      }
    }
  }
  std::vector<CellResult> out(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) out[c] = acc[c].result();
  return out;
}

std::vector<DifferenceSequence> build_candidates(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<DifferenceSequence> out;
  out.reserve(pairs.size());
  for (const auto& [r, k] : pairs) out.push_back(generate(r, k));
  return out;
}

void flag_best_per_cell(SimulationSummary& summary, std::size_t per_cell) {
  for (std::size_t base = 0; base + per_cell <= summary.records.size(); base += per_cell) {
    std::size_t best = base;
    for (std::size_t c = base + 1; c < base + per_cell; ++c) {
      if (summary.records[c].rmse < summary.records[best].rmse) best = c;
    }
    summary.records[best].best = true;
  }
}

void write_records(std::ostream& os, const SimulationSummary& summary, bool winners_only) {
  os << (winners_only ? "n,sigma,omega,r,k,rmse,stderr\n" : "n,sigma,omega,r,k,rmse,stderr,best\n");
  char line[256];
  for (const CellRecord& rec : summary.records) {
    if (winners_only && !rec.best) continue;
    if (winners_only) {
      std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%d,%d,%.17g,%.17g\n", rec.n, rec.sigma,
                    rec.omega, rec.r, rec.k, rec.rmse, rec.stderr_);
    } else {
      std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%d,%d,%.17g,%.17g,%d\n", rec.n, rec.sigma,
                    rec.omega, rec.r, rec.k, rec.rmse, rec.stderr_, rec.best ? 1 : 0);
    }
    os << line;
  }
}

}  // namespace

CellResult run_cell(int n, double sigma, double omega, const DifferenceSequence& seq,
                    int replications, std::uint64_t stream_seed, double amplitude) {
  if (replications < 1) throw std::invalid_argument("replication count must be positive");
  if (n <= seq.r) {
    throw std::invalid_argument("insufficient data: n = " + std::to_string(n) +
                                " for order r = " + std::to_string(seq.r));
  }
  validate_sequence(seq);
  return evaluate_cell(n, sigma, omega, {seq}, replications, stream_seed, true, amplitude)[0];
}

void validate_config(const SimulationConfig& cfg) {
  if (cfg.replications < 100) {
    throw std::invalid_argument("replication count must be at least 100");
  }
  if (cfg.n_values.empty() || cfg.sigma_values.empty() || cfg.omega_values.empty() ||
      cfg.candidates.empty()) {
    throw std::invalid_argument("simulation grid must be non-empty");
  }
  int max_r = 0;
  for (const auto& [r, k] : cfg.candidates) {
    require_supported_pair(r, k);
    max_r = std::max(max_r, r);
  }
  for (int n : cfg.n_values) {
    if (n <= max_r) {
      throw std::invalid_argument("every sample size must exceed the largest candidate order");
    }
  }
  for (double s : cfg.sigma_values) {
    if (!(s > 0)) throw std::invalid_argument("sigma values must be positive");
  }
  for (double w : cfg.omega_values) {
    if (!(w > 0)) throw std::invalid_argument("omega values must be positive");
  }
}

SimulationSummary best_candidate_heatmap(const SimulationConfig& cfg) {
  validate_config(cfg);
  const std::vector<DifferenceSequence> candidates = build_candidates(cfg.candidates);
  const std::size_t cells =
      cfg.n_values.size() * cfg.sigma_values.size() * cfg.omega_values.size();

  SimulationSummary summary;
  summary.records.resize(cells * candidates.size());
  parallel_for_index(cells, cfg.threads, [&](std::size_t cell) {
    const std::size_t iw = cell % cfg.omega_values.size();
    const std::size_t is = (cell / cfg.omega_values.size()) % cfg.sigma_values.size();
    const std::size_t in = cell / (cfg.omega_values.size() * cfg.sigma_values.size());
    const int n = cfg.n_values[in];
    const double sigma = cfg.sigma_values[is];
    const double omega = cfg.omega_values[iw];
    const std::uint64_t stream = key_chain(cfg.seed, cell);
    const std::vector<CellResult> res = evaluate_cell(
        n, sigma, omega, candidates, cfg.replications, stream, cfg.common_random_numbers,
        cfg.amplitude);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      CellRecord& rec = summary.records[cell * candidates.size() + c];
      rec.n = n;
      rec.sigma = sigma;
      rec.omega = omega;
      rec.r = cfg.candidates[c].first;
      rec.k = cfg.candidates[c].second;
      rec.rmse = res[c].rmse;
      rec.stderr_ = res[c].stderr_;
    }
  });
  flag_best_per_cell(summary, candidates.size());
  return summary;
}

SimulationSummary rmse_vs_n_curves(const std::vector<std::pair<int, int>>& candidate_pairs,
                                   const std::vector<std::pair<double, double>>& sigma_omega,
                                   const std::vector<int>& n_values, int replications,
                                   std::uint64_t seed, bool common_random_numbers,
                                   double amplitude, int threads) {
  if (candidate_pairs.empty() || sigma_omega.empty() || n_values.empty()) {
    throw std::invalid_argument("curve protocol must be non-empty");
  }
  if (replications < 100) {
    throw std::invalid_argument("replication count must be at least 100");
  }
  const std::vector<DifferenceSequence> candidates = build_candidates(candidate_pairs);
  for (const DifferenceSequence& seq : candidates) {
    for (int n : n_values) {
      if (n <= seq.r) {
        throw std::invalid_argument("every sample size must exceed the largest candidate order");
      }
    }
  }
  const std::size_t cells = sigma_omega.size() * n_values.size();
  SimulationSummary summary;
  summary.records.resize(cells * candidates.size());
  parallel_for_index(cells, threads, [&](std::size_t cell) {
    const std::size_t in = cell % n_values.size();
    const std::size_t is = cell / n_values.size();
    const int n = n_values[in];
    const auto [sigma, omega] = sigma_omega[is];
    const std::uint64_t stream = key_chain(seed, cell);
    const std::vector<CellResult> res = evaluate_cell(n, sigma, omega, candidates, replications,
                                                      stream, common_random_numbers, amplitude);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      CellRecord& rec = summary.records[cell * candidates.size() + c];
      rec.n = n;
      rec.sigma = sigma;
      rec.omega = omega;
      rec.r = candidate_pairs[c].first;
      rec.k = candidate_pairs[c].second;
      rec.rmse = res[c].rmse;
      rec.stderr_ = res[c].stderr_;
    }
  });
  flag_best_per_cell(summary, candidates.size());
  return summary;
}

void write_summary_csv(std::ostream& os, const SimulationSummary& summary) {
  write_records(os, summary, false);
}

void write_winners_csv(std::ostream& os, const SimulationSummary& summary) {
  write_records(os, summary, true);
}

}  // namespace diffvar
