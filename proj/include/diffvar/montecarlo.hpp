#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "diffvar/sequence.hpp"

namespace diffvar {

// Scaled empirical error of one estimator on one setting:
// rmse = (n / 2 sigma^4) * mean over replicates of (sigma2_hat - sigma^2)^2,
// with its Monte Carlo standard error.
struct CellResult {
  double rmse = 0;
  double stderr_ = 0;
};

// Replicate rep draws eps_i = sigma * N(0,1) from the counter stream keyed by
// (stream_seed, rep, i) and observes Y_i = amplitude sin(omega pi i/n) + eps_i.
CellResult run_cell(int n, double sigma, double omega, const DifferenceSequence& seq,
                    int replications, std::uint64_t stream_seed, double amplitude = 5.0);

struct SimulationConfig {
  std::vector<int> n_values;
  std::vector<double> sigma_values;
  std::vector<double> omega_values;
  std::vector<std::pair<int, int>> candidates;  // (r, k)
  int replications = 2000;
  std::uint64_t seed = 20240817ull;
  double amplitude = 5.0;
  // Same noise stream for every candidate within a cell; winners are rank
  // statistics, so coupled comparisons are sharper.
  bool common_random_numbers = true;
  int threads = 0;  // 0 = hardware concurrency
};

void validate_config(const SimulationConfig& cfg);

struct CellRecord {
  int n = 0;
  double sigma = 0;
  double omega = 0;
  int r = 0;
  int k = 0;
  double rmse = 0;
  double stderr_ = 0;
  bool best = false;
};

struct SimulationSummary {
  std::vector<CellRecord> records;  // one per (cell, candidate), cell-major
};

// Evaluates every candidate on every (n, sigma, omega) cell and flags the
// smallest RMSE per cell. Cells run in parallel; records land in a fixed
// order, so output is identical under any scheduling.
SimulationSummary best_candidate_heatmap(const SimulationConfig& cfg);

// Curve protocol of the cross-sectional studies: explicit candidate set,
// a few (sigma, omega) settings, and a sweep over n.
SimulationSummary rmse_vs_n_curves(const std::vector<std::pair<int, int>>& candidates,
                                   const std::vector<std::pair<double, double>>& sigma_omega,
                                   const std::vector<int>& n_values, int replications,
                                   std::uint64_t seed, bool common_random_numbers = true,
                                   double amplitude = 5.0, int threads = 0);

// summary.csv layout: n,sigma,omega,r,k,rmse,stderr,best.
void write_summary_csv(std::ostream& os, const SimulationSummary& summary);
// winners.csv layout: one row per cell, same columns minus `best`.
void write_winners_csv(std::ostream& os, const SimulationSummary& summary);

}  // namespace diffvar
