#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

/// Discrete-time SIR with per-edge infection probability `beta` and certain
/// recovery after one infectious step.
struct SirConfig {
  double beta = 0.0;
  /// Recovery probability; only 1 is supported.
  double recovery = 1.0;
  std::size_t runs = 1000;
  std::uint64_t master_seed = 0;
  /// Step cap; 0 means N.
  std::size_t max_steps = 0;

  void validate() const;
};

struct SirTrajectory {
  /// F(t) = |I| + |R| after step t; entry 0 is the seed count.
  std::vector<std::uint32_t> f_of_t;
  std::uint32_t final_size = 0;
};

struct SirSummary {
  /// Mean final outbreak size with each node as the sole seed.
  std::vector<double> influence;
  /// Standard error of each mean.
  std::vector<double> standard_error;
  double beta_used = 0.0;
  std::size_t runs = 0;
  std::uint64_t master_seed = 0;
};

/// <k> / (<k^2> - <k>). Throws DegenerateThresholdError for edgeless graphs
/// or when <k^2> = <k>.
double epidemic_threshold(const Graph& g);

/// Seed of the random stream for one run. Every run draws from its own
/// mt19937_64 seeded with splitmix64(master_seed ^ splitmix64(run_index + phi)),
/// so runs are independent of scheduling.
std::uint64_t run_stream_seed(std::uint64_t master_seed, std::uint64_t run_index);

/// One epidemic. Synchronous steps: every infected node tries each susceptible
/// neighbor once (Bernoulli(beta)), then recovers. Nodes infected during a
/// step start transmitting in the next one.
SirTrajectory simulate_once(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg,
                            std::uint64_t run_index);

/// Single-seed ground truth for every node. Node i uses run indices
/// i*runs .. i*runs + runs - 1.
SirSummary spreading_influence(const Graph& g, const SirConfig& cfg);

/// Mean F(t) over `cfg.runs` epidemics started from all `seeds` at once
/// (run indices 0..runs-1). Shorter trajectories are padded with their final
/// value.
std::vector<double> top_k_trajectory(const Graph& g, std::span<const NodeId> seeds,
                                     const SirConfig& cfg);

/// `t,F_mean`
void write_trajectory_csv(std::span<const double> f_mean, std::ostream& out);
/// `node_label,influence`
void write_influence_csv(const Graph& g, const SirSummary& s, std::ostream& out);
/// Reads a `node_label,influence` file; every node of `g` must appear once.
SirSummary read_influence_csv(const Graph& g, std::istream& in);

}  // namespace hgc
