#include "hgc/sir.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "hgc/csv.hpp"

namespace hgc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class State : std::uint8_t { kSusceptible, kInfected, kRecovered };

// Reusable per-thread buffers; only nodes touched by an epidemic are reset.
class Epidemic {
 public:
  explicit Epidemic(const Graph& g) : g_(g), state_(g.node_count(), State::kSusceptible) {}

  void run(std::span<const NodeId> seeds, const SirConfig& cfg, std::uint64_t run_index,
           SirTrajectory& out) {
    std::mt19937_64 rng(run_stream_seed(cfg.master_seed, run_index));
    const std::size_t max_steps = cfg.max_steps == 0 ? g_.node_count() : cfg.max_steps;

    current_.clear();
    for (NodeId s : seeds) {
      if (state_[s] == State::kSusceptible) {
        state_[s] = State::kInfected;
        current_.push_back(s);
        touched_.push_back(s);
      }
    }
    auto reached = static_cast<std::uint32_t>(current_.size());
    out.f_of_t.assign(1, reached);

    for (std::size_t step = 0; step < max_steps && !current_.empty(); ++step) {
      next_.clear();
      for (NodeId u : current_) {
        for (NodeId v : g_.neighbors(u)) {
          if (state_[v] != State::kSusceptible) continue;
          const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          if (draw < cfg.beta) {
            state_[v] = State::kInfected;
            next_.push_back(v);
            touched_.push_back(v);
          }
        }
      }
      for (NodeId u : current_) state_[u] = State::kRecovered;
      reached += static_cast<std::uint32_t>(next_.size());
      out.f_of_t.push_back(reached);
      current_.swap(next_);
    }
    out.final_size = reached;

    for (NodeId v : touched_) state_[v] = State::kSusceptible;
    touched_.clear();
  }

 private:
  const Graph& g_;
  std::vector<State> state_;
  std::vector<NodeId> current_;
  std::vector<NodeId> next_;
  std::vector<NodeId> touched_;
};

void check_seeds(const Graph& g, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw DomainError("SIR needs at least one seed");
  for (NodeId s : seeds) g.check_node(s);
}

}  // namespace

void SirConfig::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
  if (recovery != 1.0) throw DomainError("only recovery probability 1 is supported");
  if (runs < 1) throw DomainError("runs must be >= 1");
}

double epidemic_threshold(const Graph& g) {
  if (g.edge_count() == 0) throw DegenerateThresholdError("epidemic threshold needs at least one edge");
  std::uint64_t sum_k = 0;
  std::uint64_t sum_k2 = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::uint64_t k = g.degree_unchecked(i);
    sum_k += k;
    sum_k2 += k * k;
  }
  if (sum_k2 == sum_k) {
    throw DegenerateThresholdError("<k^2> equals <k>; the epidemic threshold is undefined");
  }
  const auto n = static_cast<double>(g.node_count());
  const double k1 = static_cast<double>(sum_k) / n;
  const double k2 = static_cast<double>(sum_k2) / n;
  return k1 / (k2 - k1);
}

std::uint64_t run_stream_seed(std::uint64_t master_seed, std::uint64_t run_index) {
  return splitmix64(master_seed ^ splitmix64(run_index + 0x9e3779b97f4a7c15ULL));
}

SirTrajectory simulate_once(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg,
                            std::uint64_t run_index) {
  cfg.validate();
  check_seeds(g, seeds);
  Epidemic epidemic(g);
  SirTrajectory out;
  epidemic.run(seeds, cfg, run_index, out);
  return out;
}

SirSummary spreading_influence(const Graph& g, const SirConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.node_count();
  SirSummary summary;
  summary.influence.assign(n, 0.0);
  summary.standard_error.assign(n, 0.0);
  summary.beta_used = cfg.beta;
  summary.runs = cfg.runs;
  summary.master_seed = cfg.master_seed;
  const auto runs = static_cast<double>(cfg.runs);
#pragma omp parallel
  {
    Epidemic epidemic(g);
    SirTrajectory traj;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      const auto i = static_cast<NodeId>(s);
      const NodeId seed[] = {i};
      std::uint64_t sum = 0;
      std::uint64_t sum_sq = 0;
      for (std::size_t r = 0; r < cfg.runs; ++r) {
        epidemic.run(seed, cfg, static_cast<std::uint64_t>(i) * cfg.runs + r, traj);
        sum += traj.final_size;
        sum_sq += static_cast<std::uint64_t>(traj.final_size) * traj.final_size;
      }
      const double mean = static_cast<double>(sum) / runs;
      summary.influence[i] = mean;
      if (cfg.runs > 1) {
        const double var = (static_cast<double>(sum_sq) - runs * mean * mean) / (runs - 1.0);
        summary.standard_error[i] = std::sqrt(std::max(var, 0.0) / runs);
      }
    }
  }
  return summary;
}

std::vector<double> top_k_trajectory(const Graph& g, std::span<const NodeId> seeds,
                                     const SirConfig& cfg) {
  cfg.validate();
  check_seeds(g, seeds);
  std::vector<std::vector<std::uint32_t>> runs(cfg.runs);
#pragma omp parallel
  {
    Epidemic epidemic(g);
    SirTrajectory traj;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(cfg.runs); ++r) {
      epidemic.run(seeds, cfg, static_cast<std::uint64_t>(r), traj);
      runs[static_cast<std::size_t>(r)] = traj.f_of_t;
    }
  }
  std::size_t length = 0;
  for (const auto& f : runs) length = std::max(length, f.size());
  std::vector<std::uint64_t> totals(length, 0);
  for (const auto& f : runs) {
    for (std::size_t t = 0; t < length; ++t) totals[t] += t < f.size() ? f[t] : f.back();
  }
  std::vector<double> mean(length);
  for (std::size_t t = 0; t < length; ++t) {
    mean[t] = static_cast<double>(totals[t]) / static_cast<double>(cfg.runs);
  }
  return mean;
}

void write_trajectory_csv(std::span<const double> f_mean, std::ostream& out) {
  out << "t,F_mean\n";
  for (std::size_t t = 0; t < f_mean.size(); ++t) out << t << ',' << csv::format_real(f_mean[t]) << '\n';
}

void write_influence_csv(const Graph& g, const SirSummary& s, std::ostream& out) {
  out << "node_label,influence\n";
  for (NodeId i = 0; i < g.node_count(); ++i) {
    out << g.label(i) << ',' << csv::format_real(s.influence.at(i)) << '\n';
  }
}

SirSummary read_influence_csv(const Graph& g, std::istream& in) {
  auto table = csv::read_table(in);
  auto label_col = table.column("node_label");
  auto value_col = table.column("influence");
  SirSummary s;
  s.influence.assign(g.node_count(), 0.0);
  s.standard_error.assign(g.node_count(), 0.0);
  std::vector<bool> seen(g.node_count(), false);
  for (const auto& row : table.rows) {
    auto id = g.find(row[label_col]);
    if (!id) throw DomainError("unknown node label '" + row[label_col] + "' in influence file");
    if (seen[*id]) throw DomainError("duplicate node '" + row[label_col] + "' in influence file");
    seen[*id] = true;
    s.influence[*id] = csv::parse_real(row[value_col]);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("influence file does not cover every node");
  }
  return s;
}

}  // namespace hgc
