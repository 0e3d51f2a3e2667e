#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/score_map.hpp"
#include "hgc/sir.hpp"

namespace hgc {

/// tau-a: 2(n_c - n_d) / (N(N-1)); pairs tied in either list count as neither.
double kendall_tau(std::span<const double> a, std::span<const double> b);

/// |X & Y| / |X | Y| for the top-k node sets of two rankings.
double jaccard_top_k(std::span<const NodeId> rank_a, std::span<const NodeId> rank_b,
                     std::size_t k);

/// [1 - sum_r N_r(N_r - 1) / (N(N-1))]^2, grouping exactly equal scores.
double monotonicity(std::span<const double> scores);
inline double monotonicity(const ScoreMap& s) { return monotonicity(s.scores()); }

struct EvalReport {
  std::string method;
  double kendall_tau = 0.0;
  std::map<std::size_t, double> jaccard_at_k;
  double monotonicity = 0.0;
};

/// Binds a method's ranking to the SIR ground truth.
EvalReport evaluate_method(const ScoreMap& method_scores, const SirSummary& ground_truth,
                           std::span<const std::size_t> k_list);

}  // namespace hgc
