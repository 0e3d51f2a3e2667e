#include "hgc/metrics.hpp"

#include <algorithm>
#include <cstdint>

namespace hgc {

double kendall_tau(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("kendall_tau: length mismatch");
  const std::size_t n = a.size();
  if (n < 2) throw DomainError("kendall_tau needs at least 2 elements");
  std::int64_t balance = 0;  // n_c - n_d
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : balance)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double da = a[i] - a[j];
      const double db = b[i] - b[j];
      if (da == 0.0 || db == 0.0) continue;
      balance += (da > 0.0) == (db > 0.0) ? 1 : -1;
    }
  }
  const auto nn = static_cast<double>(n);
  return 2.0 * static_cast<double>(balance) / (nn * (nn - 1.0));
}

double jaccard_top_k(std::span<const NodeId> rank_a, std::span<const NodeId> rank_b,
                     std::size_t k) {
  if (k < 1 || k > rank_a.size() || k > rank_b.size()) {
    throw DomainError("jaccard_top_k: k must lie in [1, N]");
  }
  std::vector<NodeId> x(rank_a.begin(), rank_a.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<NodeId> y(rank_b.begin(), rank_b.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<NodeId> common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
  const auto overlap = static_cast<double>(common.size());
  return overlap / (2.0 * static_cast<double>(k) - overlap);
}

double monotonicity(std::span<const double> scores) {
  const std::size_t n = scores.size();
  if (n < 2) throw DomainError("monotonicity needs at least 2 scores");
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  double tied = 0.0;
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s;
    while (e < n && sorted[e] == sorted[s]) ++e;
    const auto group = static_cast<double>(e - s);
    tied += group * (group - 1.0);
    s = e;
  }
  const auto nn = static_cast<double>(n);
  const double bracket = 1.0 - tied / (nn * (nn - 1.0));
  return bracket * bracket;
}

EvalReport evaluate_method(const ScoreMap& method_scores, const SirSummary& ground_truth,
                           std::span<const std::size_t> k_list) {
  if (method_scores.size() != ground_truth.influence.size()) {
    throw DomainError("method scores and ground truth cover different node sets");
  }
  EvalReport report;
  report.method = method_scores.method();
  report.kendall_tau = kendall_tau(method_scores.scores(), ground_truth.influence);
  const auto truth_rank = rank_descending(ground_truth.influence);
  for (std::size_t k : k_list) {
    report.jaccard_at_k[k] = jaccard_top_k(method_scores.ranking(), truth_rank, k);
  }
  report.monotonicity = monotonicity(method_scores.scores());
  return report;
}

}  // namespace hgc
