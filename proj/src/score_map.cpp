#include "hgc/score_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "hgc/csv.hpp"

namespace hgc {

std::vector<NodeId> rank_descending(std::span<const double> values) {
  std::vector<NodeId> order(values.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return values[a] > values[b]; });
  return order;
}

double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

ScoreMap::ScoreMap(std::string method, std::vector<double> scores)
    : method_(std::move(method)), scores_(std::move(scores)) {
  for (double s : scores_) {
    if (!std::isfinite(s)) throw DomainError(method_ + ": non-finite score");
  }
  ranking_ = rank_descending(scores_);
}

std::vector<std::size_t> ScoreMap::positions() const {
  std::vector<std::size_t> pos(ranking_.size());
  for (std::size_t r = 0; r < ranking_.size(); ++r) pos[ranking_[r]] = r + 1;
  return pos;
}

void write_scores_csv(const Graph& g, const ScoreMap& scores, std::ostream& out) {
  out << "node_label,score,rank\n";
  std::size_t rank = 0;
  for (NodeId i : scores.ranking()) {
    out << g.label(i) << ',' << csv::format_real(scores[i]) << ',' << ++rank << '\n';
  }
}

ScoreMap read_scores_csv(const Graph& g, const std::string& method, std::istream& in,
                         const std::string& score_column) {
  auto table = csv::read_table(in);
  auto label_col = table.column("node_label");
  auto score_col = table.column(score_column);
  std::vector<double> values(g.node_count(), 0.0);
  std::vector<bool> seen(g.node_count(), false);
  for (const auto& row : table.rows) {
    auto id = g.find(row[label_col]);
    if (!id) throw DomainError("unknown node label '" + row[label_col] + "'");
    if (seen[*id]) throw DomainError("duplicate node label '" + row[label_col] + "'");
    seen[*id] = true;
    values[*id] = csv::parse_real(row[score_col]);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("score file does not cover every node");
  }
  return ScoreMap(method, std::move(values));
}

}  // namespace hgc
