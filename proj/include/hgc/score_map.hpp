#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

/// Per-node scores of one ranking method plus the derived ranking.
///
/// The ranking lists node ids by nonincreasing score; equal scores are
/// ordered by ascending id.
class ScoreMap {
 public:
  ScoreMap() = default;
  ScoreMap(std::string method, std::vector<double> scores);

  const std::string& method() const noexcept { return method_; }
  std::size_t size() const noexcept { return scores_.size(); }
  double operator[](NodeId i) const { return scores_[i]; }
  const std::vector<double>& scores() const noexcept { return scores_; }
  const std::vector<NodeId>& ranking() const noexcept { return ranking_; }

  /// 1-based position of every node in the ranking.
  std::vector<std::size_t> positions() const;

 private:
  std::string method_;
  std::vector<double> scores_;
  std::vector<NodeId> ranking_;
};

/// Node ids sorted by nonincreasing value, ties by ascending id.
std::vector<NodeId> rank_descending(std::span<const double> values);

/// Sum of `terms` taken in ascending order, so the result depends only on
/// the multiset of values. Reorders `terms`.
double sorted_sum(std::vector<double>& terms);

/// `node_label,score,rank` rows in rank order.
void write_scores_csv(const Graph& g, const ScoreMap& scores, std::ostream& out);

/// Reads a `node_label,score[,rank]` file back into a ScoreMap over `g`.
ScoreMap read_scores_csv(const Graph& g, const std::string& method, std::istream& in,
                         const std::string& score_column = "score");

}  // namespace hgc
