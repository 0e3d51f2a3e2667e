#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgc/errors.hpp"

namespace hgc {

using NodeId = std::uint32_t;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Internal ids are dense (0..N-1); every node carries an external string
/// label. Neighbor lists are sorted ascending, which the triangle and
/// common-neighbor routines rely on.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labels and an edge list over internal ids.
  /// Self-loops and duplicate edges are dropped.
  static Graph from_edges(std::vector<std::string> labels,
                          const std::vector<std::pair<NodeId, NodeId>>& edges);

  /// Convenience for tests: nodes labelled "0".."n-1".
  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  /// Neighbors of `i`, sorted. Unchecked.
  std::span<const NodeId> neighbors(NodeId i) const noexcept {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::size_t degree_unchecked(NodeId i) const noexcept {
    return offsets_[i + 1] - offsets_[i];
  }
  bool has_edge(NodeId i, NodeId j) const noexcept;

  const std::string& label(NodeId i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  /// Throws DomainError when `i` is not a node of this graph.
  void check_node(NodeId i) const;

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
};

std::size_t degree(const Graph& g, NodeId i);

struct EdgeListWarnings {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

struct ParsedGraph {
  Graph graph;
  EdgeListWarnings warnings;
};

/// Reads the whitespace-separated edge-list format. Lines starting with '#'
/// or '%' are comments; blank lines are skipped. Labels receive ids in
/// first-seen order.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph load_edge_list(const std::string& path);

/// Writes one "u v" line per edge using node labels.
void write_edge_list(const Graph& g, std::ostream& out);

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Result of a (possibly hop-limited) breadth-first search.
struct HopDistances {
  NodeId source = 0;
  /// Dense per-node hop count; kUnreached for absent nodes.
  std::vector<std::uint32_t> hops;
  /// Reached nodes in BFS order (source first).
  std::vector<NodeId> order;

  bool contains(NodeId j) const { return j < hops.size() && hops[j] != kUnreached; }
};

HopDistances hop_distances_from(const Graph& g, NodeId source,
                                std::size_t max_hops = kUnbounded);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_degree = 0.0;
  double avg_distance = 0.0;
  double clustering = 0.0;
  double second_moment = 0.0;
};

/// Local clustering coefficient of one node (0 for degree < 2).
double local_clustering(const Graph& g, NodeId i);

/// Topology summary. The average distance runs over reachable
/// ordered pairs; C averages local clustering over nodes of degree >= 2.
GraphStats graph_stats(const Graph& g);

/// Degree moments only (cheap; no all-pairs search).
GraphStats degree_moments(const Graph& g);

void write_stats_csv(const std::string& network, const GraphStats& s, std::ostream& out);

}  // namespace hgc
