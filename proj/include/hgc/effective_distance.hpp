#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

/// Effective distances from one source to the nodes of its neighborhood.
///
/// A hop from u to a neighbor v costs 1 - log2(1/k_u) = 1 + log2(k_u); a path
/// costs the sum of its hops and the distance is the cheapest path. The map is
/// asymmetric: the cost of leaving a node depends on its own degree only.
struct EffectiveDistanceMap {
  NodeId source = 0;
  /// Hop radius that selected the targets (kUnbounded in unit mode).
  std::size_t radius_hops = kUnbounded;
  /// Effective-distance cap that selected the targets (infinite in hop mode).
  double radius_units = kInfiniteDistance;
  /// Dense per-node distance; kInfiniteDistance for nodes outside the neighborhood.
  std::vector<double> distance;
  /// Nodes present in the map, ascending, source included.
  std::vector<NodeId> targets;

  bool contains(NodeId j) const { return j < distance.size() && distance[j] != kInfiniteDistance; }
  std::optional<double> at(NodeId j) const {
    if (!contains(j)) return std::nullopt;
    return distance[j];
  }
};

/// Reusable solver: caches per-node hop costs for repeated per-source queries.
/// Const member functions are safe to call concurrently.
class EffectiveDistanceSolver {
 public:
  explicit EffectiveDistanceSolver(const Graph& g);

  /// Cost of one hop leaving `u`.
  double hop_cost(NodeId u) const { return hop_cost_[u]; }

  /// Distances to every node within `radius_hops` topological hops.
  EffectiveDistanceMap within_hops(NodeId source, std::size_t radius_hops) const;

  /// Distances to every node whose effective distance is at most `max_units`.
  EffectiveDistanceMap within_units(NodeId source, double max_units) const;

 private:
  void settle(NodeId source, std::vector<double>& dist,
              const std::vector<bool>* wanted, std::size_t wanted_count,
              double cap) const;

  const Graph* graph_;
  std::vector<double> hop_cost_;
};

/// ED of the single hop i -> j; throws DomainError unless i and j are adjacent.
double one_hop_effective_distance(const Graph& g, NodeId i, NodeId j);

/// Multi-hop effective distances to every node within `radius_hops` hops of `i`.
EffectiveDistanceMap effective_distances_from(const Graph& g, NodeId i,
                                              std::size_t radius_hops);

/// `source,target,effective_distance` rows, targets ascending.
void write_effective_distances_csv(const Graph& g, const EffectiveDistanceMap& map,
                                   std::ostream& out);

}  // namespace hgc
