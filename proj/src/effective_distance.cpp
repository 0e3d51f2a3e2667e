#include "hgc/effective_distance.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <queue>

#include "hgc/csv.hpp"

namespace hgc {

EffectiveDistanceSolver::EffectiveDistanceSolver(const Graph& g) : graph_(&g) {
  hop_cost_.resize(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto k = g.degree_unchecked(u);
    hop_cost_[u] = k == 0 ? kInfiniteDistance : 1.0 + std::log2(static_cast<double>(k));
  }
}

// Dijkstra over the directed transform (u -> v weighs hop_cost(u)). Stops once
// every wanted node is settled, or once the frontier exceeds `cap`.
void EffectiveDistanceSolver::settle(NodeId source, std::vector<double>& dist,
                                     const std::vector<bool>* wanted,
                                     std::size_t wanted_count, double cap) const {
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::vector<bool> done(graph_->node_count(), false);
  dist.assign(graph_->node_count(), kInfiniteDistance);
  dist[source] = 0.0;
  frontier.emplace(0.0, source);
  std::size_t remaining = wanted_count;
  while (!frontier.empty()) {
    auto [d, u] = frontier.top();
    frontier.pop();
    if (done[u]) continue;
    if (d > cap) break;
    done[u] = true;
    if (wanted != nullptr && (*wanted)[u] && --remaining == 0) break;
    const double next = d + hop_cost_[u];
    if (next > cap) continue;
    for (NodeId v : graph_->neighbors(u)) {
      if (!done[v] && next < dist[v]) {
        dist[v] = next;
        frontier.emplace(next, v);
      }
    }
  }
  for (NodeId u = 0; u < dist.size(); ++u) {
    if (!done[u]) dist[u] = kInfiniteDistance;
  }
}

EffectiveDistanceMap EffectiveDistanceSolver::within_hops(NodeId source,
                                                          std::size_t radius_hops) const {
  graph_->check_node(source);
  if (radius_hops < 1) throw DomainError("radius_hops must be >= 1");
  auto ball = hop_distances_from(*graph_, source, radius_hops);
  std::vector<bool> wanted(graph_->node_count(), false);
  for (NodeId v : ball.order) wanted[v] = true;

  EffectiveDistanceMap map;
  map.source = source;
  map.radius_hops = radius_hops;
  settle(source, map.distance, &wanted, ball.order.size(), kInfiniteDistance);
  for (NodeId v = 0; v < map.distance.size(); ++v) {
    if (!wanted[v]) {
      map.distance[v] = kInfiniteDistance;
    } else {
      map.targets.push_back(v);
    }
  }
  return map;
}

EffectiveDistanceMap EffectiveDistanceSolver::within_units(NodeId source,
                                                           double max_units) const {
  graph_->check_node(source);
  if (!(max_units >= 0.0)) throw DomainError("effective-distance radius must be >= 0");
  EffectiveDistanceMap map;
  map.source = source;
  map.radius_units = max_units;
  settle(source, map.distance, nullptr, 0, max_units);
  for (NodeId v = 0; v < map.distance.size(); ++v) {
    if (map.distance[v] != kInfiniteDistance) map.targets.push_back(v);
  }
  return map;
}

double one_hop_effective_distance(const Graph& g, NodeId i, NodeId j) {
  g.check_node(i);
  g.check_node(j);
  if (!g.has_edge(i, j)) {
    throw DomainError("nodes " + g.label(i) + " and " + g.label(j) + " are not adjacent");
  }
  const double transition = 1.0 / static_cast<double>(g.degree_unchecked(i));
  return 1.0 - std::log2(transition);
}

EffectiveDistanceMap effective_distances_from(const Graph& g, NodeId i,
                                              std::size_t radius_hops) {
  return EffectiveDistanceSolver(g).within_hops(i, radius_hops);
}

void write_effective_distances_csv(const Graph& g, const EffectiveDistanceMap& map,
                                   std::ostream& out) {
  out << "source,target,effective_distance\n";
  for (NodeId v : map.targets) {
    out << g.label(map.source) << ',' << g.label(v) << ',' << csv::format_real(map.distance[v])
        << '\n';
  }
}

}  // namespace hgc
