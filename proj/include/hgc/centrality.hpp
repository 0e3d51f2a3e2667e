#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/score_map.hpp"

namespace hgc {

/// score(i) = k_i
ScoreMap degree_centrality(const Graph& g);

/// Brandes accumulation over every source; each unordered pair's dependency
/// is scaled by 2/((N-1)(N-2)). All zeros when N < 3.
ScoreMap betweenness_centrality(const Graph& g);

/// Component-scaled closeness: (r/(N-1)) * (r / sum of distances to the r
/// reachable nodes). Isolated nodes score 0.
ScoreMap closeness_centrality(const Graph& g);

/// Shell index from iterative peeling. Isolated nodes fall in shell 1, so
/// every score is a positive integer.
ScoreMap k_shell(const Graph& g);

/// sum over 0 < d(i,j) <= radius of k_i k_j / d(i,j)^2 (hop distances).
ScoreMap local_gravity_model(const Graph& g, std::size_t radius = 2);

/// Layered neighbor propagation: layer 0 is `initial`, layer l is
/// (1/l^2) * sum of the neighbors' layer l-1. Returns the sum of layers
/// `first_layer`..`iterations`.
std::vector<double> propagate_layers(const Graph& g, std::span<const double> initial,
                                     std::size_t iterations, std::size_t first_layer = 0);

/// Degree propagated through `iterations` layers, layer 0 included.
ScoreMap restricted_degree_propagation(const Graph& g, std::size_t iterations = 2);

}  // namespace hgc
