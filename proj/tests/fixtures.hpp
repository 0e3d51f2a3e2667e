#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hgc/graph.hpp"

namespace fixtures {

using hgc::Graph;
using hgc::NodeId;

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);  // center is node 0
Graph complete(std::size_t n);
Graph triangle();
Graph single_edge();
Graph two_disjoint_edges();

/// 8-node network with cycles {0,1,2}, {2,6,7}, {5,6,7} and pendant nodes 3, 4 on node 5.
Graph example_network();

/// G(n, p) with labels "0".."n-1".
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
/// Random connected graph: a random spanning tree plus G(n, p) extra edges.
Graph random_connected(std::size_t n, double p, std::mt19937_64& rng);

/// Same graph with node i renamed perm[i]; labels travel with the nodes.
Graph relabel(const Graph& g, const std::vector<NodeId>& perm);
std::vector<NodeId> random_permutation(std::size_t n, std::mt19937_64& rng);

/// Every connected simple graph on n nodes (n <= 5), one per edge subset.
std::vector<Graph> connected_graphs(std::size_t n);
/// One representative per isomorphism class of connected graphs on n nodes (n <= 5).
std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n);

}  // namespace fixtures
