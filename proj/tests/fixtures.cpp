#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fixtures {

namespace {

using Edges = std::vector<std::pair<NodeId, NodeId>>;

bool connected(std::size_t n, const Edges& edges) {
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (auto [u, v] : edges) {
    auto a = root(u), b = root(v);
    if (a != b) parent[a] = b, --parts;
  }
  return parts == 1;
}

}  // namespace

Graph path(std::size_t n) {
  Edges e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  Edges e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  Edges e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete(std::size_t n) {
  Edges e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph triangle() { return complete(3); }
Graph single_edge() { return path(2); }
Graph two_disjoint_edges() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }

Graph example_network() {
  return Graph::from_edges(
      8, {{0, 1}, {0, 2}, {1, 2}, {2, 6}, {2, 7}, {6, 7}, {5, 6}, {5, 7}, {4, 5}, {3, 5}});
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Edges e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Edges e;
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<NodeId> pick(0, i - 1);
    e.emplace_back(pick(rng), i);
  }
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph relabel(const Graph& g, const std::vector<NodeId>& perm) {
  std::vector<std::string> labels(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) labels[perm[i]] = g.label(i);
  Edges e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(std::move(labels), e);
}

std::vector<NodeId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  Edges all;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    Edges e;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1u) e.push_back(all[b]);
    if (n == 1 || connected(n, e)) out.push_back(Graph::from_edges(n, e));
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n) {
  auto code = [n](const Graph& g, const std::vector<NodeId>& perm) {
    std::uint32_t bits = 0;
    for (auto [u, v] : g.edges()) {
      auto a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
      bits |= 1u << (a * n + b);
    }
    return bits;
  };
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (auto& g : connected_graphs(n)) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t canonical = UINT32_MAX;
    do {
      canonical = std::min(canonical, code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canonical).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fixtures
