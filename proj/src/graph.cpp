#include "hgc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hgc/csv.hpp"

namespace hgc {

namespace {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// Normalizes to (min, max), drops self-loops, sorts and removes duplicates.
// Returns the number of duplicates removed.
std::size_t canonicalize(EdgeList& edges) {
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  auto removed = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  return removed;
}

std::size_t common_neighbor_count(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

Graph Graph::from_edges(std::vector<std::string> labels, const EdgeList& input) {
  Graph g;
  const auto n = labels.size();
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw DomainError("duplicate node label '" + g.labels_[i] + "'");
    }
  }

  EdgeList edges = input;
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
  }
  canonicalize(edges);

  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  return g;
}

Graph Graph::from_edges(std::size_t n, const EdgeList& edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_edges(std::move(labels), edges);
}

bool Graph::has_edge(NodeId i, NodeId j) const noexcept {
  if (i >= node_count() || j >= node_count()) return false;
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::check_node(NodeId i) const {
  if (i >= node_count()) {
    throw DomainError("node id " + std::to_string(i) + " out of range (N=" +
                      std::to_string(node_count()) + ")");
  }
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t degree(const Graph& g, NodeId i) {
  g.check_node(i);
  return g.degree_unchecked(i);
}

ParsedGraph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  EdgeList edges;
  EdgeListWarnings warnings;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r\v\f");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(std::move(tok));
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 2 node labels, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    NodeId u = intern(fields[0]);
    NodeId v = intern(fields[1]);
    if (u == v) {
      ++warnings.self_loops;
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw EmptyGraphError("edge list contains no edges");

  EdgeList canonical = edges;
  warnings.duplicate_edges = canonicalize(canonical);
  return {Graph::from_edges(std::move(labels), canonical), warnings};
}

ParsedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

ParsedGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

HopDistances hop_distances_from(const Graph& g, NodeId source, std::size_t max_hops) {
  g.check_node(source);
  HopDistances result;
  result.source = source;
  result.hops.assign(g.node_count(), kUnreached);
  result.hops[source] = 0;
  result.order.push_back(source);
  for (std::size_t head = 0; head < result.order.size(); ++head) {
    NodeId u = result.order[head];
    if (result.hops[u] >= max_hops) continue;
    for (NodeId v : g.neighbors(u)) {
      if (result.hops[v] == kUnreached) {
        result.hops[v] = result.hops[u] + 1;
        result.order.push_back(v);
      }
    }
  }
  return result;
}

double local_clustering(const Graph& g, NodeId i) {
  g.check_node(i);
  auto nb = g.neighbors(i);
  const auto k = nb.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (NodeId j : nb) links += common_neighbor_count(nb, g.neighbors(j));
  // each neighbor-neighbor link was seen from both ends
  return static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

GraphStats degree_moments(const Graph& g) {
  GraphStats s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  if (s.nodes == 0) return s;
  double sum_sq = 0.0;
  for (NodeId i = 0; i < s.nodes; ++i) {
    auto k = static_cast<double>(g.degree_unchecked(i));
    sum_sq += k * k;
  }
  s.avg_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.nodes);
  s.second_moment = sum_sq / static_cast<double>(s.nodes);
  return s;
}

GraphStats graph_stats(const Graph& g) {
  if (g.node_count() == 0) throw EmptyGraphError("graph_stats requires N >= 1");
  GraphStats s = degree_moments(g);
  const auto n = static_cast<std::int64_t>(g.node_count());

  std::uint64_t distance_sum = 0;
  std::uint64_t pair_count = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : distance_sum, pair_count)
  for (std::int64_t src = 0; src < n; ++src) {
    auto bfs = hop_distances_from(g, static_cast<NodeId>(src));
    for (NodeId v : bfs.order) distance_sum += bfs.hops[v];
    pair_count += bfs.order.size() - 1;
  }

  double clustering_sum = 0.0;
  std::size_t clustered_nodes = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (g.degree_unchecked(i) < 2) continue;
    clustering_sum += local_clustering(g, i);
    ++clustered_nodes;
  }
  if (pair_count > 0) {
    s.avg_distance = static_cast<double>(distance_sum) / static_cast<double>(pair_count);
  }
  if (clustered_nodes > 0) s.clustering = clustering_sum / static_cast<double>(clustered_nodes);
  return s;
}

void write_stats_csv(const std::string& network, const GraphStats& s, std::ostream& out) {
  out << "network,N,M,avg_k,avg_d,C\n"
      << network << ',' << s.nodes << ',' << s.edges << ',' << csv::format_real(s.avg_degree)
      << ',' << csv::format_real(s.avg_distance) << ',' << csv::format_real(s.clustering)
      << '\n';
}

}  // namespace hgc
