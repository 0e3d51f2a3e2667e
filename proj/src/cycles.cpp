#include "hgc/cycles.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hgc {

namespace {

using Cycle = std::vector<NodeId>;

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Bridges by iterative lowlink DFS, as sorted edge keys.
std::vector<std::uint64_t> find_bridges(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t kUnvisited = kUnreached;
  std::vector<std::uint32_t> disc(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint64_t> bridges;
  struct Frame {
    NodeId node;
    NodeId parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, root, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      auto nb = g.neighbors(f.node);
      if (f.next < nb.size()) {
        NodeId w = nb[f.next++];
        if (w == f.parent) continue;  // simple graph: one parent edge
        if (disc[w] == kUnvisited) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.node, 0});
        } else {
          low[f.node] = std::min(low[f.node], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          NodeId p = stack.back().node;
          low[p] = std::min(low[p], low[done.node]);
          if (low[done.node] > disc[p]) bridges.push_back(edge_key(p, done.node));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<Cycle> list_triangles(const Graph& g) {
  std::vector<Cycle> triangles;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      // intersect the parts of both lists above v
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          triangles.push_back({u, v, *a});
          ++a;
          ++b;
        }
      }
    }
  }
  return triangles;
}

// Shortest cycles through one node with no triangle. Every cycle through i
// uses two of its edges; removing one of them, (i, j), the shortest cycles
// through that edge are exactly the shortest i-j paths in G - (i, j) closed by
// the edge. The girth of i is the minimum over its non-bridge edges.
class NodeCycleSearch {
 public:
  NodeCycleSearch(const Graph& g, const std::vector<std::uint64_t>& bridges)
      : g_(g), bridges_(bridges), dist_(g.node_count(), kUnreached) {}

  std::uint32_t run(NodeId i, std::vector<Cycle>& out) {
    out.clear();
    std::uint32_t best = kUnreached;
    for (NodeId j : g_.neighbors(i)) {
      if (std::binary_search(bridges_.begin(), bridges_.end(), edge_key(i, j))) continue;
      // path length must stay <= best - 1
      const std::uint32_t limit = best == kUnreached ? kUnreached : best - 1;
      const std::uint32_t d = bfs_without_edge(i, j, limit);
      if (d != kUnreached) {
        const std::uint32_t length = d + 1;
        if (length < best) {
          best = length;
          out.clear();
        }
        if (length == best) collect_paths(i, j, out);
      }
      reset();
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return best;
  }

 private:
  // Hop distance from i to j avoiding the edge (i, j), or kUnreached if above
  // `limit`. Layers below j's are complete on return.
  std::uint32_t bfs_without_edge(NodeId i, NodeId j, std::uint32_t limit) {
    dist_[i] = 0;
    touched_.push_back(i);
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      NodeId u = touched_[head];
      if (dist_[u] + 1 > limit) break;
      for (NodeId v : g_.neighbors(u)) {
        if (u == i && v == j) continue;
        if (dist_[v] != kUnreached) continue;
        dist_[v] = dist_[u] + 1;
        touched_.push_back(v);
        if (v == j) return dist_[v];
      }
    }
    return kUnreached;
  }

  void collect_paths(NodeId i, NodeId j, std::vector<Cycle>& out) {
    path_.assign(1, j);
    extend(i, out);
  }

  void extend(NodeId i, std::vector<Cycle>& out) {
    NodeId x = path_.back();
    if (x == i) {
      out.push_back(path_);
      return;
    }
    const std::uint32_t dx = dist_[x];
    for (NodeId y : g_.neighbors(x)) {
      if (dist_[y] == kUnreached || dist_[y] + 1 != dx) continue;
      path_.push_back(y);
      extend(i, out);
      path_.pop_back();
    }
  }

  void reset() {
    for (NodeId v : touched_) dist_[v] = kUnreached;
    touched_.clear();
  }

  const Graph& g_;
  const std::vector<std::uint64_t>& bridges_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> touched_;
  Cycle path_;
};

}  // namespace

CycleSet::CycleSet(std::size_t node_count, std::vector<std::vector<NodeId>> cycles,
                   std::vector<std::optional<std::uint32_t>> girth)
    : girth_(std::move(girth)) {
  if (girth_.size() != node_count) throw DomainError("girth table does not cover every node");
  for (auto& c : cycles) std::sort(c.begin(), c.end());
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  for (const auto& c : cycles) {
    if (c.size() < 3) throw DomainError("a cycle needs at least 3 nodes");
    nodes_.insert(nodes_.end(), c.begin(), c.end());
    offsets_.push_back(nodes_.size());
  }
}

std::vector<std::vector<NodeId>> CycleSet::to_vectors() const {
  std::vector<std::vector<NodeId>> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) {
    auto c = cycle(k);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

CycleSet enumerate_shortest_cycles(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::optional<std::uint32_t>> girth(n);
  std::vector<Cycle> cycles = list_triangles(g);
  for (const auto& t : cycles) {
    for (NodeId v : t) girth[v] = 3;
  }

  const auto bridges = find_bridges(g);
  std::vector<std::vector<Cycle>> per_node(n);
#pragma omp parallel
  {
    NodeCycleSearch search(g, bridges);
    std::vector<Cycle> found;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      const auto i = static_cast<NodeId>(s);
      if (girth[i] || g.degree_unchecked(i) < 2) continue;
      const std::uint32_t best = search.run(i, found);
      if (best != kUnreached) {
        girth[i] = best;
        per_node[i] = found;
      }
    }
  }
  for (auto& list : per_node) {
    for (auto& c : list) cycles.push_back(std::move(c));
  }
  return CycleSet(n, std::move(cycles), std::move(girth));
}

CycleNumberMatrix::CycleNumberMatrix(const CycleSet& cycles)
    : diagonal_(cycles.node_count(), 0) {
  std::vector<std::uint64_t> keys;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    auto c = cycles.cycle(k);
    for (std::size_t a = 0; a < c.size(); ++a) {
      ++diagonal_[c[a]];
      for (std::size_t b = a + 1; b < c.size(); ++b) keys.push_back(edge_key(c[a], c[b]));
    }
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t s = 0; s < keys.size();) {
    std::size_t e = s;
    while (e < keys.size() && keys[e] == keys[s]) ++e;
    entries_.push_back({static_cast<NodeId>(keys[s] >> 32),
                        static_cast<NodeId>(keys[s] & 0xffffffffu),
                        static_cast<std::uint32_t>(e - s)});
    s = e;
  }
}

std::uint32_t CycleNumberMatrix::count(NodeId i, NodeId j) const {
  if (i >= node_count() || j >= node_count()) throw DomainError("node id out of range");
  if (i == j) return diagonal_[i];
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i, j},
                             [](const Entry& e, const std::pair<NodeId, NodeId>& key) {
                               return std::pair{e.i, e.j} < key;
                             });
  if (it != entries_.end() && it->i == i && it->j == j) return it->count;
  return 0;
}

CycleNumberMatrix cycle_number_matrix(const CycleSet& cycles) { return CycleNumberMatrix(cycles); }

std::vector<double> cycle_ratio_values(const CycleNumberMatrix& m) {
  const std::size_t n = m.node_count();
  std::vector<std::vector<double>> terms(n);
  for (NodeId i = 0; i < n; ++i) {
    if (m.diagonal(i) > 0) terms[i].push_back(1.0);
  }
  for (const auto& e : m.off_diagonal()) {
    terms[e.i].push_back(static_cast<double>(e.count) / m.diagonal(e.j));
    terms[e.j].push_back(static_cast<double>(e.count) / m.diagonal(e.i));
  }
  std::vector<double> cr(n, 0.0);
  for (NodeId i = 0; i < n; ++i) cr[i] = sorted_sum(terms[i]);
  return cr;
}

ScoreMap cycle_ratio(const Graph& g) {
  auto matrix = cycle_number_matrix(enumerate_shortest_cycles(g));
  return ScoreMap("CR", cycle_ratio_values(matrix));
}

void write_cycles(const Graph& g, const CycleSet& cycles, std::ostream& out) {
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    bool first = true;
    for (NodeId v : cycles.cycle(k)) {
      if (!first) out << ',';
      out << g.label(v);
      first = false;
    }
    out << '\n';
  }
}

void write_cycle_matrix_csv(const Graph& g, const CycleNumberMatrix& m, std::ostream& out) {
  out << "i,j,count\n";
  std::size_t next = 0;
  const auto& entries = m.off_diagonal();
  for (NodeId i = 0; i < m.node_count(); ++i) {
    if (m.diagonal(i) > 0) out << g.label(i) << ',' << g.label(i) << ',' << m.diagonal(i) << '\n';
    for (; next < entries.size() && entries[next].i == i; ++next) {
      out << g.label(i) << ',' << g.label(entries[next].j) << ',' << entries[next].count << '\n';
    }
  }
}

}  // namespace hgc
