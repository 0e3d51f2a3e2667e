#include "hgc/centrality.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace hgc {

namespace {

constexpr std::size_t kSourceBlock = 64;

// Single-source Brandes pass: adds the dependency of `s` on every node to `acc`.
struct BrandesWorkspace {
  explicit BrandesWorkspace(std::size_t n)
      : sigma(n), dist(n), delta(n), order() { order.reserve(n); }
  std::vector<double> sigma;
  std::vector<std::int64_t> dist;
  std::vector<double> delta;
  std::vector<NodeId> order;
};

void accumulate_dependencies(const Graph& g, NodeId s, BrandesWorkspace& ws,
                             std::vector<double>& acc) {
  std::fill(ws.sigma.begin(), ws.sigma.end(), 0.0);
  std::fill(ws.dist.begin(), ws.dist.end(), -1);
  std::fill(ws.delta.begin(), ws.delta.end(), 0.0);
  ws.order.clear();

  ws.sigma[s] = 1.0;
  ws.dist[s] = 0;
  ws.order.push_back(s);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    NodeId v = ws.order[head];
    for (NodeId w : g.neighbors(v)) {
      if (ws.dist[w] < 0) {
        ws.dist[w] = ws.dist[v] + 1;
        ws.order.push_back(w);
      }
      if (ws.dist[w] == ws.dist[v] + 1) ws.sigma[w] += ws.sigma[v];
    }
  }
  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    NodeId w = *it;
    for (NodeId v : g.neighbors(w)) {
      if (ws.dist[v] == ws.dist[w] - 1) {
        ws.delta[v] += ws.sigma[v] / ws.sigma[w] * (1.0 + ws.delta[w]);
      }
    }
    if (w != s) acc[w] += ws.delta[w];
  }
}

}  // namespace

ScoreMap degree_centrality(const Graph& g) {
  std::vector<double> scores(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    scores[i] = static_cast<double>(g.degree_unchecked(i));
  }
  return ScoreMap("DC", std::move(scores));
}

ScoreMap betweenness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> scores(n, 0.0);
  if (n < 3) return ScoreMap("BC", std::move(scores));

  // Fixed source blocks summed in block order keep the result independent of
  // the thread count.
  const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
  std::vector<std::vector<double>> partial(blocks);
#pragma omp parallel
  {
    BrandesWorkspace ws(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      auto& acc = partial[static_cast<std::size_t>(b)];
      acc.assign(n, 0.0);
      const std::size_t begin = static_cast<std::size_t>(b) * kSourceBlock;
      const std::size_t end = std::min(n, begin + kSourceBlock);
      for (std::size_t s = begin; s < end; ++s) {
        accumulate_dependencies(g, static_cast<NodeId>(s), ws, acc);
      }
    }
  }
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < n; ++i) scores[i] += acc[i];
  }
  // Every unordered pair was counted from both endpoints: halve, then apply
  // the 2/((N-1)(N-2)) normalization.
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& x : scores) x *= scale;
  return ScoreMap("BC", std::move(scores));
}

ScoreMap closeness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> scores(n, 0.0);
  if (n < 2) return ScoreMap("CC", std::move(scores));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t src = 0; src < static_cast<std::int64_t>(n); ++src) {
    auto bfs = hop_distances_from(g, static_cast<NodeId>(src));
    const auto reachable = static_cast<double>(bfs.order.size() - 1);
    if (reachable == 0.0) continue;
    std::uint64_t total = 0;
    for (NodeId v : bfs.order) total += bfs.hops[v];
    scores[static_cast<std::size_t>(src)] =
        (reachable / static_cast<double>(n - 1)) * (reachable / static_cast<double>(total));
  }
  return ScoreMap("CC", std::move(scores));
}

ScoreMap k_shell(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (NodeId i = 0; i < n; ++i) {
    deg[i] = g.degree_unchecked(i);
    max_deg = std::max(max_deg, deg[i]);
  }
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (auto d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    auto count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> vert(n);
  std::vector<std::size_t> pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = bin.size() - 1; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t idx = 0; idx < n; ++idx) {
    NodeId v = vert[idx];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        auto du = deg[u];
        auto pu = pos[u];
        auto pw = bin[du];
        NodeId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  std::vector<double> scores(n);
  for (NodeId i = 0; i < n; ++i) scores[i] = static_cast<double>(std::max<std::size_t>(deg[i], 1));
  return ScoreMap("KS", std::move(scores));
}

ScoreMap local_gravity_model(const Graph& g, std::size_t radius) {
  if (radius < 1) throw DomainError("LGM radius must be >= 1");
  const std::size_t n = g.node_count();
  std::vector<double> scores(n, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t src = 0; src < static_cast<std::int64_t>(n); ++src) {
    const auto i = static_cast<NodeId>(src);
    auto ball = hop_distances_from(g, i, radius);
    std::vector<double> terms;
    terms.reserve(ball.order.size());
    for (NodeId j : ball.order) {
      if (j == i) continue;
      const auto d = static_cast<double>(ball.hops[j]);
      terms.push_back(static_cast<double>(g.degree_unchecked(j)) / (d * d));
    }
    scores[i] = static_cast<double>(g.degree_unchecked(i)) * sorted_sum(terms);
  }
  return ScoreMap("LGM", std::move(scores));
}

std::vector<double> propagate_layers(const Graph& g, std::span<const double> initial,
                                     std::size_t iterations, std::size_t first_layer) {
  const std::size_t n = g.node_count();
  if (initial.size() != n) throw DomainError("initial layer does not cover every node");
  std::vector<double> layer(initial.begin(), initial.end());
  std::vector<double> next(n);
  std::vector<double> total(n, 0.0);
  if (first_layer == 0) total = layer;
  std::vector<double> terms;
  for (std::size_t l = 1; l <= iterations; ++l) {
    const double damping = static_cast<double>(l * l);
    for (NodeId i = 0; i < n; ++i) {
      terms.clear();
      for (NodeId j : g.neighbors(i)) terms.push_back(layer[j]);
      next[i] = sorted_sum(terms) / damping;
    }
    layer.swap(next);
    if (l >= first_layer) {
      for (std::size_t i = 0; i < n; ++i) total[i] += layer[i];
    }
  }
  return total;
}

ScoreMap restricted_degree_propagation(const Graph& g, std::size_t iterations) {
  if (iterations < 1) throw DomainError("RDP iterations must be >= 1");
  std::vector<double> deg(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) deg[i] = static_cast<double>(g.degree_unchecked(i));
  return ScoreMap("RDP", propagate_layers(g, deg, iterations));
}

}  // namespace hgc
