#include "hgc/ranker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>

#include "hgc/centrality.hpp"
#include "hgc/csv.hpp"
#include "hgc/cycles.hpp"
#include "hgc/effective_distance.hpp"

namespace hgc {

std::string_view to_string(Truncation t) {
  return t == Truncation::kHops ? "hops" : "effective-units";
}

Truncation parse_truncation(std::string_view text) {
  if (text == "hops") return Truncation::kHops;
  if (text == "effective-units") return Truncation::kEffectiveUnits;
  throw DomainError("unknown truncation mode '" + std::string(text) +
                    "' (expected hops or effective-units)");
}

void HgcConfig::validate() const {
  if (radius < 1) throw DomainError("truncation radius must be >= 1");
  if (iterations < 1) throw DomainError("iterations must be >= 1");
}

std::vector<double> constraint_coefficients(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> c(n, 0.0);
  std::vector<double> outer;
  std::vector<double> inner;
  for (NodeId i = 0; i < n; ++i) {
    auto ni = g.neighbors(i);
    if (ni.empty()) continue;
    const double p_i = 1.0 / static_cast<double>(ni.size());
    outer.clear();
    for (NodeId j : ni) {
      // indirect investment through common neighbors q
      inner.clear();
      auto nj = g.neighbors(j);
      auto a = ni.begin();
      auto b = nj.begin();
      while (a != ni.end() && b != nj.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          inner.push_back(p_i / static_cast<double>(g.degree_unchecked(*a)));
          ++a;
          ++b;
        }
      }
      const double investment = p_i + sorted_sum(inner);
      outer.push_back(investment * investment);
    }
    c[i] = sorted_sum(outer);
  }
  return c;
}

ScoreMap gm_scores(const Graph& g, const HgcConfig& cfg) {
  return gm_scores(g, cfg, constraint_coefficients(g));
}

ScoreMap gm_scores(const Graph& g, const HgcConfig& cfg, std::span<const double> constraint) {
  cfg.validate();
  const std::size_t n = g.node_count();
  if (constraint.size() != n) throw DomainError("constraint vector does not cover every node");
  const EffectiveDistanceSolver solver(g);
  std::vector<double> scores(n, 0.0);
#pragma omp parallel
  {
    std::vector<double> terms;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      const auto i = static_cast<NodeId>(s);
      if (g.degree_unchecked(i) == 0) continue;
      auto ed = cfg.truncation == Truncation::kHops
                    ? solver.within_hops(i, cfg.radius)
                    : solver.within_units(i, static_cast<double>(cfg.radius));
      terms.clear();
      for (NodeId j : ed.targets) {
        if (j == i) continue;
        const double d = ed.distance[j];
        terms.push_back(static_cast<double>(g.degree_unchecked(j)) / (d * d));
      }
      scores[i] = std::exp(-constraint[i]) * static_cast<double>(g.degree_unchecked(i)) *
                  sorted_sum(terms);
    }
  }
  return ScoreMap("GM", std::move(scores));
}

ScoreMap rcp_scores(const Graph& g, std::span<const double> cycle_ratio, const HgcConfig& cfg) {
  cfg.validate();
  return ScoreMap("RCP", propagate_layers(g, cycle_ratio, cfg.iterations,
                                          cfg.include_initial_layer ? 0 : 1));
}

ScoreMap rcp_scores(const Graph& g, const HgcConfig& cfg) {
  const auto cr = cycle_ratio(g);
  return rcp_scores(g, cr.scores(), cfg);
}

double balancing_factor(const ScoreMap& gm, const ScoreMap& rcp) {
  if (gm.size() != rcp.size()) throw DomainError("GM and RCP cover different node sets");
  if (gm.size() == 0) return 0.0;
  std::vector<double> a = gm.scores();
  std::vector<double> b = rcp.scores();
  const double mean_rcp = sorted_sum(b) / static_cast<double>(b.size());
  if (mean_rcp == 0.0) return 0.0;
  const double mean_gm = sorted_sum(a) / static_cast<double>(a.size());
  return mean_gm / mean_rcp;
}

ScoreMap fuse(const ScoreMap& gm, const ScoreMap& rcp, double gamma) {
  if (gm.size() != rcp.size()) throw DomainError("GM and RCP cover different node sets");
  std::vector<double> out(gm.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = gm.scores()[i] + gamma * rcp.scores()[i];
  return ScoreMap("HGC", std::move(out));
}

HgcBreakdown hgc_breakdown(const Graph& g, const HgcConfig& cfg) {
  cfg.validate();
  HgcBreakdown parts;
  parts.gm = gm_scores(g, cfg);
  parts.rcp = rcp_scores(g, cfg);
  parts.gamma = balancing_factor(parts.gm, parts.rcp);
  parts.hgc = fuse(parts.gm, parts.rcp, parts.gamma);
  return parts;
}

ScoreMap hgc_scores(const Graph& g, const HgcConfig& cfg) { return hgc_breakdown(g, cfg).hgc; }

void write_hgc_csv(const Graph& g, const HgcBreakdown& parts, std::ostream& out) {
  out << "node_label,gm,rcp,gamma,hgc,rank\n";
  const auto gamma = csv::format_real(parts.gamma);
  std::size_t rank = 0;
  for (NodeId i : parts.hgc.ranking()) {
    out << g.label(i) << ',' << csv::format_real(parts.gm[i]) << ','
        << csv::format_real(parts.rcp[i]) << ',' << gamma << ','
        << csv::format_real(parts.hgc[i]) << ',' << ++rank << '\n';
  }
}

}  // namespace hgc
