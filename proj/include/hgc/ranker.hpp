#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/score_map.hpp"

namespace hgc {

/// How the gravity neighborhood of a node is delimited.
enum class Truncation {
  /// Nodes within R topological hops.
  kHops,
  /// Nodes whose effective distance is at most R.
  kEffectiveUnits,
};

std::string_view to_string(Truncation t);
Truncation parse_truncation(std::string_view text);

struct HgcConfig {
  std::size_t radius = 2;
  std::size_t iterations = 2;
  Truncation truncation = Truncation::kHops;
  /// Whether RCP includes the layer-0 cycle ratio itself.
  bool include_initial_layer = true;

  void validate() const;
};

/// Burt's network constraint per node,
///   c_i = sum_{j in N(i)} (p_ij + sum_{q in N(i) & N(j)} p_iq p_qj)^2,
/// with p_ij = 1/k_i on an unweighted graph. Isolated nodes get 0.
std::vector<double> constraint_coefficients(const Graph& g);

/// Gravity interaction: e^{-c_i} * sum over the neighborhood of k_i k_j / ED_{j|i}^2.
ScoreMap gm_scores(const Graph& g, const HgcConfig& cfg = {});
ScoreMap gm_scores(const Graph& g, const HgcConfig& cfg, std::span<const double> constraint);

/// Restricted cycle-ratio propagation seeded with `cycle_ratio`.
ScoreMap rcp_scores(const Graph& g, std::span<const double> cycle_ratio, const HgcConfig& cfg = {});
/// Same, seeded with the graph's own cycle ratio.
ScoreMap rcp_scores(const Graph& g, const HgcConfig& cfg = {});

/// <GM> / <RCP> over all nodes; 0 when <RCP> is 0.
double balancing_factor(const ScoreMap& gm, const ScoreMap& rcp);

struct HgcBreakdown {
  ScoreMap gm;
  ScoreMap rcp;
  double gamma = 0.0;
  ScoreMap hgc;
};

/// Full pipeline: HGC(i) = GM(i) + gamma * RCP(i).
HgcBreakdown hgc_breakdown(const Graph& g, const HgcConfig& cfg = {});
ScoreMap hgc_scores(const Graph& g, const HgcConfig& cfg = {});

/// Combines precomputed parts.
ScoreMap fuse(const ScoreMap& gm, const ScoreMap& rcp, double gamma);

/// `node_label,gm,rcp,gamma,hgc,rank` rows in HGC rank order.
void write_hgc_csv(const Graph& g, const HgcBreakdown& parts, std::ostream& out);

}  // namespace hgc
