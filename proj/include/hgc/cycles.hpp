#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hgc/graph.hpp"
#include "hgc/score_map.hpp"

namespace hgc {

/// The network's shortest associated cycles.
///
/// For every node on at least one cycle, all cycles through it whose length
/// equals its girth are collected; the set is the duplicate-free union over
/// nodes. A cycle is identified by its node set, stored sorted ascending.
/// Cycles are ordered lexicographically.
class CycleSet {
 public:
  CycleSet() = default;
  CycleSet(std::size_t node_count, std::vector<std::vector<NodeId>> cycles,
           std::vector<std::optional<std::uint32_t>> girth);

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  std::span<const NodeId> cycle(std::size_t k) const {
    return {nodes_.data() + offsets_[k], nodes_.data() + offsets_[k + 1]};
  }
  std::size_t node_count() const noexcept { return girth_.size(); }

  /// Length of the shortest cycle through `i`; nullopt when `i` is on no cycle.
  std::optional<std::uint32_t> girth(NodeId i) const { return girth_.at(i); }

  std::vector<std::vector<NodeId>> to_vectors() const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::optional<std::uint32_t>> girth_;
};

CycleSet enumerate_shortest_cycles(const Graph& g);

/// Sparse symmetric counts c_ij of stored cycles containing both i and j.
class CycleNumberMatrix {
 public:
  struct Entry {
    NodeId i;
    NodeId j;
    std::uint32_t count;
  };

  CycleNumberMatrix() = default;
  explicit CycleNumberMatrix(const CycleSet& cycles);

  std::size_t node_count() const noexcept { return diagonal_.size(); }
  /// c_ij; c_ii is the number of stored cycles through i.
  std::uint32_t count(NodeId i, NodeId j) const;
  std::uint32_t diagonal(NodeId i) const { return diagonal_.at(i); }
  /// Nonzero entries with i < j, ordered by (i, j).
  const std::vector<Entry>& off_diagonal() const noexcept { return entries_; }

 private:
  std::vector<std::uint32_t> diagonal_;
  std::vector<Entry> entries_;
};

CycleNumberMatrix cycle_number_matrix(const CycleSet& cycles);

/// CR(i) = sum over j with c_ij > 0 of c_ij / c_jj (j = i included); 0 when c_ii = 0.
std::vector<double> cycle_ratio_values(const CycleNumberMatrix& m);
ScoreMap cycle_ratio(const Graph& g);

/// One line per cycle: comma-separated node labels.
void write_cycles(const Graph& g, const CycleSet& cycles, std::ostream& out);
/// `i,j,count` rows for every nonzero entry with i <= j.
void write_cycle_matrix_csv(const Graph& g, const CycleNumberMatrix& m, std::ostream& out);

}  // namespace hgc
