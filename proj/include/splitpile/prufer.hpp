#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "splitpile/bigint.hpp"
#include "splitpile/sandpile.hpp"
#include "splitpile/split_graph.hpp"

namespace splitpile {

// A spanning tree of S(m,n) over the global labels 1..m+n (w_j is label m+j).
// Edges are kept normalised (first < second) and sorted.
class SpanningTree {
 public:
  SpanningTree() = default;
  explicit SpanningTree(std::vector<LabelEdge> edges);

  const std::vector<LabelEdge>& edges() const { return edges_; }

  // m+n-1 distinct edges of S(m,n) forming a connected acyclic spanning graph.
  bool is_valid(std::size_t m, std::size_t n) const;

  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::vector<LabelEdge> edges_;
};

// The two-word code of a spanning tree: f collects the neighbors of deleted
// clique leaves (m-1 letters over 1..m+n), g those of deleted independent
// leaves (n-1 letters over 1..m).
struct PruferPair {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g;

  friend auto operator<=>(const PruferPair&, const PruferPair&) = default;
};

// Throws DomainError if t is not a spanning tree of S(m,n).
PruferPair encode(const SpanningTree& t, std::size_t m, std::size_t n);

// Throws DomainError on wrong lengths or letters outside the alphabets.
SpanningTree decode(const PruferPair& p, std::size_t m, std::size_t n);

// (m+n)^(m-1) * m^(n-1).
BigInt count_spanning_trees(std::size_t m, std::size_t n);

// Every spanning tree by pruned edge-subset search, sorted. Throws
// BudgetExceeded when C(#edges, m+n-1) exceeds the budget.
std::vector<SpanningTree> brute_spanning_trees(std::size_t m, std::size_t n,
                                               std::uint64_t budget = kDefaultBudget);

// Every valid code pair in lexicographic order.
std::vector<PruferPair> all_prufer_pairs(std::size_t m, std::size_t n,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace splitpile
