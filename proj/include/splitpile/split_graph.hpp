#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace splitpile {

enum class Side { Clique, Independent };

// A vertex of S(m,n), addressed by side and a 1-based index within that side.
// Ordering follows v_1 < ... < v_m < w_1 < ... < w_n.
struct VertexId {
  Side side = Side::Clique;
  std::size_t index = 1;

  static constexpr VertexId clique(std::size_t i) { return {Side::Clique, i}; }
  static constexpr VertexId independent(std::size_t j) { return {Side::Independent, j}; }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

// "v3" or "w2".
std::string to_string(VertexId v);

// An undirected edge between global labels (1-based, v_{m+j} := w_j), first < second.
using LabelEdge = std::pair<std::size_t, std::size_t>;

// The complete split graph S(m,n): a clique on v_1..v_m, an independent set
// w_1..w_n, and every clique/independent pair joined. The sink is part of the
// graph because every construction on configurations depends on which side it is.
class SplitGraph {
 public:
  // Throws DomainError when m or n is zero, InvalidVertex when the sink is out of range.
  SplitGraph(std::size_t m, std::size_t n, VertexId sink);

  // Sink at v_m.
  static SplitGraph with_clique_sink(std::size_t m, std::size_t n);
  // Sink at w_n.
  static SplitGraph with_independent_sink(std::size_t m, std::size_t n);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  VertexId sink() const { return sink_; }
  Side sink_side() const { return sink_.side; }
  std::size_t vertex_count() const { return m_ + n_; }

  bool contains(VertexId v) const;
  void require_vertex(VertexId v) const;

  std::size_t degree(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  // Neighbors of v in global vertex order.
  std::vector<VertexId> neighbors(VertexId v) const;

  // All vertices in global order, and all non-sink vertices in global order.
  std::vector<VertexId> vertices() const;
  std::vector<VertexId> non_sink_vertices() const;

  // Non-sink vertex counts per side, i.e. the configuration part lengths.
  std::size_t clique_part_size() const;
  std::size_t independent_part_size() const;

  // Global labelling v_1..v_{m+n} with w_j relabelled as v_{m+j}.
  std::size_t label(VertexId v) const;
  VertexId vertex_of_label(std::size_t label) const;

  friend bool operator==(const SplitGraph&, const SplitGraph&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  VertexId sink_;
};

inline std::size_t degree(const SplitGraph& g, VertexId v) { return g.degree(v); }
inline std::vector<VertexId> neighbors(const SplitGraph& g, VertexId v) { return g.neighbors(v); }

// Every edge of S(m,n) over the global labels, sorted lexicographically.
std::vector<LabelEdge> as_generic_graph(const SplitGraph& g);

}  // namespace splitpile
