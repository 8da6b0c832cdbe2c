#include "splitpile/split_graph.hpp"

#include "splitpile/errors.hpp"

namespace splitpile {

std::string to_string(VertexId v) {
  return (v.side == Side::Clique ? "v" : "w") + std::to_string(v.index);
}

SplitGraph::SplitGraph(std::size_t m, std::size_t n, VertexId sink) : m_(m), n_(n), sink_(sink) {
  if (m == 0 || n == 0) {
    throw DomainError("S(m,n) needs m >= 1 and n >= 1, got S(" + std::to_string(m) + "," +
                      std::to_string(n) + ")");
  }
  require_vertex(sink);
}

SplitGraph SplitGraph::with_clique_sink(std::size_t m, std::size_t n) {
  return SplitGraph(m, n, VertexId::clique(m));
}

SplitGraph SplitGraph::with_independent_sink(std::size_t m, std::size_t n) {
  return SplitGraph(m, n, VertexId::independent(n));
}

bool SplitGraph::contains(VertexId v) const {
  const std::size_t size = v.side == Side::Clique ? m_ : n_;
  return v.index >= 1 && v.index <= size;
}

void SplitGraph::require_vertex(VertexId v) const {
  if (!contains(v)) {
    throw InvalidVertex(to_string(v) + " is not a vertex of S(" + std::to_string(m_) + "," +
                        std::to_string(n_) + ")");
  }
}

std::size_t SplitGraph::degree(VertexId v) const {
  require_vertex(v);
  return v.side == Side::Clique ? m_ - 1 + n_ : m_;
}

bool SplitGraph::adjacent(VertexId a, VertexId b) const {
  require_vertex(a);
  require_vertex(b);
  if (a == b) return false;
  return a.side == Side::Clique || b.side == Side::Clique;
}

std::vector<VertexId> SplitGraph::neighbors(VertexId v) const {
  require_vertex(v);
  std::vector<VertexId> out;
  out.reserve(degree(v));
  for (std::size_t i = 1; i <= m_; ++i) {
    if (v.side != Side::Clique || v.index != i) out.push_back(VertexId::clique(i));
  }
  if (v.side == Side::Clique) {
    for (std::size_t j = 1; j <= n_; ++j) out.push_back(VertexId::independent(j));
  }
  return out;
}

std::vector<VertexId> SplitGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(m_ + n_);
  for (std::size_t i = 1; i <= m_; ++i) out.push_back(VertexId::clique(i));
  for (std::size_t j = 1; j <= n_; ++j) out.push_back(VertexId::independent(j));
  return out;
}

std::vector<VertexId> SplitGraph::non_sink_vertices() const {
  std::vector<VertexId> out = vertices();
  std::erase(out, sink_);
  return out;
}

std::size_t SplitGraph::clique_part_size() const {
  return sink_.side == Side::Clique ? m_ - 1 : m_;
}

std::size_t SplitGraph::independent_part_size() const {
  return sink_.side == Side::Independent ? n_ - 1 : n_;
}

std::size_t SplitGraph::label(VertexId v) const {
  require_vertex(v);
  return v.side == Side::Clique ? v.index : m_ + v.index;
}

VertexId SplitGraph::vertex_of_label(std::size_t label) const {
  if (label == 0 || label > m_ + n_) {
    throw InvalidVertex("label v" + std::to_string(label) + " out of range for S(" +
                        std::to_string(m_) + "," + std::to_string(n_) + ")");
  }
  return label <= m_ ? VertexId::clique(label) : VertexId::independent(label - m_);
}

std::vector<LabelEdge> as_generic_graph(const SplitGraph& g) {
  std::vector<LabelEdge> edges;
  const std::size_t total = g.vertex_count();
  edges.reserve(g.m() * (g.m() - 1) / 2 + g.m() * g.n());
  for (std::size_t a = 1; a <= g.m(); ++a) {
    for (std::size_t b = a + 1; b <= total; ++b) edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace splitpile
