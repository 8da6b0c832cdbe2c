#include "splitpile/sandpile.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "splitpile/errors.hpp"

namespace splitpile {

namespace {

Height checked_add(Height a, Height b) {
  if (a > std::numeric_limits<Height>::max() - b) {
    throw OverflowError("grain height overflow during toppling");
  }
  return a + b;
}

// Flat view of a configuration: clique part followed by the independent part.
struct FlatPile {
  std::size_t clique_size;
  std::vector<Height> heights;
  std::vector<Height> thresholds;

  FlatPile(const SplitGraph& g, const Configuration& c) : clique_size(c.clique.size()) {
    heights.reserve(c.clique.size() + c.independent.size());
    heights.insert(heights.end(), c.clique.begin(), c.clique.end());
    heights.insert(heights.end(), c.independent.begin(), c.independent.end());
    thresholds.assign(c.clique.size(), g.m() - 1 + g.n());
    thresholds.resize(heights.size(), g.m());
  }

  bool is_clique(std::size_t i) const { return i < clique_size; }

  // Adds k grains to every non-sink neighbor of flat vertex i.
  void spread(std::size_t i, Height k) {
    for (std::size_t j = 0; j < clique_size; ++j) {
      if (j != i) heights[j] = checked_add(heights[j], k);
    }
    if (is_clique(i)) {
      for (std::size_t j = clique_size; j < heights.size(); ++j) {
        heights[j] = checked_add(heights[j], k);
      }
    }
  }

  Configuration to_configuration() const {
    Configuration c;
    c.clique.assign(heights.begin(), heights.begin() + static_cast<std::ptrdiff_t>(clique_size));
    c.independent.assign(heights.begin() + static_cast<std::ptrdiff_t>(clique_size), heights.end());
    return c;
  }
};

}  // namespace

std::string to_string(const SplitGraph& g, const Configuration& c) {
  std::ostringstream out;
  auto emit = [&](const std::vector<Height>& part, bool sink_here, std::size_t sink_index) {
    std::size_t k = 0;
    const std::size_t slots = part.size() + (sink_here ? 1 : 0);
    for (std::size_t slot = 1; slot <= slots; ++slot) {
      if (slot > 1) out << ',';
      if (sink_here && slot == sink_index) {
        out << '-';
      } else {
        out << part[k++];
      }
    }
  };
  out << '(';
  emit(c.clique, g.sink_side() == Side::Clique, g.sink().index);
  out << ';';
  emit(c.independent, g.sink_side() == Side::Independent, g.sink().index);
  out << ')';
  return out.str();
}

Configuration parse_configuration(const SplitGraph& g, std::string_view text) {
  std::string body;
  for (char ch : text) {
    if (ch != ' ' && ch != '(' && ch != ')') body.push_back(ch);
  }
  const auto semicolon = body.find(';');
  if (semicolon == std::string::npos || body.find(';', semicolon + 1) != std::string::npos) {
    throw DomainError("configuration must look like (a_1,...;b_1,...)");
  }
  auto parse_part = [&](std::string_view part, Side side) {
    std::vector<Height> out;
    const bool sink_here = g.sink_side() == side;
    std::size_t slot = 0;
    bool saw_sink = false;
    while (!part.empty()) {
      const auto comma = part.find(',');
      const std::string_view token = part.substr(0, comma);
      ++slot;
      if (token == "-") {
        if (!sink_here || slot != g.sink().index) {
          throw ShapeError("'-' at slot " + std::to_string(slot) + " does not mark the sink");
        }
        saw_sink = true;
      } else {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos) {
          throw DomainError("bad height \"" + std::string(token) + "\"");
        }
        try {
          out.push_back(std::stoull(std::string(token)));
        } catch (const std::out_of_range&) {
          throw OverflowError("height " + std::string(token) + " does not fit in 64 bits");
        }
      }
      if (comma == std::string_view::npos) break;
      part.remove_prefix(comma + 1);
    }
    if (sink_here && !saw_sink) throw ShapeError("missing '-' for the sink " + to_string(g.sink()));
    return out;
  };
  const std::string_view all(body);
  Configuration c{parse_part(all.substr(0, semicolon), Side::Clique),
                  parse_part(all.substr(semicolon + 1), Side::Independent)};
  check_shape(g, c);
  return c;
}

Configuration zero_configuration(const SplitGraph& g) {
  return {std::vector<Height>(g.clique_part_size(), 0),
          std::vector<Height>(g.independent_part_size(), 0)};
}

void check_shape(const SplitGraph& g, const Configuration& c) {
  if (c.clique.size() != g.clique_part_size() ||
      c.independent.size() != g.independent_part_size()) {
    throw ShapeError("configuration has parts of length (" + std::to_string(c.clique.size()) +
                     ";" + std::to_string(c.independent.size()) + "), expected (" +
                     std::to_string(g.clique_part_size()) + ";" +
                     std::to_string(g.independent_part_size()) + ")");
  }
}

std::size_t part_position(const SplitGraph& g, VertexId v) {
  g.require_vertex(v);
  if (v == g.sink()) throw InvalidVertex("the sink " + to_string(v) + " carries no height");
  std::size_t pos = v.index - 1;
  if (v.side == g.sink_side() && v.index > g.sink().index) --pos;
  return pos;
}

Height height_at(const SplitGraph& g, const Configuration& c, VertexId v) {
  const std::size_t pos = part_position(g, v);
  return v.side == Side::Clique ? c.clique.at(pos) : c.independent.at(pos);
}

void set_height(const SplitGraph& g, Configuration& c, VertexId v, Height h) {
  const std::size_t pos = part_position(g, v);
  (v.side == Side::Clique ? c.clique : c.independent).at(pos) = h;
}

bool is_stable(const SplitGraph& g, const Configuration& c) {
  check_shape(g, c);
  const Height clique_threshold = g.m() - 1 + g.n();
  const Height independent_threshold = g.m();
  return std::ranges::all_of(c.clique, [&](Height h) { return h < clique_threshold; }) &&
         std::ranges::all_of(c.independent, [&](Height h) { return h < independent_threshold; });
}

bool is_unstable_at(const SplitGraph& g, const Configuration& c, VertexId v) {
  return height_at(g, c, v) >= g.degree(v);
}

void topple(const SplitGraph& g, Configuration& c, VertexId v) {
  check_shape(g, c);
  if (v == g.sink()) throw DomainError("the sink never topples during stabilization");
  const std::size_t deg = g.degree(v);
  const Height h = height_at(g, c, v);
  if (h < deg) throw DomainError(to_string(v) + " is stable and cannot topple");
  Configuration next = c;
  set_height(g, next, v, h - deg);
  for (VertexId u : g.neighbors(v)) {
    if (u == g.sink()) continue;
    set_height(g, next, u, checked_add(height_at(g, next, u), 1));
  }
  c = std::move(next);
}

Stabilization stabilize(const SplitGraph& g, const Configuration& c) {
  check_shape(g, c);
  FlatPile pile(g, c);
  std::vector<std::uint64_t> fired(pile.heights.size(), 0);

  // Firing a vertex k times at once equals k single firings in a row; the
  // final state and odometer do not depend on the order.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pile.heights.size(); ++i) {
      const Height k = pile.heights[i] / pile.thresholds[i];
      if (k == 0) continue;
      pile.heights[i] -= k * pile.thresholds[i];
      if (fired[i] > std::numeric_limits<std::uint64_t>::max() - k) {
        throw OverflowError("topple count overflow");
      }
      fired[i] += k;
      pile.spread(i, k);
      changed = true;
    }
  }

  Stabilization result;
  result.config = pile.to_configuration();
  result.topples.clique.assign(fired.begin(),
                               fired.begin() + static_cast<std::ptrdiff_t>(pile.clique_size));
  result.topples.independent.assign(fired.begin() + static_cast<std::ptrdiff_t>(pile.clique_size),
                                    fired.end());
  return result;
}

BurningResult is_recurrent(const SplitGraph& g, const Configuration& c) {
  if (!is_stable(g, c)) throw NotStable("burning test needs a stable configuration");

  FlatPile pile(g, c);
  const std::size_t count = pile.heights.size();
  // Flat order is already the global label order with the sink removed.
  const std::vector<VertexId> order = g.non_sink_vertices();

  // The sink fires first: one grain to each of its neighbors.
  if (g.sink_side() == Side::Clique) {
    for (Height& h : pile.heights) ++h;
  } else {
    for (std::size_t i = 0; i < pile.clique_size; ++i) ++pile.heights[i];
  }

  std::vector<bool> burnt(count, false);
  std::vector<VertexId> certificate{g.sink()};
  certificate.reserve(count + 1);
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t next = count;
    for (std::size_t i = 0; i < count; ++i) {
      if (!burnt[i] && pile.heights[i] >= pile.thresholds[i]) {
        next = i;
        break;
      }
    }
    if (next == count) return {false, std::nullopt};
    burnt[next] = true;
    certificate.push_back(order[next]);
    pile.spread(next, 1);
  }
  return {true, std::move(certificate)};
}

bool replay_certificate(const SplitGraph& g, const Configuration& c,
                        const std::vector<VertexId>& order) {
  check_shape(g, c);
  if (order.size() != g.vertex_count() || order.empty() || order.front() != g.sink()) return false;

  std::vector<VertexId> seen(order);
  std::ranges::sort(seen);
  if (std::ranges::adjacent_find(seen) != seen.end()) return false;
  for (VertexId v : order) {
    if (!g.contains(v)) return false;
  }

  // Track grains received from the vertices fired so far.
  Configuration current = c;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    if (i > 0 && height_at(g, current, v) < g.degree(v)) return false;
    for (VertexId u : g.neighbors(v)) {
      if (u != g.sink()) set_height(g, current, u, checked_add(height_at(g, current, u), 1));
    }
  }
  return true;
}

BigInt stable_configuration_count(const SplitGraph& g) {
  return power(g.m() - 1 + g.n(), g.clique_part_size()) *
         power(g.m(), g.independent_part_size());
}

std::vector<Configuration> all_stable(const SplitGraph& g, std::uint64_t budget) {
  const BigInt total = stable_configuration_count(g);
  if (total > budget) {
    throw BudgetExceeded("S(" + std::to_string(g.m()) + "," + std::to_string(g.n()) + ") has " +
                         total.str() + " stable configurations, budget is " +
                         std::to_string(budget));
  }
  std::vector<Configuration> out;
  out.reserve(static_cast<std::size_t>(total));

  Configuration c = zero_configuration(g);
  const Height clique_threshold = g.m() - 1 + g.n();
  const Height independent_threshold = g.m();
  // Odometer increment from the last independent position backwards gives lexicographic order.
  while (true) {
    out.push_back(c);
    bool carried = true;
    for (std::size_t k = c.independent.size(); k-- > 0 && carried;) {
      if (++c.independent[k] < independent_threshold) {
        carried = false;
      } else {
        c.independent[k] = 0;
      }
    }
    for (std::size_t k = c.clique.size(); k-- > 0 && carried;) {
      if (++c.clique[k] < clique_threshold) {
        carried = false;
      } else {
        c.clique[k] = 0;
      }
    }
    if (carried) break;
  }
  return out;
}

std::vector<Configuration> all_recurrent_brute(const SplitGraph& g, std::uint64_t budget) {
  std::vector<Configuration> out;
  for (Configuration& c : all_stable(g, budget)) {
    if (is_recurrent(g, c).recurrent) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace splitpile
