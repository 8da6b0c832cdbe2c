#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitpile/bigint.hpp"
#include "splitpile/split_graph.hpp"

namespace splitpile {

using Height = std::uint64_t;

// Default cap on the number of configurations an exhaustive scan may visit.
// Covers every stable configuration of S(m,n) with m + n <= 8 for either sink.
inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

// Grain heights on the non-sink vertices. Each part lists its side in index
// order with the sink position removed, matching the (a_1,...,-;b_1,...) notation.
struct Configuration {
  std::vector<Height> clique;
  std::vector<Height> independent;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// Per-vertex topple counts, laid out like a Configuration.
struct Odometer {
  std::vector<std::uint64_t> clique;
  std::vector<std::uint64_t> independent;

  friend bool operator==(const Odometer&, const Odometer&) = default;
};

struct Stabilization {
  Configuration config;
  Odometer topples;
};

struct BurningResult {
  bool recurrent = false;
  // Sink first, then every non-sink vertex in the order it burned.
  std::optional<std::vector<VertexId>> certificate;
};

// "(5,3,1,-;3,3,3,2)" style rendering.
std::string to_string(const SplitGraph& g, const Configuration& c);

// Parses the notation produced by to_string; the sink slot must hold '-'.
// Throws ShapeError or DomainError.
Configuration parse_configuration(const SplitGraph& g, std::string_view text);

Configuration zero_configuration(const SplitGraph& g);

// Throws ShapeError if the part lengths do not match g.
void check_shape(const SplitGraph& g, const Configuration& c);

// Position of a non-sink vertex inside its configuration part.
std::size_t part_position(const SplitGraph& g, VertexId v);
Height height_at(const SplitGraph& g, const Configuration& c, VertexId v);
void set_height(const SplitGraph& g, Configuration& c, VertexId v, Height h);

bool is_stable(const SplitGraph& g, const Configuration& c);
bool is_unstable_at(const SplitGraph& g, const Configuration& c, VertexId v);

// Fires v once. Throws DomainError if v is the sink or is stable, OverflowError
// if a neighbor height would overflow.
void topple(const SplitGraph& g, Configuration& c, VertexId v);

Stabilization stabilize(const SplitGraph& g, const Configuration& c);

// Burning test. Throws NotStable on unstable input.
BurningResult is_recurrent(const SplitGraph& g, const Configuration& c);

// Replays a burning order from c: the first entry must be the sink, and each
// later vertex must be unstable once all earlier ones have fired.
bool replay_certificate(const SplitGraph& g, const Configuration& c,
                        const std::vector<VertexId>& order);

// Number of stable configurations, i.e. the product of non-sink degrees.
BigInt stable_configuration_count(const SplitGraph& g);

// Every stable configuration in lexicographic order. Throws BudgetExceeded
// when there are more than `budget` of them.
std::vector<Configuration> all_stable(const SplitGraph& g, std::uint64_t budget = kDefaultBudget);

// Recurrent configurations by exhaustive burning, sorted.
std::vector<Configuration> all_recurrent_brute(const SplitGraph& g,
                                               std::uint64_t budget = kDefaultBudget);

}  // namespace splitpile
