#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitpile/bigint.hpp"
#include "splitpile/motzkin.hpp"
#include "splitpile/sandpile.hpp"
#include "splitpile/split_graph.hpp"

namespace splitpile {

// Why a configuration failed to map back to a word.
enum class Reason {
  None,
  ThresholdViolation,     // a requirement exceeds the letters available
  MonotonicityViolation,  // requirements are not weakly decreasing
  PrefixViolation,        // the rebuilt word drops below zero
  DhViolation,            // an H precedes every D
};

std::string_view reason_code(Reason r);

struct Verdict {
  std::optional<MotzkinWord> word;
  Reason reason = Reason::None;

  bool recurrent() const { return word.has_value(); }
};

// Rebuilds the unique word whose i-th H is followed by exactly flat_downs[i]
// D's and whose i-th U is followed by exactly up_letters[i] letters from {D, H}.
// The word has up_letters.size() U's and as many D's. Both sequences must be
// weakly decreasing; nothing is sorted here.
Verdict rebuild_word(std::span<const std::uint64_t> up_letters,
                     std::span<const std::uint64_t> flat_downs);

// f: M(m-1, n) -> weakly decreasing recurrent configurations of S(m,n) with
// clique sink. Clique part a_i = (#D + #H after the i-th U) - 1; independent
// part b_i = #D after the i-th H.
Configuration f_map(const MotzkinWord& w);
// Graph the output of f_map lives on: S(ups + 1, flats), sink v_m.
SplitGraph f_graph(const MotzkinWord& w);

// Inverse of f. Parts are sorted descending first. Throws DomainError unless
// the sink is on the clique side, NotStable for unstable input.
Verdict f_inverse(const SplitGraph& g, const Configuration& c);

// g: DH-Motzkin words with m U's and n-1 H's -> weakly decreasing recurrent
// configurations of S(m,n) with independent sink. Throws DomainError for
// words that are not DH-Motzkin or have no U.
Configuration g_map(const MotzkinWord& w);
SplitGraph g_graph(const MotzkinWord& w);

Verdict g_inverse(const SplitGraph& g, const Configuration& c);

// Recurrence decided through the word bijections (sort, then invert f or g).
Verdict classify(const SplitGraph& g, const Configuration& c);

// Both parts sorted weakly decreasing.
Configuration sorted_descending(Configuration c);
bool is_weakly_decreasing(const Configuration& c);

// Number of distinct configurations obtained by permuting each part.
BigInt orbit_size(const Configuration& c);

// Weakly decreasing recurrent configurations of g, as images of the word
// bijection, sorted.
std::vector<Configuration> decreasing_recurrent(const SplitGraph& g,
                                                std::uint64_t budget = kDefaultWordBudget);

}  // namespace splitpile
