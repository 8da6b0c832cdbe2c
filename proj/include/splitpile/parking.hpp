#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "splitpile/bijections.hpp"

namespace splitpile {

// Cars come in tiers 1..k with m_i cars in tier i. Every car of tier i >= 2
// asks for some number of lower-tier cars to be parked before it; tier-1 cars
// ask for nothing.
struct TieredParkingInstance {
  std::vector<std::size_t> tier_counts;
  // requirements[i] belongs to tier i + 2 and has tier_counts[i + 1] entries.
  std::vector<std::vector<std::int64_t>> requirements;

  std::size_t total_cars() const;
  std::size_t tiers() const { return tier_counts.size(); }

  // Throws DomainError on empty or zero tiers, length mismatches, or negative
  // requirements.
  void validate() const;

  friend bool operator==(const TieredParkingInstance&, const TieredParkingInstance&) = default;
};

// A car by tier and index within its tier, both 1-based.
struct ParkedCar {
  std::size_t tier = 1;
  std::size_t car = 1;

  friend bool operator==(const ParkedCar&, const ParkedCar&) = default;
};

// Spot 1 (front) is nearest the street entrance.
using StreetArrangement = std::vector<ParkedCar>;

struct ParkingResult {
  bool feasible = false;
  std::optional<StreetArrangement> witness;
};

// "At least" semantics, decided in closed form: feasible iff no tier-i car
// asks for more than m_1 + ... + m_{i-1}. The witness parks tiers in order.
ParkingResult is_tiered_pf_literal(const TieredParkingInstance& p);

// The same question by backtracking over street prefixes.
ParkingResult tiered_pf_literal_search(const TieredParkingInstance& p);

// Every car parked once and each tier >= 2 car has at least its requirement
// of lower-tier cars before it.
bool satisfies_literal(const TieredParkingInstance& p, const StreetArrangement& street);

// Exact semantics for three tiers: every tier-2 and tier-3 car has exactly its
// requirement of lower-tier cars before it, and every street prefix has at
// least as many tier-1 as tier-3 cars (with equal totals). With
// `last_flat_before_last_down` the last tier-2 car must also precede the last
// tier-1 car.
bool satisfies_strict(const TieredParkingInstance& p, const StreetArrangement& street,
                      bool last_flat_before_last_down);

// Instances of order (m-1, n, m-1) and (m, n-1, m) built from a
// configuration's b and a+1 values. Throws DomainError on a length mismatch.
TieredParkingInstance clique_sink_instance(std::size_t m, std::size_t n,
                                           std::span<const std::int64_t> b,
                                           std::span<const std::int64_t> a_plus_one);
TieredParkingInstance independent_sink_instance(std::size_t m, std::size_t n,
                                                std::span<const std::int64_t> b,
                                                std::span<const std::int64_t> a_plus_one);

// Strict recognizers; the witness is the reversed word under
// tier 1 <-> D, tier 2 <-> H, tier 3 <-> U.
ParkingResult strict_parking_clique(std::size_t m, std::size_t n, std::span<const std::int64_t> b,
                                    std::span<const std::int64_t> a_plus_one);
ParkingResult strict_parking_independent(std::size_t m, std::size_t n,
                                         std::span<const std::int64_t> b,
                                         std::span<const std::int64_t> a_plus_one);

bool is_recurrent_via_parking_clique(std::size_t m, std::size_t n, std::span<const std::int64_t> b,
                                     std::span<const std::int64_t> a_plus_one);
bool is_recurrent_via_parking_independent(std::size_t m, std::size_t n,
                                          std::span<const std::int64_t> b,
                                          std::span<const std::int64_t> a_plus_one);

// The street read backwards as a word, tier 1 -> D, 2 -> H, 3 -> U.
StreetArrangement street_from_word(const MotzkinWord& w);
// Inverse reading. Throws DomainError on tiers outside 1..3 or a non-Motzkin result.
MotzkinWord word_from_street(const StreetArrangement& street);

struct ParkingCount {
  std::uint64_t sequences = 0;
  std::uint64_t literal = 0;
  // Only for three tiers of order (a, b, a): sequences feasible under the
  // exact semantics.
  std::optional<std::uint64_t> strict;
};

// Counts requirement sequences with entries in [0, requirement_bound].
// Throws BudgetExceeded when there are more than `budget` sequences.
ParkingCount enumerate_tiered_pf(std::span<const std::size_t> tier_counts,
                                 std::uint64_t requirement_bound,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace splitpile
