#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "splitpile/motzkin.hpp"

namespace splitpile {

// Start index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation_index(std::string_view s);
std::string least_rotation(std::string_view s);

// A three-coloured necklace over {U, D, H}, stored as its least rotation under
// D < H < U, so equality of values is rotation equivalence of the inputs.
class Necklace {
 public:
  Necklace() = default;
  // Throws AlphabetError on foreign beads.
  explicit Necklace(std::string_view beads);

  const std::string& str() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }

  std::size_t count(char bead) const;

  friend auto operator<=>(const Necklace&, const Necklace&) = default;

 private:
  std::string canonical_;
};

// The necklace read clockwise as U followed by w.
Necklace necklace_from_motzkin(const MotzkinWord& w);

// Positions (in the canonical string) of the U's whose cyclic U/D successors
// form a Dyck word. For necklaces with one more U than D there is exactly one.
std::vector<std::size_t> cut_points(const Necklace& x);

// Deletes the unique cut U and reads the rest clockwise. Throws DomainError
// unless the bead counts are (m, m - 1, n) with m >= 1.
MotzkinWord motzkin_from_necklace(const Necklace& x);

// Necklaces_1(m, m-1, n) as the image of M(m-1, n), sorted.
std::vector<Necklace> enumerate_necklaces(std::size_t m, std::size_t n,
                                          std::uint64_t budget = kDefaultWordBudget);

// Image of the DH-Motzkin words of M(m, n-1) with a U prepended; a subset of
// Necklaces_1(m+1, m, n-1). Sorted.
std::vector<Necklace> enumerate_dh_necklaces(std::size_t m, std::size_t n,
                                             std::uint64_t budget = kDefaultWordBudget);

}  // namespace splitpile
