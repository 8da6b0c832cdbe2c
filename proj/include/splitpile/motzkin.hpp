#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "splitpile/bigint.hpp"

namespace splitpile {

inline constexpr char kUp = 'U';
inline constexpr char kDown = 'D';
inline constexpr char kFlat = 'H';

// Default cap on the number of words a generator may produce.
inline constexpr std::uint64_t kDefaultWordBudget = 2'000'000;

// True iff every prefix has #U >= #D and the totals agree.
// Throws AlphabetError on a letter outside {U, D, H}.
bool validate_motzkin(std::string_view letters);

// A validated Motzkin word. Letters compare as plain chars, so the ordering
// of words is lexicographic under D < H < U.
class MotzkinWord {
 public:
  MotzkinWord() = default;
  // Throws AlphabetError or DomainError.
  explicit MotzkinWord(std::string letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  std::size_t ups() const;
  std::size_t flats() const;

  // Word with all H's deleted; always a Dyck word.
  std::string dyck_reduction() const;

  friend auto operator<=>(const MotzkinWord&, const MotzkinWord&) = default;

 private:
  std::string letters_;
};

// A Motzkin word whose first H (if any) comes after its first D.
bool is_dh_motzkin(const MotzkinWord& w);

// All words with `ups` U's, `ups` D's and `flats` H's, lexicographically
// sorted. Throws BudgetExceeded when the count exceeds `budget`.
std::vector<MotzkinWord> generate_all(std::size_t ups, std::size_t flats,
                                      std::uint64_t budget = kDefaultWordBudget);

// DH-Motzkin words among generate_all(ups, flats), same order.
std::vector<MotzkinWord> generate_dh(std::size_t ups, std::size_t flats,
                                     std::uint64_t budget = kDefaultWordBudget);

// |M(ups, flats)| = C(2u,u) C(2u+f,f) / (u+1).
BigInt count_motzkin(std::size_t ups, std::size_t flats);

// Number of DH-Motzkin words with `ups` >= 1 U's and `flats` H's. With
// n = flats + 1 this is C(2u+n-1, u-1) C(u+n-2, u-1) / u.
BigInt count_dh(std::size_t ups, std::size_t flats);

// Hook length count of standard Young tableaux of shape (u, u, 1^flats).
BigInt count_syt_hook(std::size_t ups, std::size_t flats);

// A standard Young tableau of shape (u, u, 1, ..., 1), stored row by row.
struct StandardYoungTableau {
  std::vector<std::size_t> shape;
  std::vector<std::vector<std::size_t>> rows;

  // Rows increase left to right, columns top to bottom, shape is a partition
  // matching `rows`, and entries are exactly 1..N.
  bool is_standard() const;

  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;
};

// Row 1 holds the positions of the U's, row 2 those of the D's, and each H
// position gets its own row of length one. Throws DomainError for words that
// are not DH-Motzkin or have no U.
StandardYoungTableau syt_from_dh(const MotzkinWord& w);

// Inverse of syt_from_dh. Throws DomainError if t is not a standard tableau of
// shape (u, u, 1^h) with u >= 1.
MotzkinWord dh_from_syt(const StandardYoungTableau& t);

// Multi-line rendering of the lattice path, for debugging.
std::string ascii_path(const MotzkinWord& w);

}  // namespace splitpile
