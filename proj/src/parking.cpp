#include "splitpile/parking.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "splitpile/errors.hpp"

namespace splitpile {

std::size_t TieredParkingInstance::total_cars() const {
  return std::accumulate(tier_counts.begin(), tier_counts.end(), std::size_t{0});
}

void TieredParkingInstance::validate() const {
  if (tier_counts.empty()) throw DomainError("a tiered parking function needs at least one tier");
  for (std::size_t count : tier_counts) {
    if (count == 0) throw DomainError("tier sizes must be positive");
  }
  if (requirements.size() + 1 != tier_counts.size()) {
    throw DomainError("expected requirement lists for tiers 2.." + std::to_string(tier_counts.size()));
  }
  for (std::size_t i = 0; i < requirements.size(); ++i) {
    if (requirements[i].size() != tier_counts[i + 1]) {
      throw DomainError("tier " + std::to_string(i + 2) + " lists " +
                        std::to_string(requirements[i].size()) + " requirements for " +
                        std::to_string(tier_counts[i + 1]) + " cars");
    }
    for (std::int64_t r : requirements[i]) {
      if (r < 0) throw DomainError("requirements must be non-negative");
    }
  }
}

namespace {

std::int64_t lower_tier_total(const TieredParkingInstance& p, std::size_t tier) {
  std::int64_t total = 0;
  for (std::size_t t = 1; t < tier; ++t) total += static_cast<std::int64_t>(p.tier_counts[t - 1]);
  return total;
}

std::int64_t requirement_of(const TieredParkingInstance& p, ParkedCar car) {
  return car.tier == 1 ? 0 : p.requirements[car.tier - 2][car.car - 1];
}

bool is_permutation_of_cars(const TieredParkingInstance& p, const StreetArrangement& street) {
  if (street.size() != p.total_cars()) return false;
  std::vector<std::vector<bool>> seen(p.tiers());
  for (std::size_t t = 0; t < p.tiers(); ++t) seen[t].assign(p.tier_counts[t], false);
  for (const ParkedCar& car : street) {
    if (car.tier == 0 || car.tier > p.tiers()) return false;
    if (car.car == 0 || car.car > p.tier_counts[car.tier - 1]) return false;
    if (seen[car.tier - 1][car.car - 1]) return false;
    seen[car.tier - 1][car.car - 1] = true;
  }
  return true;
}

// Number of cars of tier below `tier` in street[0, end).
std::vector<std::int64_t> lower_counts_before(const StreetArrangement& street, std::size_t tiers) {
  std::vector<std::int64_t> out;
  out.reserve(street.size());
  std::vector<std::int64_t> placed(tiers + 1, 0);
  for (const ParkedCar& car : street) {
    std::int64_t lower = 0;
    for (std::size_t t = 1; t < car.tier; ++t) lower += placed[t];
    out.push_back(lower);
    ++placed[car.tier];
  }
  return out;
}

std::vector<std::size_t> descending_order(std::span<const std::int64_t> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
  return order;
}

void require_non_negative(std::span<const std::int64_t> values) {
  for (std::int64_t v : values) {
    if (v < 0) throw DomainError("requirements must be non-negative");
  }
}

ParkingResult strict_three_tier(std::span<const std::int64_t> b,
                                std::span<const std::int64_t> a_plus_one, bool dh) {
  require_non_negative(b);
  require_non_negative(a_plus_one);
  const std::vector<std::size_t> flat_order = descending_order(b);
  const std::vector<std::size_t> up_order = descending_order(a_plus_one);
  std::vector<std::uint64_t> flat_downs;
  std::vector<std::uint64_t> up_letters;
  for (std::size_t i : flat_order) flat_downs.push_back(static_cast<std::uint64_t>(b[i]));
  for (std::size_t i : up_order) up_letters.push_back(static_cast<std::uint64_t>(a_plus_one[i]));

  const Verdict verdict = rebuild_word(up_letters, flat_downs);
  if (!verdict.recurrent()) return {};
  if (dh && !is_dh_motzkin(*verdict.word)) return {};

  // street_from_word numbers tier-2/3 cars by their position in the sorted
  // requirement lists; map them back to the caller's indices.
  StreetArrangement street = street_from_word(*verdict.word);
  for (ParkedCar& car : street) {
    if (car.tier == 2) car.car = flat_order[car.car - 1] + 1;
    if (car.tier == 3) car.car = up_order[car.car - 1] + 1;
  }
  return {true, std::move(street)};
}

}  // namespace

ParkingResult is_tiered_pf_literal(const TieredParkingInstance& p) {
  p.validate();
  for (std::size_t tier = 2; tier <= p.tiers(); ++tier) {
    const std::int64_t available = lower_tier_total(p, tier);
    for (std::int64_t r : p.requirements[tier - 2]) {
      if (r > available) return {};
    }
  }
  StreetArrangement street;
  street.reserve(p.total_cars());
  for (std::size_t tier = 1; tier <= p.tiers(); ++tier) {
    for (std::size_t car = 1; car <= p.tier_counts[tier - 1]; ++car) street.push_back({tier, car});
  }
  return {true, std::move(street)};
}

namespace {

// Cars sharing a tier and a requirement are interchangeable; the search walks
// over how many of each group remain.
class LiteralSearch {
 public:
  explicit LiteralSearch(const TieredParkingInstance& p) : placed_(p.tiers() + 1, 0) {
    groups_.push_back({1, 0, {}});
    for (std::size_t car = 1; car <= p.tier_counts[0]; ++car) groups_[0].cars.push_back(car);
    for (std::size_t tier = 2; tier <= p.tiers(); ++tier) {
      std::map<std::int64_t, std::vector<std::size_t>> by_requirement;
      const auto& reqs = p.requirements[tier - 2];
      for (std::size_t i = 0; i < reqs.size(); ++i) by_requirement[reqs[i]].push_back(i + 1);
      for (auto& [req, cars] : by_requirement) groups_.push_back({tier, req, std::move(cars)});
    }
    remaining_.resize(groups_.size());
    for (std::size_t g = 0; g < groups_.size(); ++g) remaining_[g] = groups_[g].cars.size();

    std::uint64_t states = 1;
    for (const Group& g : groups_) {
      states *= g.cars.size() + 1;
      if (states > kDenseLimit) break;
    }
    if (states <= kDenseLimit) dead_dense_.assign(states, false);
  }

  std::optional<StreetArrangement> run() {
    if (!extend()) return std::nullopt;
    return street_;
  }

 private:
  struct Group {
    std::size_t tier;
    std::int64_t requirement;
    std::vector<std::size_t> cars;
  };

  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

  bool extend() {
    if (std::ranges::all_of(remaining_, [](std::size_t r) { return r == 0; })) return true;
    if (is_dead()) return false;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (remaining_[g] == 0) continue;
      const Group& group = groups_[g];
      std::int64_t lower = 0;
      for (std::size_t t = 1; t < group.tier; ++t) lower += placed_[t];
      if (lower < group.requirement) continue;
      const std::size_t car = group.cars[group.cars.size() - remaining_[g]];
      --remaining_[g];
      ++placed_[group.tier];
      street_.push_back({group.tier, car});
      if (extend()) return true;
      street_.pop_back();
      --placed_[group.tier];
      ++remaining_[g];
    }
    mark_dead();
    return false;
  }

  std::uint64_t dense_key() const {
    std::uint64_t key = 0;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      key = key * (groups_[g].cars.size() + 1) + remaining_[g];
    }
    return key;
  }

  bool is_dead() const {
    if (!dead_dense_.empty()) return dead_dense_[dense_key()];
    return dead_sparse_.contains(remaining_);
  }

  void mark_dead() {
    if (!dead_dense_.empty()) {
      dead_dense_[dense_key()] = true;
    } else {
      dead_sparse_.insert(remaining_);
    }
  }

  std::vector<Group> groups_;
  std::vector<std::size_t> remaining_;
  std::vector<std::int64_t> placed_;
  StreetArrangement street_;
  std::vector<bool> dead_dense_;
  std::set<std::vector<std::size_t>> dead_sparse_;
};

}  // namespace

ParkingResult tiered_pf_literal_search(const TieredParkingInstance& p) {
  p.validate();
  LiteralSearch search(p);
  std::optional<StreetArrangement> street = search.run();
  if (!street) return {};
  return {true, std::move(street)};
}

bool satisfies_literal(const TieredParkingInstance& p, const StreetArrangement& street) {
  p.validate();
  if (!is_permutation_of_cars(p, street)) return false;
  const std::vector<std::int64_t> lower = lower_counts_before(street, p.tiers());
  for (std::size_t spot = 0; spot < street.size(); ++spot) {
    if (lower[spot] < requirement_of(p, street[spot])) return false;
  }
  return true;
}

bool satisfies_strict(const TieredParkingInstance& p, const StreetArrangement& street,
                      bool last_flat_before_last_down) {
  if (p.tiers() != 3 || p.requirements.size() != 2 ||
      p.requirements[0].size() != p.tier_counts[1] || p.requirements[1].size() != p.tier_counts[2]) {
    throw DomainError("exact semantics is defined for three tiers");
  }
  if (!is_permutation_of_cars(p, street)) return false;
  if (p.tier_counts[0] != p.tier_counts[2]) return false;

  const std::vector<std::int64_t> lower = lower_counts_before(street, p.tiers());
  std::int64_t balance = 0;  // #tier-1 minus #tier-3 so far
  std::optional<std::size_t> last_down;
  std::optional<std::size_t> last_flat;
  for (std::size_t spot = 0; spot < street.size(); ++spot) {
    const ParkedCar car = street[spot];
    if (car.tier != 1 && lower[spot] != requirement_of(p, car)) return false;
    if (car.tier == 1) {
      ++balance;
      last_down = spot;
    } else if (car.tier == 3) {
      if (--balance < 0) return false;
    } else {
      last_flat = spot;
    }
  }
  if (last_flat_before_last_down && last_flat && (!last_down || *last_flat > *last_down)) {
    return false;
  }
  return true;
}

TieredParkingInstance clique_sink_instance(std::size_t m, std::size_t n,
                                           std::span<const std::int64_t> b,
                                           std::span<const std::int64_t> a_plus_one) {
  if (m == 0 || n == 0) throw DomainError("S(m,n) needs m >= 1 and n >= 1");
  if (b.size() != n || a_plus_one.size() != m - 1) {
    throw DomainError("clique sink needs n = " + std::to_string(n) + " b values and m-1 = " +
                      std::to_string(m - 1) + " a+1 values");
  }
  return {{m - 1, n, m - 1},
          {std::vector<std::int64_t>(b.begin(), b.end()),
           std::vector<std::int64_t>(a_plus_one.begin(), a_plus_one.end())}};
}

TieredParkingInstance independent_sink_instance(std::size_t m, std::size_t n,
                                                std::span<const std::int64_t> b,
                                                std::span<const std::int64_t> a_plus_one) {
  if (m == 0 || n == 0) throw DomainError("S(m,n) needs m >= 1 and n >= 1");
  if (b.size() != n - 1 || a_plus_one.size() != m) {
    throw DomainError("independent sink needs n-1 = " + std::to_string(n - 1) +
                      " b values and m = " + std::to_string(m) + " a+1 values");
  }
  return {{m, n - 1, m},
          {std::vector<std::int64_t>(b.begin(), b.end()),
           std::vector<std::int64_t>(a_plus_one.begin(), a_plus_one.end())}};
}

ParkingResult strict_parking_clique(std::size_t m, std::size_t n, std::span<const std::int64_t> b,
                                    std::span<const std::int64_t> a_plus_one) {
  clique_sink_instance(m, n, b, a_plus_one);
  return strict_three_tier(b, a_plus_one, false);
}

ParkingResult strict_parking_independent(std::size_t m, std::size_t n,
                                         std::span<const std::int64_t> b,
                                         std::span<const std::int64_t> a_plus_one) {
  independent_sink_instance(m, n, b, a_plus_one);
  return strict_three_tier(b, a_plus_one, true);
}

bool is_recurrent_via_parking_clique(std::size_t m, std::size_t n, std::span<const std::int64_t> b,
                                     std::span<const std::int64_t> a_plus_one) {
  return strict_parking_clique(m, n, b, a_plus_one).feasible;
}

bool is_recurrent_via_parking_independent(std::size_t m, std::size_t n,
                                          std::span<const std::int64_t> b,
                                          std::span<const std::int64_t> a_plus_one) {
  return strict_parking_independent(m, n, b, a_plus_one).feasible;
}

StreetArrangement street_from_word(const MotzkinWord& w) {
  StreetArrangement street;
  street.reserve(w.size());
  std::size_t flats = 0;
  std::size_t ups = 0;
  for (char c : w.str()) {
    if (c == kFlat) street.push_back({2, ++flats});
    if (c == kUp) street.push_back({3, ++ups});
    if (c == kDown) street.push_back({1, 0});
  }
  std::ranges::reverse(street);
  std::size_t downs = 0;
  for (ParkedCar& car : street) {
    if (car.tier == 1) car.car = ++downs;
  }
  return street;
}

ParkingCount enumerate_tiered_pf(std::span<const std::size_t> tier_counts,
                                 std::uint64_t requirement_bound, std::uint64_t budget) {
  if (tier_counts.empty()) throw DomainError("need at least one tier");
  std::size_t cars_with_requirements = 0;
  for (std::size_t i = 1; i < tier_counts.size(); ++i) cars_with_requirements += tier_counts[i];
  const BigInt sequences = power(requirement_bound + 1, cars_with_requirements);
  if (sequences > budget) {
    throw BudgetExceeded(sequences.str() + " requirement sequences, budget is " +
                         std::to_string(budget));
  }

  TieredParkingInstance p;
  p.tier_counts.assign(tier_counts.begin(), tier_counts.end());
  p.requirements.resize(tier_counts.size() - 1);
  for (std::size_t i = 1; i < tier_counts.size(); ++i) p.requirements[i - 1].assign(tier_counts[i], 0);
  p.validate();

  const bool exact = tier_counts.size() == 3 && tier_counts[0] == tier_counts[2];
  ParkingCount count;
  if (exact) count.strict = 0;
  const auto bound = static_cast<std::int64_t>(requirement_bound);
  while (true) {
    ++count.sequences;
    if (is_tiered_pf_literal(p).feasible) ++count.literal;
    if (exact && strict_three_tier(p.requirements[0], p.requirements[1], false).feasible) {
      ++*count.strict;
    }
    bool carried = true;
    for (std::size_t t = p.requirements.size(); t-- > 0 && carried;) {
      auto& reqs = p.requirements[t];
      for (std::size_t k = reqs.size(); k-- > 0 && carried;) {
        if (++reqs[k] <= bound) {
          carried = false;
        } else {
          reqs[k] = 0;
        }
      }
    }
    if (carried) break;
  }
  return count;
}

MotzkinWord word_from_street(const StreetArrangement& street) {
  std::string letters;
  letters.reserve(street.size());
  for (auto it = street.rbegin(); it != street.rend(); ++it) {
    switch (it->tier) {
      case 1: letters.push_back(kDown); break;
      case 2: letters.push_back(kFlat); break;
      case 3: letters.push_back(kUp); break;
      default: throw DomainError("street tiers must be 1, 2 or 3");
    }
  }
  if (!validate_motzkin(letters)) throw DomainError("street does not read back to a Motzkin word");
  return MotzkinWord(letters);
}

}  // namespace splitpile
