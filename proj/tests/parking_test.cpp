#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "splitpile/errors.hpp"
#include "splitpile/parking.hpp"

using namespace splitpile;

namespace {

TieredParkingInstance example_four_tiers() {
  return {{4, 5, 4, 3}, {{2, 1, 0, 4, 2}, {8, 2, 1, 2}, {4, 10, 8}}};
}

TieredParkingInstance example_three_tiers() {
  return {{9, 12, 9}, {{8, 2, 9, 4, 6, 9, 7, 8, 2, 7, 9, 4}, {18, 2, 14, 6, 21, 13, 7, 13, 3}}};
}

bool is_permutation_of_cars(const TieredParkingInstance& p, const StreetArrangement& street) {
  std::vector<std::vector<int>> seen(p.tiers());
  for (std::size_t t = 0; t < p.tiers(); ++t) seen[t].assign(p.tier_counts[t], 0);
  for (const ParkedCar& car : street) {
    if (car.tier < 1 || car.tier > p.tiers()) return false;
    if (car.car < 1 || car.car > p.tier_counts[car.tier - 1]) return false;
    ++seen[car.tier - 1][car.car - 1];
  }
  for (const auto& tier : seen) {
    for (int x : tier) {
      if (x != 1) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> signed_heights(const std::vector<Height>& v, Height offset) {
  std::vector<std::int64_t> out;
  for (Height h : v) out.push_back(static_cast<std::int64_t>(h + offset));
  return out;
}

}  // namespace

TEST(Parking, PaperExamplesAreAccepted) {
  for (const auto& p : {example_four_tiers(), example_three_tiers()}) {
    const ParkingResult closed = is_tiered_pf_literal(p);
    ASSERT_TRUE(closed.feasible);
    ASSERT_TRUE(closed.witness.has_value());
    EXPECT_TRUE(is_permutation_of_cars(p, *closed.witness));
    EXPECT_TRUE(satisfies_literal(p, *closed.witness));
    const ParkingResult search = tiered_pf_literal_search(p);
    ASSERT_TRUE(search.feasible);
    EXPECT_TRUE(satisfies_literal(p, *search.witness));
  }
}

TEST(Parking, TooDemandingCarFails) {
  const TieredParkingInstance p{{1, 1}, {{2}}};
  EXPECT_FALSE(is_tiered_pf_literal(p).feasible);
  EXPECT_FALSE(tiered_pf_literal_search(p).feasible);
}

TEST(Parking, InstanceValidation) {
  EXPECT_THROW((TieredParkingInstance{{}, {}}.validate()), DomainError);
  EXPECT_THROW((TieredParkingInstance{{1, 0}, {{}}}.validate()), DomainError);
  EXPECT_THROW((TieredParkingInstance{{1, 2}, {{0}}}.validate()), DomainError);
  EXPECT_THROW((TieredParkingInstance{{1, 1}, {{-1}}}.validate()), DomainError);
  EXPECT_THROW((TieredParkingInstance{{1, 1}, {}}.validate()), DomainError);
}

TEST(Parking, LiteralSemanticsAcceptAWordlessConfiguration) {
  // (0,-;0) on S(2,1) is not recurrent, yet its literal instance is feasible.
  const auto p = clique_sink_instance(2, 1, std::vector<std::int64_t>{0}, std::vector<std::int64_t>{1});
  EXPECT_TRUE(is_tiered_pf_literal(p).feasible);
  EXPECT_FALSE(is_recurrent_via_parking_clique(2, 1, std::vector<std::int64_t>{0},
                                               std::vector<std::int64_t>{1}));
}

TEST(Parking, StrictExamples) {
  EXPECT_TRUE(is_recurrent_via_parking_clique(4, 4, std::vector<std::int64_t>{3, 3, 3, 2},
                                              std::vector<std::int64_t>{6, 4, 2}));
  EXPECT_TRUE(is_recurrent_via_parking_clique(2, 1, std::vector<std::int64_t>{0},
                                              std::vector<std::int64_t>{2}));
  EXPECT_TRUE(is_recurrent_via_parking_independent(4, 4, std::vector<std::int64_t>{3, 2, 0},
                                                   std::vector<std::int64_t>{7, 7, 5, 3}));
  EXPECT_TRUE(is_recurrent_via_parking_independent(1, 1, std::vector<std::int64_t>{},
                                                   std::vector<std::int64_t>{1}));
  EXPECT_FALSE(is_recurrent_via_parking_independent(2, 2, std::vector<std::int64_t>{0},
                                                    std::vector<std::int64_t>{1, 1}));
}

TEST(Parking, StrictWitnessesSatisfyTheDefinition) {
  const std::vector<std::int64_t> b{3, 3, 3, 2};
  const std::vector<std::int64_t> a{6, 4, 2};
  const ParkingResult r = strict_parking_clique(4, 4, b, a);
  ASSERT_TRUE(r.feasible);
  const auto p = clique_sink_instance(4, 4, b, a);
  EXPECT_TRUE(is_permutation_of_cars(p, *r.witness));
  EXPECT_TRUE(satisfies_strict(p, *r.witness, false));
  EXPECT_EQ(word_from_street(*r.witness).str(), "HUHHUDHUDD");

  const std::vector<std::int64_t> bi{3, 2, 0};
  const std::vector<std::int64_t> ai{7, 7, 5, 3};
  const ParkingResult ri = strict_parking_independent(4, 4, bi, ai);
  ASSERT_TRUE(ri.feasible);
  const auto pi = independent_sink_instance(4, 4, bi, ai);
  EXPECT_TRUE(satisfies_strict(pi, *ri.witness, true));
  EXPECT_EQ(word_from_street(*ri.witness).str(), "UUDHUDHUDDH");
}

TEST(Parking, StreetWordRoundTrip) {
  for (const MotzkinWord& w : generate_all(3, 3)) EXPECT_EQ(word_from_street(street_from_word(w)), w);
  EXPECT_THROW(word_from_street({{4, 1}}), DomainError);
  EXPECT_THROW(word_from_street({{3, 1}, {1, 1}}), DomainError);
}

TEST(Parking, StrictAgreesWithBurningAndDirectSearch) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; m + n <= 5; ++n) {
      const auto gc = SplitGraph::with_clique_sink(m, n);
      for (const Configuration& c : all_stable(gc)) {
        const auto b = signed_heights(c.independent, 0);
        const auto a = signed_heights(c.clique, 1);
        const bool burn = is_recurrent(gc, c).recurrent;
        EXPECT_EQ(is_recurrent_via_parking_clique(m, n, b, a), burn) << to_string(gc, c);
        EXPECT_EQ(oracle::StrictParkingSearch(m - 1, b, a, false).feasible(), burn) << to_string(gc, c);
      }
      const auto gi = SplitGraph::with_independent_sink(m, n);
      for (const Configuration& c : all_stable(gi)) {
        const auto b = signed_heights(c.independent, 0);
        const auto a = signed_heights(c.clique, 1);
        const bool burn = is_recurrent(gi, c).recurrent;
        EXPECT_EQ(is_recurrent_via_parking_independent(m, n, b, a), burn) << to_string(gi, c);
        EXPECT_EQ(oracle::StrictParkingSearch(m, b, a, true).feasible(), burn) << to_string(gi, c);
      }
    }
  }
}

TEST(Parking, ClosedFormMatchesSearchOnRandomInstances) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    TieredParkingInstance p;
    const std::size_t tiers = 1 + rng() % 4;
    std::size_t below = 0;
    for (std::size_t t = 0; t < tiers; ++t) {
      p.tier_counts.push_back(1 + rng() % 4);
      if (t > 0) {
        std::vector<std::int64_t> reqs;
        for (std::size_t i = 0; i < p.tier_counts[t]; ++i) {
          reqs.push_back(static_cast<std::int64_t>(rng() % (below + 3)));
        }
        p.requirements.push_back(reqs);
      }
      below += p.tier_counts[t];
    }
    const ParkingResult closed = is_tiered_pf_literal(p);
    const ParkingResult search = tiered_pf_literal_search(p);
    ASSERT_EQ(closed.feasible, search.feasible);
    if (closed.feasible) {
      EXPECT_TRUE(satisfies_literal(p, *closed.witness));
      EXPECT_TRUE(satisfies_literal(p, *search.witness));
    }
  }
}

TEST(Parking, EnumerationCounts) {
  const std::vector<std::size_t> pair{1, 1};
  const ParkingCount small = enumerate_tiered_pf(pair, 1);
  EXPECT_EQ(small.sequences, 2u);
  EXPECT_EQ(small.literal, 2u);
  const ParkingCount wider = enumerate_tiered_pf(pair, 2);
  EXPECT_EQ(wider.sequences, 3u);
  EXPECT_EQ(wider.literal, 2u);
  EXPECT_FALSE(wider.strict.has_value());
  // Order (1,1,1) is S(2,1) with a clique sink: its three recurrent
  // configurations all fit under the bound.
  const std::vector<std::size_t> three{1, 1, 1};
  const ParkingCount t = enumerate_tiered_pf(three, 2);
  EXPECT_EQ(t.sequences, 9u);
  ASSERT_TRUE(t.strict.has_value());
  EXPECT_EQ(*t.strict, 3u);
  EXPECT_THROW(enumerate_tiered_pf(three, 100, 10), BudgetExceeded);
}
