#include <gtest/gtest.h>

#include <random>
#include <set>

#include "splitpile/errors.hpp"
#include "splitpile/necklace.hpp"

using namespace splitpile;

namespace {

// Minimum over all rotations, by direct comparison.
std::string naive_least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t i = 1; i < s.size(); ++i) best = std::min(best, s.substr(i) + s.substr(0, i));
  return best;
}

}  // namespace

TEST(Necklace, CanonicalForm) {
  EXPECT_EQ(Necklace("UHH").str(), "HHU");
  EXPECT_EQ(Necklace("HUH").str(), "HHU");
  EXPECT_EQ(Necklace("").str(), "");
  EXPECT_EQ(Necklace("UUD").count(kUp), 2u);
  EXPECT_THROW(Necklace("UXD"), AlphabetError);
}

TEST(Necklace, FigureExample) {
  const MotzkinWord alpha("HUHHUDHUDD");
  const Necklace x = necklace_from_motzkin(alpha);
  EXPECT_EQ(x, Necklace("UHUHHUDHUDD"));
  EXPECT_EQ(x.str(), "DDUHUHHUDHU");
  EXPECT_EQ(cut_points(x).size(), 1u);
  EXPECT_EQ(motzkin_from_necklace(x), alpha);
}

TEST(Necklace, SmallCases) {
  EXPECT_EQ(necklace_from_motzkin(MotzkinWord("")).str(), "U");
  EXPECT_EQ(necklace_from_motzkin(MotzkinWord("HH")).str(), "HHU");
  EXPECT_EQ(motzkin_from_necklace(Necklace("U")).str(), "");
  EXPECT_EQ(motzkin_from_necklace(Necklace("UUD")).str(), "UD");
}

TEST(Necklace, Enumeration) {
  EXPECT_EQ(enumerate_necklaces(2, 1).size(), 3u);
  EXPECT_EQ(enumerate_necklaces(1, 0).size(), 1u);
  EXPECT_EQ(enumerate_necklaces(4, 4).size(), 1050u);
  EXPECT_EQ(BigInt(enumerate_dh_necklaces(4, 4).size()), count_dh(4, 3));
}

TEST(Necklace, RoundTripAndUniqueCut) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 0; m + n <= 8; ++n) {
      std::set<Necklace> seen;
      for (const MotzkinWord& w : generate_all(m - 1, n)) {
        const Necklace x = necklace_from_motzkin(w);
        EXPECT_EQ(cut_points(x).size(), 1u) << w.str();
        EXPECT_EQ(motzkin_from_necklace(x), w);
        seen.insert(x);
      }
      EXPECT_EQ(BigInt(seen.size()), count_motzkin(m - 1, n));
    }
  }
}

TEST(Necklace, WrongBeadCountsAreRejected) {
  EXPECT_THROW(motzkin_from_necklace(Necklace("UD")), DomainError);
  EXPECT_THROW(motzkin_from_necklace(Necklace("HH")), DomainError);
}

TEST(Necklace, BoothMatchesNaiveRotation) {
  std::mt19937_64 rng(5);
  const std::string alphabet = "DHU";
  for (int trial = 0; trial < 1000; ++trial) {
    std::string s(rng() % 14, 'D');
    for (char& c : s) c = alphabet[rng() % 3];
    const std::string canonical = least_rotation(s);
    EXPECT_EQ(canonical, naive_least_rotation(s)) << s;
    // Every rotation lands on the same representative.
    if (!s.empty()) {
      const std::size_t k = rng() % s.size();
      EXPECT_EQ(Necklace(s.substr(k) + s.substr(0, k)).str(), canonical);
    }
  }
  EXPECT_EQ(least_rotation_index("UDD"), 1u);
  EXPECT_EQ(least_rotation("DDD"), "DDD");
}
