#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "splitpile/errors.hpp"
#include "splitpile/motzkin.hpp"

using namespace splitpile;

namespace {

// Every arrangement of the letters, kept when no prefix dips below zero.
std::vector<std::string> brute_motzkin(std::size_t ups, std::size_t flats) {
  std::string letters = std::string(ups, 'D') + std::string(flats, 'H') + std::string(ups, 'U');
  std::vector<std::string> out;
  do {
    long level = 0;
    bool ok = true;
    for (char c : letters) {
      level += c == 'U' ? 1 : c == 'D' ? -1 : 0;
      ok = ok && level >= 0;
    }
    if (ok) out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

bool first_h_after_first_d(const std::string& w) {
  const auto h = w.find('H');
  return h == std::string::npos || w.find('D') < h;
}

}  // namespace

TEST(Motzkin, Validation) {
  EXPECT_TRUE(validate_motzkin("HUHHUDHUDD"));
  EXPECT_FALSE(validate_motzkin("DU"));
  EXPECT_TRUE(validate_motzkin("HHH"));
  EXPECT_TRUE(validate_motzkin(""));
  EXPECT_FALSE(validate_motzkin("UUD"));
  EXPECT_THROW(validate_motzkin("UXD"), AlphabetError);
  EXPECT_THROW(MotzkinWord("DU"), DomainError);
  EXPECT_THROW(MotzkinWord("ud"), AlphabetError);
}

TEST(Motzkin, LetterCounts) {
  const MotzkinWord w("HUHHUDHUDD");
  EXPECT_EQ(w.ups(), 3u);
  EXPECT_EQ(w.flats(), 4u);
  EXPECT_EQ(w.dyck_reduction(), "UUDUDD");
}

TEST(Motzkin, DhCondition) {
  EXPECT_TRUE(is_dh_motzkin(MotzkinWord("UUDHUDHUDDH")));
  EXPECT_FALSE(is_dh_motzkin(MotzkinWord("HUD")));
  EXPECT_TRUE(is_dh_motzkin(MotzkinWord("UD")));
  EXPECT_FALSE(is_dh_motzkin(MotzkinWord("UHD")));
}

TEST(Motzkin, SmallGenerations) {
  std::vector<std::string> words;
  for (const auto& w : generate_all(1, 1)) words.push_back(w.str());
  EXPECT_EQ(words, (std::vector<std::string>{"HUD", "UDH", "UHD"}));
  const auto hh = generate_all(0, 2);
  ASSERT_EQ(hh.size(), 1u);
  EXPECT_EQ(hh[0].str(), "HH");
  EXPECT_EQ(generate_all(3, 4).size(), 1050u);
}

TEST(Motzkin, GenerationMatchesBruteForce) {
  for (std::size_t u = 0; u <= 4; ++u) {
    for (std::size_t f = 0; u + f <= 6; ++f) {
      const auto brute = brute_motzkin(u, f);
      std::vector<std::string> generated;
      for (const auto& w : generate_all(u, f)) generated.push_back(w.str());
      EXPECT_EQ(generated, brute) << u << "," << f;
      EXPECT_EQ(count_motzkin(u, f), BigInt(brute.size()));

      std::vector<std::string> dh_brute;
      std::ranges::copy_if(brute, std::back_inserter(dh_brute), first_h_after_first_d);
      std::vector<std::string> dh;
      for (const auto& w : generate_dh(u, f)) dh.push_back(w.str());
      EXPECT_EQ(dh, dh_brute);
      if (u >= 1) EXPECT_EQ(count_dh(u, f), BigInt(dh_brute.size()));
    }
  }
}

TEST(Motzkin, Counts) {
  EXPECT_EQ(count_motzkin(1, 1), 3);
  EXPECT_EQ(count_motzkin(0, 5), 1);
  EXPECT_EQ(count_motzkin(3, 4), 1050);
  EXPECT_EQ(count_dh(2, 1), 5);
  EXPECT_EQ(count_dh(1, 0), 1);
  EXPECT_EQ(count_dh(4, 3), 825);
  EXPECT_EQ(count_syt_hook(2, 1), 5);
  EXPECT_EQ(count_syt_hook(1, 0), 1);
  EXPECT_EQ(count_syt_hook(4, 3), 825);
}

TEST(Motzkin, HookLengthMatchesCornerRemoval) {
  for (std::size_t u = 1; u <= 6; ++u) {
    for (std::size_t h = 0; u + h <= 9; ++h) {
      std::vector<std::size_t> shape{u, u};
      shape.insert(shape.end(), h, 1);
      EXPECT_EQ(count_syt_hook(u, h), oracle::syt_count(shape)) << u << "," << h;
      EXPECT_EQ(count_dh(u, h), count_syt_hook(u, h));
    }
  }
}

TEST(Motzkin, CatalanSpecialCase) {
  for (std::size_t m = 1; m <= 10; ++m) EXPECT_EQ(count_dh(m, 0), oracle::catalan(m));
}

TEST(Motzkin, TableauExamples) {
  const auto t = syt_from_dh(MotzkinWord("UUDHUDHUDDH"));
  EXPECT_EQ(t.shape, (std::vector<std::size_t>{4, 4, 1, 1, 1}));
  EXPECT_EQ(t.rows, (std::vector<std::vector<std::size_t>>{
                        {1, 2, 5, 8}, {3, 6, 9, 10}, {4}, {7}, {11}}));
  EXPECT_TRUE(t.is_standard());
  const auto ud = syt_from_dh(MotzkinWord("UD"));
  EXPECT_EQ(ud.rows, (std::vector<std::vector<std::size_t>>{{1}, {2}}));
  const auto udh = syt_from_dh(MotzkinWord("UDH"));
  EXPECT_EQ(udh.rows, (std::vector<std::vector<std::size_t>>{{1}, {2}, {3}}));
}

TEST(Motzkin, TableauRoundTrip) {
  for (std::size_t u = 1; u <= 4; ++u) {
    for (std::size_t h = 0; u + h <= 7; ++h) {
      for (const auto& w : generate_dh(u, h)) {
        const auto t = syt_from_dh(w);
        EXPECT_TRUE(t.is_standard());
        EXPECT_EQ(dh_from_syt(t), w);
      }
    }
  }
}

TEST(Motzkin, TableauErrors) {
  EXPECT_THROW(syt_from_dh(MotzkinWord("HUD")), DomainError);
  EXPECT_THROW(syt_from_dh(MotzkinWord("HH")), DomainError);
  StandardYoungTableau square{{2, 2}, {{1, 3}, {2, 4}}};
  EXPECT_TRUE(square.is_standard());
  EXPECT_EQ(dh_from_syt(square).str(), "UDUD");
  StandardYoungTableau unsorted{{2, 2}, {{1, 4}, {2, 3}}};
  EXPECT_FALSE(unsorted.is_standard());
  EXPECT_THROW(dh_from_syt(unsorted), DomainError);
  StandardYoungTableau wrong_shape{{3, 1}, {{1, 2, 3}, {4}}};
  EXPECT_THROW(dh_from_syt(wrong_shape), DomainError);
}

TEST(Motzkin, BudgetIsEnforced) {
  EXPECT_THROW(generate_all(4, 4, 100), BudgetExceeded);
}

TEST(Motzkin, AsciiPath) {
  EXPECT_EQ(ascii_path(MotzkinWord("UD")), "/\\\n");
  EXPECT_EQ(ascii_path(MotzkinWord("HUD")), "_/\\\n");
  EXPECT_EQ(ascii_path(MotzkinWord("UUDD")), " /\\\n/  \\\n");
}
