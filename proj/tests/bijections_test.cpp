#include <gtest/gtest.h>

#include <algorithm>

#include "splitpile/bijections.hpp"
#include "splitpile/errors.hpp"
#include "splitpile/prufer.hpp"

using namespace splitpile;

namespace {

std::vector<std::uint64_t> u64(std::initializer_list<std::uint64_t> xs) { return xs; }

}  // namespace

TEST(Bijections, FMapExamples) {
  const MotzkinWord alpha("HUHHUDHUDD");
  EXPECT_EQ(f_map(alpha), (Configuration{{5, 3, 1}, {3, 3, 3, 2}}));
  const SplitGraph g = f_graph(alpha);
  EXPECT_EQ(g.m(), 4u);
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.sink(), VertexId::clique(4));
  EXPECT_EQ(f_map(MotzkinWord("UDH")), (Configuration{{1}, {0}}));
  EXPECT_EQ(f_map(MotzkinWord("HUD")), (Configuration{{0}, {1}}));
}

TEST(Bijections, FInverseExamples) {
  const auto triangle = SplitGraph::with_clique_sink(2, 1);
  const Verdict uhd = f_inverse(triangle, {{1}, {1}});
  ASSERT_TRUE(uhd.recurrent());
  EXPECT_EQ(uhd.word->str(), "UHD");
  const Verdict zero = f_inverse(triangle, {{0}, {0}});
  EXPECT_FALSE(zero.recurrent());
  EXPECT_EQ(zero.reason, Reason::PrefixViolation);
  const Verdict alpha = f_inverse(SplitGraph::with_clique_sink(4, 4), {{5, 3, 1}, {3, 3, 3, 2}});
  ASSERT_TRUE(alpha.recurrent());
  EXPECT_EQ(alpha.word->str(), "HUHHUDHUDD");
}

TEST(Bijections, FInverseSortsItsInput) {
  const Verdict v = f_inverse(SplitGraph::with_clique_sink(4, 4), {{1, 5, 3}, {2, 3, 3, 3}});
  ASSERT_TRUE(v.recurrent());
  EXPECT_EQ(v.word->str(), "HUHHUDHUDD");
}

TEST(Bijections, GMapExamples) {
  const MotzkinWord alpha("UUDHUDHUDDH");
  EXPECT_EQ(g_map(alpha), (Configuration{{6, 6, 4, 2}, {3, 2, 0}}));
  EXPECT_EQ(g_graph(alpha).sink(), VertexId::independent(4));
  EXPECT_EQ(g_map(MotzkinWord("UD")), (Configuration{{0}, {}}));
  // After each U only the two D's remain among {D, H}.
  EXPECT_EQ(g_map(MotzkinWord("UUDD")), (Configuration{{1, 1}, {}}));
  EXPECT_THROW(g_map(MotzkinWord("HUD")), DomainError);
  EXPECT_THROW(g_map(MotzkinWord("HH")), DomainError);
}

TEST(Bijections, GInverseExamples) {
  const Verdict alpha = g_inverse(SplitGraph::with_independent_sink(4, 4), {{6, 6, 4, 2}, {3, 2, 0}});
  ASSERT_TRUE(alpha.recurrent());
  EXPECT_EQ(alpha.word->str(), "UUDHUDHUDDH");
  EXPECT_FALSE(g_inverse(SplitGraph::with_independent_sink(2, 2), {{0, 0}, {0}}).recurrent());
  const Verdict single = g_inverse(SplitGraph::with_independent_sink(1, 1), {{0}, {}});
  ASSERT_TRUE(single.recurrent());
  EXPECT_EQ(single.word->str(), "UD");
}

TEST(Bijections, WrongSinkSideIsRejected) {
  EXPECT_THROW(f_inverse(SplitGraph::with_independent_sink(2, 2), {{0, 0}, {0}}), DomainError);
  EXPECT_THROW(g_inverse(SplitGraph::with_clique_sink(2, 2), {{0}, {0, 0}}), DomainError);
  EXPECT_THROW(f_inverse(SplitGraph::with_clique_sink(2, 1), {{2}, {0}}), NotStable);
}

TEST(Bijections, ClassifyExamples) {
  const Verdict v = classify(SplitGraph::with_clique_sink(2, 1), {{1}, {0}});
  ASSERT_TRUE(v.recurrent());
  EXPECT_EQ(v.word->str(), "UDH");
  EXPECT_FALSE(classify(SplitGraph::with_clique_sink(2, 1), {{0}, {0}}).recurrent());
  const auto g22 = SplitGraph::with_independent_sink(2, 2);
  const auto decreasing = decreasing_recurrent(g22);
  EXPECT_EQ(decreasing.size(), 5u);
  for (const Configuration& c : decreasing) EXPECT_TRUE(classify(g22, c).recurrent());
}

TEST(Bijections, RebuildReasons) {
  EXPECT_EQ(rebuild_word(u64({3}), u64({})).reason, Reason::ThresholdViolation);
  EXPECT_EQ(rebuild_word(u64({1}), u64({2})).reason, Reason::ThresholdViolation);
  EXPECT_EQ(rebuild_word(u64({1, 2}), u64({})).reason, Reason::MonotonicityViolation);
  EXPECT_EQ(rebuild_word(u64({0}), u64({})).reason, Reason::PrefixViolation);
  const Verdict ok = rebuild_word(u64({2}), u64({1}));
  ASSERT_TRUE(ok.recurrent());
  EXPECT_EQ(ok.word->str(), "UHD");
  EXPECT_EQ(reason_code(Reason::None), "none");
  EXPECT_EQ(reason_code(Reason::ThresholdViolation), "threshold-violation");
  EXPECT_EQ(reason_code(Reason::MonotonicityViolation), "monotonicity-violation");
  EXPECT_EQ(reason_code(Reason::PrefixViolation), "prefix-violation");
  EXPECT_EQ(reason_code(Reason::DhViolation), "dh-violation");
}

TEST(Bijections, ClassifyAgreesWithBurning) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; m + n <= 6; ++n) {
      for (const auto& g : {SplitGraph::with_clique_sink(m, n), SplitGraph::with_independent_sink(m, n)}) {
        for (const Configuration& c : all_stable(g)) {
          const Verdict v = classify(g, c);
          ASSERT_EQ(v.recurrent(), is_recurrent(g, c).recurrent) << to_string(g, c);
          if (!v.recurrent()) EXPECT_NE(v.reason, Reason::None);
        }
      }
    }
  }
}

TEST(Bijections, RoundTripsOnEveryWord) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; m + n <= 7; ++n) {
      const auto gc = SplitGraph::with_clique_sink(m, n);
      for (const MotzkinWord& w : generate_all(m - 1, n)) {
        const Configuration c = f_map(w);
        EXPECT_TRUE(is_weakly_decreasing(c));
        EXPECT_EQ(*f_inverse(gc, c).word, w);
      }
      const auto gi = SplitGraph::with_independent_sink(m, n);
      for (const MotzkinWord& w : generate_dh(m, n - 1)) {
        const Configuration c = g_map(w);
        EXPECT_TRUE(is_weakly_decreasing(c));
        EXPECT_EQ(*g_inverse(gi, c).word, w);
      }
    }
  }
}

TEST(Bijections, ImagesAreTheDecreasingRecurrentSets) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; m + n <= 6; ++n) {
      for (const auto& g : {SplitGraph::with_clique_sink(m, n), SplitGraph::with_independent_sink(m, n)}) {
        std::vector<Configuration> brute;
        std::ranges::copy_if(all_recurrent_brute(g), std::back_inserter(brute), is_weakly_decreasing);
        EXPECT_EQ(decreasing_recurrent(g), brute);
      }
    }
  }
}

TEST(Bijections, OrbitExpansion) {
  EXPECT_EQ(orbit_size({{2, 1, 1}, {0, 0}}), 3);
  EXPECT_EQ(orbit_size({{3, 2, 1}, {1, 0}}), 12);
  EXPECT_EQ(sorted_descending({{1, 3, 2}, {0, 4}}), (Configuration{{3, 2, 1}, {4, 0}}));
  EXPECT_FALSE(is_weakly_decreasing({{1, 3}, {}}));
  const auto g = SplitGraph::with_clique_sink(2, 2);
  const auto decreasing = decreasing_recurrent(g);
  EXPECT_EQ(decreasing.size(), 6u);
  BigInt total = 0;
  for (const Configuration& c : decreasing) total += orbit_size(c);
  EXPECT_EQ(total, 8);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; m + n <= 7; ++n) {
      for (const auto& h : {SplitGraph::with_clique_sink(m, n), SplitGraph::with_independent_sink(m, n)}) {
        BigInt sum = 0;
        for (const Configuration& c : decreasing_recurrent(h)) sum += orbit_size(c);
        EXPECT_EQ(sum, count_spanning_trees(m, n));
      }
    }
  }
}
