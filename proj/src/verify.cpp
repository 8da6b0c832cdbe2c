#include "splitpile/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "splitpile/bijections.hpp"
#include "splitpile/motzkin.hpp"
#include "splitpile/necklace.hpp"
#include "splitpile/parking.hpp"
#include "splitpile/prufer.hpp"

namespace splitpile {

namespace {

class Recorder {
 public:
  Recorder(std::size_t m, std::size_t n, Side sink) : m_(m), n_(n), sink_(sink) {}

  void check(std::string identity, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(identity), m_, n_, sink_, passed, std::move(detail)});
  }

  template <typename A, typename B>
  void equal(std::string identity, const A& lhs, const B& rhs) {
    const bool ok = lhs == rhs;
    check(std::move(identity), ok, describe(lhs) + (ok ? " == " : " != ") + describe(rhs));
  }

  std::vector<IdentityCheck> take() { return std::move(checks_); }

 private:
  static std::string describe(const BigInt& x) { return x.str(); }
  static std::string describe(std::size_t x) { return std::to_string(x); }

  std::size_t m_;
  std::size_t n_;
  Side sink_;
  std::vector<IdentityCheck> checks_;
};

std::vector<std::int64_t> signed_copy(const std::vector<Height>& values, Height offset = 0) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (Height v : values) out.push_back(static_cast<std::int64_t>(v + offset));
  return out;
}

// Fires random unstable vertices one at a time until stable.
Stabilization random_order_stabilize(const SplitGraph& g, Configuration c, std::mt19937_64& rng) {
  const std::vector<VertexId> vertices = g.non_sink_vertices();
  Odometer fired{std::vector<std::uint64_t>(c.clique.size(), 0),
                 std::vector<std::uint64_t>(c.independent.size(), 0)};
  std::vector<VertexId> unstable;
  while (true) {
    unstable.clear();
    for (VertexId v : vertices) {
      if (is_unstable_at(g, c, v)) unstable.push_back(v);
    }
    if (unstable.empty()) break;
    const VertexId v = unstable[std::uniform_int_distribution<std::size_t>(0, unstable.size() - 1)(rng)];
    topple(g, c, v);
    ++(v.side == Side::Clique ? fired.clique : fired.independent)[part_position(g, v)];
  }
  return {std::move(c), std::move(fired)};
}

}  // namespace

std::vector<IdentityCheck> verify_cell(std::size_t m, std::size_t n, Side sink,
                                       const VerifyOptions& options) {
  Recorder rec(m, n, sink);
  const SplitGraph g = sink == Side::Clique ? SplitGraph::with_clique_sink(m, n)
                                            : SplitGraph::with_independent_sink(m, n);

  BigInt trees = count_spanning_trees(m, n);
  if (options.inject_fault) trees += 1;

  const std::vector<Configuration> stable = all_stable(g, options.budget);
  std::vector<Configuration> recurrent;
  std::size_t classify_disagreements = 0;
  std::size_t parking_disagreements = 0;
  std::size_t certificate_failures = 0;
  for (const Configuration& c : stable) {
    const BurningResult burn = is_recurrent(g, c);
    if (burn.recurrent) {
      recurrent.push_back(c);
      if (!replay_certificate(g, c, *burn.certificate)) ++certificate_failures;
    }
    if (classify(g, c).recurrent() != burn.recurrent) ++classify_disagreements;
    const auto b = signed_copy(c.independent);
    const auto a_plus_one = signed_copy(c.clique, 1);
    const bool parked = sink == Side::Clique
                            ? is_recurrent_via_parking_clique(m, n, b, a_plus_one)
                            : is_recurrent_via_parking_independent(m, n, b, a_plus_one);
    if (parked != burn.recurrent) ++parking_disagreements;
  }
  rec.equal("recurrent-count=spanning-tree-formula", BigInt(recurrent.size()), trees);
  rec.equal("burning-certificate-replay-failures", certificate_failures, std::size_t{0});
  rec.equal("bijection-classifier-disagreements", classify_disagreements, std::size_t{0});
  rec.equal("strict-parking-disagreements", parking_disagreements, std::size_t{0});

  std::vector<Configuration> decreasing_brute;
  std::ranges::copy_if(recurrent, std::back_inserter(decreasing_brute), is_weakly_decreasing);
  const std::vector<Configuration> image = decreasing_recurrent(g, options.budget);
  rec.check("word-image=decreasing-recurrent", image == decreasing_brute,
            std::to_string(image.size()) + " images vs " + std::to_string(decreasing_brute.size()) +
                " brute-force");
  const BigInt formula =
      sink == Side::Clique
          ? exact_div(binomial(2 * m - 2, m - 1) * binomial(2 * m - 2 + n, n), m)
          : exact_div(binomial(2 * m + n - 1, m - 1) * binomial(m + n - 2, m - 1), m);
  rec.equal("decreasing-count=formula", BigInt(image.size()), formula);

  BigInt expanded = 0;
  for (const Configuration& c : decreasing_brute) expanded += orbit_size(c);
  rec.equal("orbit-expansion=spanning-tree-formula", expanded, trees);

  std::size_t roundtrip_failures = 0;
  if (sink == Side::Clique) {
    const auto words = generate_all(m - 1, n, options.budget);
    for (const MotzkinWord& w : words) {
      const Verdict v = f_inverse(g, f_map(w));
      if (!v.recurrent() || *v.word != w) ++roundtrip_failures;
    }
    rec.equal("f-inverse-roundtrip-failures", roundtrip_failures, std::size_t{0});

    std::size_t necklace_failures = 0;
    std::set<Necklace> necklaces;
    for (const MotzkinWord& w : words) {
      const Necklace x = necklace_from_motzkin(w);
      necklaces.insert(x);
      if (cut_points(x).size() != 1 || motzkin_from_necklace(x) != w) ++necklace_failures;
    }
    rec.equal("necklace-roundtrip-failures", necklace_failures, std::size_t{0});
    rec.equal("necklace-count=motzkin-count", BigInt(necklaces.size()), count_motzkin(m - 1, n));
  } else {
    const auto words = generate_dh(m, n - 1, options.budget);
    std::size_t syt_failures = 0;
    for (const MotzkinWord& w : words) {
      const Verdict v = g_inverse(g, g_map(w));
      if (!v.recurrent() || *v.word != w) ++roundtrip_failures;
      const StandardYoungTableau t = syt_from_dh(w);
      if (!t.is_standard() || dh_from_syt(t) != w) ++syt_failures;
    }
    rec.equal("g-inverse-roundtrip-failures", roundtrip_failures, std::size_t{0});
    rec.equal("syt-roundtrip-failures", syt_failures, std::size_t{0});
    rec.equal("dh-count=hook-length", count_dh(m, n - 1), count_syt_hook(m, n - 1));
    rec.equal("dh-count=enumeration", count_dh(m, n - 1), BigInt(words.size()));
  }

  std::mt19937_64 rng(options.seed ^ (m * 1000003u + n * 1009u + (sink == Side::Clique ? 0u : 1u)));
  std::size_t abelian_failures = 0;
  for (std::size_t sample = 0; sample < options.random_samples; ++sample) {
    Configuration c = zero_configuration(g);
    std::uniform_int_distribution<Height> grains(0, 3 * (m + n));
    for (Height& h : c.clique) h = grains(rng);
    for (Height& h : c.independent) h = grains(rng);
    const Stabilization reference = stabilize(g, c);
    const Stabilization shuffled = random_order_stabilize(g, c, rng);
    if (reference.config != shuffled.config || reference.topples != shuffled.topples) {
      ++abelian_failures;
    }
  }
  rec.equal("abelian-random-order-failures", abelian_failures, std::size_t{0});

  // Tree identities do not depend on the sink; run them with the clique cell.
  if (sink == Side::Clique) {
    const auto tree_list = brute_spanning_trees(m, n, options.budget);
    rec.equal("brute-trees=spanning-tree-formula", BigInt(tree_list.size()), trees);
    std::size_t tree_failures = 0;
    std::set<PruferPair> codes;
    for (const SpanningTree& t : tree_list) {
      const PruferPair p = encode(t, m, n);
      codes.insert(p);
      if (decode(p, m, n) != t) ++tree_failures;
    }
    rec.equal("decode-encode-failures", tree_failures, std::size_t{0});
    rec.equal("distinct-codes=trees", codes.size(), tree_list.size());
    std::size_t pair_failures = 0;
    for (const PruferPair& p : all_prufer_pairs(m, n, options.budget)) {
      if (encode(decode(p, m, n), m, n) != p) ++pair_failures;
    }
    rec.equal("encode-decode-failures", pair_failures, std::size_t{0});
  }

  return rec.take();
}

std::vector<IdentityCheck> verify_range(std::size_t m_max, std::size_t n_max,
                                        const VerifyOptions& options) {
  std::vector<IdentityCheck> out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (Side sink : {Side::Clique, Side::Independent}) {
        auto cell = verify_cell(m, n, sink, options);
        out.insert(out.end(), std::make_move_iterator(cell.begin()),
                   std::make_move_iterator(cell.end()));
      }
    }
  }
  return out;
}

}  // namespace splitpile
