#include "splitpile/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "splitpile/errors.hpp"

namespace splitpile {

std::string_view reason_code(Reason r) {
  switch (r) {
    case Reason::None:
      return "none";
    case Reason::ThresholdViolation:
      return "threshold-violation";
    case Reason::MonotonicityViolation:
      return "monotonicity-violation";
    case Reason::PrefixViolation:
      return "prefix-violation";
    case Reason::DhViolation:
      return "dh-violation";
  }
  return "unknown";
}

Verdict rebuild_word(std::span<const std::uint64_t> up_letters,
                     std::span<const std::uint64_t> flat_downs) {
  const std::uint64_t downs = up_letters.size();
  const std::uint64_t skeleton_size = downs + flat_downs.size();

  for (std::uint64_t b : flat_downs) {
    if (b > downs) return {std::nullopt, Reason::ThresholdViolation};
  }
  for (std::uint64_t r : up_letters) {
    if (r > skeleton_size) return {std::nullopt, Reason::ThresholdViolation};
  }
  if (!std::ranges::is_sorted(up_letters, std::greater<>{}) ||
      !std::ranges::is_sorted(flat_downs, std::greater<>{})) {
    return {std::nullopt, Reason::MonotonicityViolation};
  }

  // Start from the H's alone and drop in the D's so that exactly b_i of them
  // follow the i-th H.
  std::string skeleton;
  skeleton.reserve(skeleton_size);
  std::uint64_t placed = 0;
  for (std::uint64_t b : flat_downs) {
    skeleton.append(downs - b - placed, kDown);
    placed = downs - b;
    skeleton.push_back(kFlat);
  }
  skeleton.append(downs - placed, kDown);

  // A U with r letters of the skeleton after it sits in gap (size - r). Equal
  // requirements share a gap; their relative order does not change the word.
  std::string word;
  word.reserve(skeleton_size + downs);
  // Requirements decrease, so gaps are met in sequence order.
  std::size_t next_up = 0;
  for (std::uint64_t gap = 0; gap <= skeleton_size; ++gap) {
    while (next_up < up_letters.size() && skeleton_size - up_letters[next_up] == gap) {
      word.push_back(kUp);
      ++next_up;
    }
    if (gap < skeleton_size) word.push_back(skeleton[gap]);
  }

  if (!validate_motzkin(word)) return {std::nullopt, Reason::PrefixViolation};
  return {MotzkinWord(std::move(word)), Reason::None};
}

namespace {

struct Profile {
  std::vector<Height> up_letters;  // #(D or H) after each U, in U order
  std::vector<Height> flat_downs;  // #D after each H, in H order
};

Profile letter_profile(const MotzkinWord& w) {
  Profile p;
  Height downs_after = 0;
  Height down_or_flat_after = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    switch (w[i]) {
      case kDown:
        ++downs_after;
        ++down_or_flat_after;
        break;
      case kFlat:
        p.flat_downs.push_back(downs_after);
        ++down_or_flat_after;
        break;
      default:
        p.up_letters.push_back(down_or_flat_after);
    }
  }
  std::ranges::reverse(p.up_letters);
  std::ranges::reverse(p.flat_downs);
  return p;
}

Configuration configuration_of(const Profile& p) {
  Configuration c;
  c.clique.reserve(p.up_letters.size());
  // Every U in a Motzkin word is followed by at least its matching D.
  for (Height r : p.up_letters) c.clique.push_back(r - 1);
  c.independent = p.flat_downs;
  return c;
}

Verdict invert(const SplitGraph& g, const Configuration& c, Side expected_sink) {
  if (g.sink_side() != expected_sink) {
    throw DomainError(expected_sink == Side::Clique ? "f inverse needs a clique sink"
                                                    : "g inverse needs an independent sink");
  }
  if (!is_stable(g, c)) throw NotStable("inverse bijection needs a stable configuration");
  const Configuration sorted = sorted_descending(c);
  std::vector<std::uint64_t> up_letters;
  up_letters.reserve(sorted.clique.size());
  for (Height a : sorted.clique) up_letters.push_back(a + 1);
  return rebuild_word(up_letters, sorted.independent);
}

}  // namespace

Configuration f_map(const MotzkinWord& w) { return configuration_of(letter_profile(w)); }

SplitGraph f_graph(const MotzkinWord& w) {
  return SplitGraph::with_clique_sink(w.ups() + 1, w.flats());
}

Verdict f_inverse(const SplitGraph& g, const Configuration& c) {
  return invert(g, c, Side::Clique);
}

Configuration g_map(const MotzkinWord& w) {
  if (w.ups() == 0) throw DomainError("g needs a word with at least one U");
  if (!is_dh_motzkin(w)) throw DomainError("\"" + w.str() + "\" is not a DH-Motzkin word");
  return configuration_of(letter_profile(w));
}

SplitGraph g_graph(const MotzkinWord& w) {
  return SplitGraph::with_independent_sink(w.ups(), w.flats() + 1);
}

Verdict g_inverse(const SplitGraph& g, const Configuration& c) {
  Verdict v = invert(g, c, Side::Independent);
  if (v.recurrent() && !is_dh_motzkin(*v.word)) return {std::nullopt, Reason::DhViolation};
  return v;
}

Verdict classify(const SplitGraph& g, const Configuration& c) {
  return g.sink_side() == Side::Clique ? f_inverse(g, c) : g_inverse(g, c);
}

Configuration sorted_descending(Configuration c) {
  std::ranges::sort(c.clique, std::greater<>{});
  std::ranges::sort(c.independent, std::greater<>{});
  return c;
}

bool is_weakly_decreasing(const Configuration& c) {
  return std::ranges::is_sorted(c.clique, std::greater<>{}) &&
         std::ranges::is_sorted(c.independent, std::greater<>{});
}

BigInt orbit_size(const Configuration& c) {
  auto arrangements = [](const std::vector<Height>& part) {
    std::map<Height, std::uint64_t> multiplicity;
    for (Height h : part) ++multiplicity[h];
    BigInt denominator = 1;
    for (const auto& [value, k] : multiplicity) denominator *= factorial(k);
    return exact_div(factorial(part.size()), denominator);
  };
  return arrangements(c.clique) * arrangements(c.independent);
}

std::vector<Configuration> decreasing_recurrent(const SplitGraph& g, std::uint64_t budget) {
  std::vector<Configuration> out;
  if (g.sink_side() == Side::Clique) {
    for (const MotzkinWord& w : generate_all(g.m() - 1, g.n(), budget)) out.push_back(f_map(w));
  } else {
    for (const MotzkinWord& w : generate_dh(g.m(), g.n() - 1, budget)) out.push_back(g_map(w));
  }
  std::ranges::sort(out);
  return out;
}

}  // namespace splitpile
