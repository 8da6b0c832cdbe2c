#include "splitpile/prufer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "splitpile/errors.hpp"

namespace splitpile {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string label_name(std::size_t label) { return "v" + std::to_string(label); }

}  // namespace

SpanningTree::SpanningTree(std::vector<LabelEdge> edges) : edges_(std::move(edges)) {
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
  }
  std::ranges::sort(edges_);
}

bool SpanningTree::is_valid(std::size_t m, std::size_t n) const {
  const std::size_t total = m + n;
  if (m == 0 || n == 0 || edges_.size() + 1 != total) return false;
  DisjointSets sets(total + 1);
  for (const auto& [a, b] : edges_) {
    if (a == 0 || b > total || a == b) return false;
    if (a > m && b > m) return false;  // two independent vertices
    if (!sets.unite(a, b)) return false;
  }
  return true;
}

PruferPair encode(const SpanningTree& t, std::size_t m, std::size_t n) {
  if (!t.is_valid(m, n)) throw DomainError("not a spanning tree of S(m,n)");
  const std::size_t total = m + n;
  std::vector<std::set<std::size_t>> adjacent(total + 1);
  for (const auto& [a, b] : t.edges()) {
    adjacent[a].insert(b);
    adjacent[b].insert(a);
  }

  std::set<std::size_t> leaves;
  for (std::size_t v = 1; v <= total; ++v) {
    if (adjacent[v].size() == 1) leaves.insert(v);
  }

  PruferPair code;
  for (std::size_t step = 0; step + 2 < total; ++step) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    const std::size_t parent = *adjacent[leaf].begin();
    (leaf <= m ? code.f : code.g).push_back(parent);
    adjacent[parent].erase(leaf);
    adjacent[leaf].clear();
    if (adjacent[parent].size() == 1) leaves.insert(parent);
  }
  return code;
}

SpanningTree decode(const PruferPair& p, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DomainError("S(m,n) needs m >= 1 and n >= 1");
  if (p.f.size() + 1 != m || p.g.size() + 1 != n) {
    throw DomainError("code lengths must be (m-1, n-1) = (" + std::to_string(m - 1) + ", " +
                      std::to_string(n - 1) + ")");
  }
  const std::size_t total = m + n;
  std::vector<std::size_t> pending(total + 1, 0);
  for (std::size_t x : p.f) {
    if (x == 0 || x > total) throw DomainError("f letter " + label_name(x) + " out of range");
    ++pending[x];
  }
  for (std::size_t x : p.g) {
    if (x == 0 || x > m) throw DomainError("g letter " + label_name(x) + " is not a clique vertex");
    ++pending[x];
  }

  std::set<std::size_t> leaves;
  for (std::size_t v = 1; v <= total; ++v) {
    if (pending[v] == 0) leaves.insert(v);
  }

  std::vector<LabelEdge> edges;
  edges.reserve(total - 1);
  std::size_t next_f = 0;
  std::size_t next_g = 0;
  for (std::size_t step = 0; step + 2 < total; ++step) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    const bool from_clique = leaf <= m;
    const std::vector<std::size_t>& word = from_clique ? p.f : p.g;
    std::size_t& cursor = from_clique ? next_f : next_g;
    if (cursor == word.size()) throw DomainError("code pair is not decodable");
    const std::size_t parent = word[cursor++];
    edges.emplace_back(leaf, parent);
    if (--pending[parent] == 0) leaves.insert(parent);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));

  SpanningTree tree(std::move(edges));
  if (!tree.is_valid(m, n)) throw DomainError("code pair does not decode to a spanning tree");
  return tree;
}

BigInt count_spanning_trees(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DomainError("S(m,n) needs m >= 1 and n >= 1");
  return power(m + n, m - 1) * power(m, n - 1);
}

namespace {

void grow(const std::vector<LabelEdge>& edges, std::size_t from, std::size_t wanted,
          std::vector<std::size_t>& components, std::vector<LabelEdge>& chosen,
          std::vector<SpanningTree>& out) {
  if (chosen.size() == wanted) {
    out.emplace_back(chosen);
    return;
  }
  // Not enough edges left to finish.
  if (edges.size() - from < wanted - chosen.size()) return;
  for (std::size_t e = from; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    const std::size_t ca = components[a];
    const std::size_t cb = components[b];
    if (ca == cb) continue;
    std::vector<std::size_t> saved = components;
    for (std::size_t& c : components) {
      if (c == cb) c = ca;
    }
    chosen.push_back(edges[e]);
    grow(edges, e + 1, wanted, components, chosen, out);
    chosen.pop_back();
    components = std::move(saved);
  }
}

}  // namespace

std::vector<SpanningTree> brute_spanning_trees(std::size_t m, std::size_t n, std::uint64_t budget) {
  const SplitGraph g = SplitGraph::with_clique_sink(m, n);
  const std::vector<LabelEdge> edges = as_generic_graph(g);
  const std::size_t wanted = m + n - 1;
  const BigInt subsets = binomial(edges.size(), wanted);
  if (subsets > budget) {
    throw BudgetExceeded("S(" + std::to_string(m) + "," + std::to_string(n) + ") has " +
                         subsets.str() + " candidate edge subsets, budget is " +
                         std::to_string(budget));
  }
  std::vector<std::size_t> components(m + n + 1);
  std::iota(components.begin(), components.end(), std::size_t{0});
  std::vector<LabelEdge> chosen;
  std::vector<SpanningTree> out;
  grow(edges, 0, wanted, components, chosen, out);
  std::ranges::sort(out);
  return out;
}

std::vector<PruferPair> all_prufer_pairs(std::size_t m, std::size_t n, std::uint64_t budget) {
  const BigInt total = count_spanning_trees(m, n);
  if (total > budget) {
    throw BudgetExceeded("S(" + std::to_string(m) + "," + std::to_string(n) + ") has " +
                         total.str() + " code pairs, budget is " + std::to_string(budget));
  }
  std::vector<PruferPair> out;
  out.reserve(static_cast<std::size_t>(total));
  PruferPair p{std::vector<std::size_t>(m - 1, 1), std::vector<std::size_t>(n - 1, 1)};
  while (true) {
    out.push_back(p);
    bool carried = true;
    for (std::size_t k = p.g.size(); k-- > 0 && carried;) {
      if (++p.g[k] <= m) {
        carried = false;
      } else {
        p.g[k] = 1;
      }
    }
    for (std::size_t k = p.f.size(); k-- > 0 && carried;) {
      if (++p.f[k] <= m + n) {
        carried = false;
      } else {
        p.f[k] = 1;
      }
    }
    if (carried) break;
  }
  return out;
}

}  // namespace splitpile
