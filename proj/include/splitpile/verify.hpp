#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "splitpile/sandpile.hpp"
#include "splitpile/split_graph.hpp"

namespace splitpile {

struct IdentityCheck {
  std::string identity;
  std::size_t m = 0;
  std::size_t n = 0;
  Side sink = Side::Clique;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  // Seeds the random unstable configurations used for the abelian check.
  std::uint64_t seed = 1;
  std::size_t random_samples = 20;
  // Harness self-test: corrupts one expected value so a failure must be reported.
  bool inject_fault = false;
};

// Every identity for one graph cell S(m,n) with the given sink side.
std::vector<IdentityCheck> verify_cell(std::size_t m, std::size_t n, Side sink,
                                       const VerifyOptions& options = {});

// All cells 1 <= m <= m_max, 1 <= n <= n_max, both sinks, in that order.
std::vector<IdentityCheck> verify_range(std::size_t m_max, std::size_t n_max,
                                        const VerifyOptions& options = {});

}  // namespace splitpile
