#pragma once

#include <vector>

#include "counters.hpp"
#include "formula.hpp"
#include "sat.hpp"

namespace sigenum {

// Backtracking node: the first `depth` signature coordinates are fixed and
// `forced` is exactly the union of "all literals false" over the clauses
// whose coordinate is 0.
struct PrefixNode {
  int depth = 0;
  std::vector<std::int8_t> bits;
  Assignment forced;
  bool consistent = true;  // no variable forced both ways
};

PrefixNode make_prefix(const Cnf& cnf, const std::vector<std::int8_t>& bits);

// True iff some total assignment extends node.forced, satisfies every
// one-clause of the prefix and falsifies every zero-clause. Inconsistent
// forcing is decided without a SAT call.
bool prefix_feasible(const Cnf& cnf, const PrefixNode& node, SatOracle& oracle);

// Depth-first search over signature prefixes, child bit 1 before bit 0.
// Emits every signature exactly once together with a satisfying witness.
// The oracle's call counter advances by at most 2m between consecutive
// emissions and by at most m after the last one.
bool enumerate_flashlight(const Cnf& cnf, SatOracle& oracle, const SignatureSink& sink,
                          EnumCounters* counters = nullptr);

}  // namespace sigenum
