#pragma once

#include <vector>

#include "counters.hpp"
#include "formula.hpp"

namespace sigenum {

struct BoundedDimOptions {
  // Guard on n' (variables touched by the dual-graph MIS) before the 2^{n'}
  // subproblem sweep. The 2^|S| seed signatures stream first either way, so
  // pulling a bounded number of outputs works even past the guard.
  int max_seed_vars = 24;
};

// The 2^|S| seed signatures of a dual-graph maximal independent set: one
// free literal per S-clause (its first literal in input order), every other
// literal of S-clauses falsified, all remaining variables 0. Throws
// InvariantError when the clauses of S are not pairwise variable-disjoint.
bool seed_signatures(const Cnf& cnf, const std::vector<int>& mis, const SignatureSink& sink,
                     EnumCounters* counters = nullptr);

// Recursive bounded-dimension enumeration: dimension <= 1 by direct
// evaluation, dimension 2 by the two-sat flashlight, otherwise seeds of a
// greedy dual-graph MIS followed by recursion into the 2^{n'} residual
// subproblems. Emits each signature of the formula exactly once (global
// deduplication over full signatures).
bool enumerate_bounded_dim(const Cnf& cnf, const SignatureSink& sink,
                           const BoundedDimOptions& opts = {},
                           EnumCounters* counters = nullptr);

}  // namespace sigenum
