#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "counters.hpp"
#include "formula.hpp"
#include "sat.hpp"

namespace sigenum {

// Streams the minimal signatures with polynomial delay: they are in
// bijection with the maximal independent sets of the conflict graph.
// Requires a normalized formula.
bool enumerate_minimal_signatures(const Cnf& cnf, const SignatureSink& sink,
                                  EnumCounters* counters = nullptr);

// SAT front door: the all-ones vector is a signature iff the formula is
// satisfiable.
bool is_all_ones_signature(const Cnf& cnf, SatOracle& oracle);

using FullEnumerator = std::function<bool(const Cnf&, const SignatureSink&)>;

struct MaximalOptions {
  // Generating maximal signatures is NP-hard, so this is a desk-scale
  // filter over a full enumeration; the guard refuses rather than degrade.
  std::uint64_t max_collected = std::uint64_t(1) << 22;
};

// Coordinatewise-maximal elements of the full signature set produced by
// `source`. Resource guards (the source's and max_collected) surface as
// ResourceLimitError.
std::vector<Signature> maximal_signatures_bruteforce(const Cnf& cnf, const FullEnumerator& source,
                                                     const MaximalOptions& opts = {});

}  // namespace sigenum
