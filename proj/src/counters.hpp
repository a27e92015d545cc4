#pragma once

#include <cstdint>

namespace sigenum {

// Instrumentation shared by the enumerators. `work` is a machine-independent
// proxy for running time: every enumerator bumps it once per basic step
// (literal visit, trie step, adjacency check, ...). Delay bounds are asserted
// against these counters in the test suites.
struct EnumCounters {
  std::uint64_t sat_calls = 0;
  std::uint64_t work = 0;
  std::uint64_t emitted = 0;
};

}  // namespace sigenum
