#pragma once

#include <vector>

#include "formula.hpp"
#include "union_enum.hpp"

namespace sigenum {

// Ground truth by exhaustion. These are test instruments: the limits are
// hard errors, never silent truncation.

struct OracleOptions {
  int max_vars = 20;
};

// Every signature with the first witness that produced it, in first-seen
// order over the lexicographic sweep of the 2^n assignments.
std::vector<std::pair<Signature, Assignment>> brute_force_signatures(
    const Cnf& cnf, const OracleOptions& opts = {});

enum class ExtremalDirection { minimal, maximal };

// Coordinatewise minimal/maximal elements under bitwise <=.
std::vector<Signature> brute_force_extremal(const std::vector<Signature>& sigs,
                                            ExtremalDirection direction);

// All unions over the 2^|members| subfamilies, deduplicated.
std::vector<Bitset> brute_force_unions(const SetFamily& family, bool include_empty,
                                       int max_members = 20);

}  // namespace sigenum
