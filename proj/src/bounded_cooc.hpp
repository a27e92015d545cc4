#pragma once

#include <utility>
#include <vector>

#include "clause_graph.hpp"
#include "counters.hpp"
#include "formula.hpp"
#include "util.hpp"

namespace sigenum {

// Induced-matching decomposition of the conflict graph: W holds the clauses
// adjacent to matching-covered clauses (the covered ones included), U is the
// conflict-free remainder, and L' collects the variables that appear only in
// U-clauses (necessarily with a single polarity).
struct CoocDecomposition {
  std::vector<std::pair<int, int>> matching;  // M
  Bitset w_clauses;                           // W (clause indices)
  Bitset u_clauses;                           // U = complement of W
  std::vector<int> lprime_vars;               // ascending
  Assignment lprime_fix;                      // per L' variable: its occurring literal is false
  std::vector<int> core_vars;                 // occurring variables outside L', ascending
};

// Requires a normalized formula (conflict_graph rejects tautologies).
// Verifies the structural facts the enumeration relies on: U independent in
// the conflict graph, every L'-variable monotone.
CoocDecomposition decompose(const Cnf& cnf);

// Signature associated to a maximal independent set of the conflict graph:
// every literal of the S-clauses is set false, which determines all clauses
// (S members 0, the rest 1 by maximality). Unassigned variables complete
// to 0. Throws InvariantError when some clause stays undetermined.
std::pair<Signature, Assignment> mis_signature(const Cnf& cnf, const Bitset& mis);
std::pair<Signature, Assignment> mis_signature(const Cnf& cnf, const std::vector<int>& mis);

struct BoundedCoocOptions {
  // Guard on the 2^{n'} core-variable sweep (phases 2 and 3). Phase 1 is
  // MIS-driven and streams before the guard applies.
  int max_core_vars = 24;
};

// Three phases, one global deduplication set:
//   1. fix L', enumerate maximal independent sets of the residual conflict
//      graph, lift their associated signatures;
//   2. sweep all assignments to the core variables with L' kept fixed;
//   3. per core assignment, flip L'-variables through the union closure of
//      the still-zero U-clauses.
bool enumerate_bounded_cooc(const Cnf& cnf, const SignatureSink& sink,
                            const BoundedCoocOptions& opts = {},
                            EnumCounters* counters = nullptr);

}  // namespace sigenum
