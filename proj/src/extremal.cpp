#include "extremal.hpp"

#include <string>

#include "bounded_cooc.hpp"
#include "clause_graph.hpp"
#include "errors.hpp"
#include "oracle.hpp"

namespace sigenum {

bool enumerate_minimal_signatures(const Cnf& cnf, const SignatureSink& sink,
                                  EnumCounters* counters) {
  ClauseGraph conflicts = conflict_graph(cnf);
  return enumerate_maximal_independent_sets(
      conflicts,
      [&](const Bitset& mis) {
        auto [sig, wit] = mis_signature(cnf, mis);
        if (counters) counters->work += cnf.num_literals() + 1;
        return sink(sig, wit);
      },
      counters);
}

bool is_all_ones_signature(const Cnf& cnf, SatOracle& oracle) {
  return oracle.solve(cnf, Assignment(cnf.num_vars)).sat();
}

std::vector<Signature> maximal_signatures_bruteforce(const Cnf& cnf, const FullEnumerator& source,
                                                     const MaximalOptions& opts) {
  std::vector<Signature> all;
  source(cnf, [&](const Signature& sig, const Assignment&) {
    if (all.size() >= opts.max_collected)
      throw ResourceLimitError("maximal-signature filter collected more than " +
                               std::to_string(opts.max_collected) + " signatures");
    all.push_back(sig);
    return true;
  });
  return brute_force_extremal(all, ExtremalDirection::maximal);
}

}  // namespace sigenum
