#include "bounded_dim.hpp"

#include <string>
#include <unordered_set>

#include "clause_graph.hpp"
#include "errors.hpp"
#include "flashlight.hpp"
#include "sat.hpp"
#include "util.hpp"

namespace sigenum {

namespace {

Bitset clause_var_bits(const Cnf& cnf, int index) {
  Bitset bits(cnf.num_vars + 1);
  for (const Literal& l : cnf.clauses[index].literals()) bits.set(l.var());
  return bits;
}

// All signatures of a formula of dimension <= 1: every assignment to the
// occurring variables yields a distinct signature, so the sweep is
// output-linear.
bool enumerate_dim_le1(const Cnf& cnf, const SignatureSink& emit, EnumCounters* counters) {
  std::vector<int> vars = occurring_variables(cnf);
  if (vars.size() > 62)
    throw ResourceLimitError("dimension-1 enumeration over " + std::to_string(vars.size()) +
                             " variables exceeds the 2^62 output bound");
  const int k = static_cast<int>(vars.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    Assignment a(cnf.num_vars);
    for (int i = 0; i < k; ++i) a.set(vars[i], (mask >> (k - 1 - i)) & 1);
    a.complete_with_zeros();
    if (counters) counters->work += cnf.num_literals() + k + 1;
    if (!emit(signature_of(cnf, a), a)) return false;
  }
  return true;
}

struct BoundedDimRun {
  const BoundedDimOptions& opts;
  EnumCounters* counters;

  bool recurse(const Cnf& sub, const SignatureSink& emit) {
    const int d = sub.dimension();
    if (d <= 1) return enumerate_dim_le1(sub, emit, counters);
    if (d == 2) {
      SatOracle oracle(Engine::two_sat);
      return enumerate_flashlight(sub, oracle, emit, counters);
    }

    ClauseGraph dual = dual_graph(sub);
    std::vector<int> mis = greedy_maximal_independent_set(dual);
    if (!seed_signatures(sub, mis, emit, counters)) return false;

    Bitset mis_vars(sub.num_vars + 1);
    for (int ci : mis)
      for (const Literal& l : sub.clauses[ci].literals()) mis_vars.set(l.var());
    std::vector<int> vars = mis_vars.to_indices();
    const int nprime = static_cast<int>(vars.size());
    if (nprime > opts.max_seed_vars)
      throw ResourceLimitError("bounded-dim sweep over n'=" + std::to_string(nprime) +
                               " variables exceeds the guard (" +
                               std::to_string(opts.max_seed_vars) + ")");

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nprime); ++mask) {
      Assignment x(sub.num_vars);
      for (int i = 0; i < nprime; ++i) x.set(vars[i], (mask >> (nprime - 1 - i)) & 1);
      Restriction r = restrict(sub, x);
      if (counters) counters->work += sub.num_literals() + nprime + 1;
      if (r.residual.dimension() >= d)
        throw InvariantError("bounded-dim: residual dimension did not decrease");

      SignatureSink lifted = [&](const Signature& rsig, const Assignment& rwit) {
        Signature full(sub.num_clauses());
        for (int i = 0; i < sub.num_clauses(); ++i)
          if (r.determined[i] >= 0) full.set_bit(i, r.determined[i]);
        for (std::size_t j = 0; j < r.index_map.size(); ++j)
          full.set_bit(r.index_map[j], rsig.bit(static_cast<int>(j)));
        Assignment fwit = rwit;
        for (int v : vars) fwit.set(v, x.value(v));
        if (counters) counters->work += sub.num_clauses() + 1;
        return emit(full, fwit);
      };
      if (!recurse(r.residual, lifted)) return false;
    }
    return true;
  }
};

}  // namespace

bool seed_signatures(const Cnf& cnf, const std::vector<int>& mis, const SignatureSink& sink,
                     EnumCounters* counters) {
  const int s = static_cast<int>(mis.size());
  Bitset used(cnf.num_vars + 1);
  for (int ci : mis) {
    if (cnf.clauses[ci].empty())
      throw InvariantError("seed signatures: empty clause in S has no free literal");
    if (cnf.clauses[ci].tautological())
      throw InvariantError("seed signatures: tautological clause in S");
    Bitset vars = clause_var_bits(cnf, ci);
    if (vars.intersects(used))
      throw InvariantError("seed signatures: clauses of S are not variable-disjoint");
    used |= vars;
  }
  if (s > 62)
    throw ResourceLimitError("seed sweep over |S|=" + std::to_string(s) +
                             " clauses exceeds the 2^62 output bound");

  // free literal per clause: the first in input order; all other S-literals
  // and all remaining variables are set to 0 (as literal values)
  Assignment base(cnf.num_vars);
  for (int ci : mis) {
    const auto& lits = cnf.clauses[ci].literals();
    for (std::size_t i = 1; i < lits.size(); ++i)
      base.set(lits[i].var(), lits[i].is_positive() ? 0 : 1);
  }
  base.complete_with_zeros();
  for (int ci : mis) {
    const Literal& u = cnf.clauses[ci].literals()[0];
    base.unset(u.var());
  }

  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s); ++mask) {
    Assignment a = base;
    for (int i = 0; i < s; ++i) {
      const Literal& u = cnf.clauses[mis[i]].literals()[0];
      int lit_value = (mask >> (s - 1 - i)) & 1;
      a.set(u.var(), u.is_positive() ? lit_value : 1 - lit_value);
    }
    if (counters) counters->work += cnf.num_literals() + s + 1;
    if (!sink(signature_of(cnf, a), a)) return false;
  }
  return true;
}

bool enumerate_bounded_dim(const Cnf& cnf, const SignatureSink& sink,
                           const BoundedDimOptions& opts, EnumCounters* counters) {
  std::unordered_set<Signature, SignatureHash> seen;
  SignatureSink dedup = [&](const Signature& sig, const Assignment& wit) {
    if (!seen.insert(sig).second) return true;
    if (counters) ++counters->emitted;
    return sink(sig, wit);
  };
  BoundedDimRun run{opts, counters};
  return run.recurse(cnf, dedup);
}

}  // namespace sigenum
