#include "bounded_cooc.hpp"

#include <string>
#include <unordered_set>

#include "errors.hpp"
#include "union_enum.hpp"

namespace sigenum {

CoocDecomposition decompose(const Cnf& cnf) {
  const int m = cnf.num_clauses();
  ClauseGraph conflicts = conflict_graph(cnf);
  CoocDecomposition dec;
  dec.matching = greedy_maximal_induced_matching(conflicts);

  Bitset covered(m);
  for (auto [u, v] : dec.matching) {
    covered.set(u);
    covered.set(v);
  }
  dec.w_clauses = Bitset(m);
  for (int i = 0; i < m; ++i)
    if (covered.test(i) || conflicts.neighbor_bits(i).intersects(covered)) dec.w_clauses.set(i);
  dec.u_clauses = Bitset(m);
  for (int i = 0; i < m; ++i)
    if (!dec.w_clauses.test(i)) dec.u_clauses.set(i);

  if (!is_independent_set(conflicts, dec.u_clauses))
    throw InvariantError("decompose: U is not independent in the conflict graph");

  // polarity and clause-set membership per variable
  std::vector<bool> in_w(cnf.num_vars + 1, false), in_u(cnf.num_vars + 1, false);
  std::vector<bool> occurs_pos(cnf.num_vars + 1, false), occurs_neg(cnf.num_vars + 1, false);
  for (int i = 0; i < m; ++i)
    for (const Literal& l : cnf.clauses[i].literals()) {
      (dec.w_clauses.test(i) ? in_w : in_u)[l.var()] = true;
      (l.is_positive() ? occurs_pos : occurs_neg)[l.var()] = true;
    }

  dec.lprime_fix = Assignment(cnf.num_vars);
  for (int v = 1; v <= cnf.num_vars; ++v) {
    if (!in_u[v] && !in_w[v]) continue;
    if (in_u[v] && !in_w[v]) {
      if (occurs_pos[v] && occurs_neg[v])
        throw InvariantError("decompose: variable " + std::to_string(v) +
                             " occurs with both polarities only in U-clauses");
      dec.lprime_vars.push_back(v);
      // falsify the occurring literal
      dec.lprime_fix.set(v, occurs_pos[v] ? 0 : 1);
    } else {
      dec.core_vars.push_back(v);
    }
  }
  return dec;
}

std::pair<Signature, Assignment> mis_signature(const Cnf& cnf, const Bitset& mis) {
  Assignment a(cnf.num_vars);
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    if (!mis.test(i)) continue;
    for (const Literal& l : cnf.clauses[i].literals()) {
      int value = l.is_positive() ? 0 : 1;
      if (a.has(l.var()) && a.value(l.var()) != value)
        throw InvariantError("mis_signature: conflicting literals inside S (S not independent)");
      a.set(l.var(), value);
    }
  }
  Signature sig(cnf.num_clauses());
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    ClauseValue v = evaluate_clause(cnf.clauses[i], a);
    if (v == ClauseValue::undetermined)
      throw InvariantError("mis_signature: clause " + std::to_string(i + 1) +
                           " undetermined (S not maximal)");
    if (mis.test(i) && v != ClauseValue::zero)
      throw InvariantError("mis_signature: clause " + std::to_string(i + 1) +
                           " in S did not evaluate to zero");
    sig.set_bit(i, v == ClauseValue::one ? 1 : 0);
  }
  a.complete_with_zeros();
  return {std::move(sig), std::move(a)};
}

std::pair<Signature, Assignment> mis_signature(const Cnf& cnf, const std::vector<int>& mis) {
  Bitset bits(cnf.num_clauses());
  for (int i : mis) bits.set(i);
  return mis_signature(cnf, bits);
}

namespace {

// Signature and total witness from an assignment covering all occurring
// variables.
std::pair<Signature, Assignment> evaluate_total(const Cnf& cnf, const Assignment& partial) {
  Assignment a = partial;
  a.complete_with_zeros();
  return {signature_of(cnf, a), std::move(a)};
}

}  // namespace

bool enumerate_bounded_cooc(const Cnf& cnf, const SignatureSink& sink,
                            const BoundedCoocOptions& opts, EnumCounters* counters) {
  CoocDecomposition dec = decompose(cnf);
  std::unordered_set<Signature, SignatureHash> seen;
  SignatureSink emit = [&](const Signature& sig, const Assignment& wit) {
    if (!seen.insert(sig).second) return true;
    if (counters) ++counters->emitted;
    return sink(sig, wit);
  };

  // Phase 1: maximal independent sets of the conflict graph after fixing L'.
  Restriction fixed = restrict(cnf, dec.lprime_fix);
  ClauseGraph residual_conflicts = conflict_graph(fixed.residual);
  bool keep_going = enumerate_maximal_independent_sets(
      residual_conflicts,
      [&](const Bitset& mis) {
        auto [rsig, rwit] = mis_signature(fixed.residual, mis);
        Signature full(cnf.num_clauses());
        for (int i = 0; i < cnf.num_clauses(); ++i)
          if (fixed.determined[i] >= 0) full.set_bit(i, fixed.determined[i]);
        for (std::size_t j = 0; j < fixed.index_map.size(); ++j)
          full.set_bit(fixed.index_map[j], rsig.bit(static_cast<int>(j)));
        Assignment wit = rwit;
        for (int v : dec.lprime_vars) wit.set(v, dec.lprime_fix.value(v));
        if (counters) counters->work += cnf.num_literals() + 1;
        return emit(full, wit);
      },
      counters);
  if (!keep_going) return false;

  const int nprime = static_cast<int>(dec.core_vars.size());
  if (nprime > opts.max_core_vars)
    throw ResourceLimitError("bounded-cooc sweep over n'=" + std::to_string(nprime) +
                             " core variables exceeds the guard (" +
                             std::to_string(opts.max_core_vars) + ")");

  auto core_assignment = [&](std::uint64_t mask) {
    Assignment a = dec.lprime_fix;
    for (int i = 0; i < nprime; ++i)
      a.set(dec.core_vars[i], (mask >> (nprime - 1 - i)) & 1);
    return a;
  };

  // Phase 2: all assignments to the core variables, L' kept fixed.
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nprime); ++mask) {
    auto [sig, wit] = evaluate_total(cnf, core_assignment(mask));
    if (counters) counters->work += cnf.num_literals() + nprime + 1;
    if (!emit(sig, wit)) return false;
  }

  // Phase 3: per core assignment, flipping L'-variables turns still-zero
  // U-clauses to one; distinct flip outcomes are exactly the unions of the
  // per-variable satisfied-clause sets.
  std::vector<std::vector<int>> lit_occurrence(cnf.num_vars + 1);
  for (int i = 0; i < cnf.num_clauses(); ++i)
    if (dec.u_clauses.test(i))
      for (const Literal& l : cnf.clauses[i].literals())
        lit_occurrence[l.var()].push_back(i);

  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nprime); ++mask) {
    Assignment base = core_assignment(mask);
    auto [base_sig, base_wit] = evaluate_total(cnf, base);
    if (counters) counters->work += cnf.num_literals() + nprime + 1;

    std::vector<int> zero_u;  // original clause indices, ascending
    std::vector<int> position(cnf.num_clauses(), -1);
    for (int i = 0; i < cnf.num_clauses(); ++i)
      if (dec.u_clauses.test(i) && base_sig.bit(i) == 0) {
        position[i] = static_cast<int>(zero_u.size());
        zero_u.push_back(i);
      }
    if (zero_u.empty()) continue;

    SetFamily family;
    family.ground_size = static_cast<int>(zero_u.size());
    std::vector<int> member_var;  // L' variable per family member
    for (int v : dec.lprime_vars) {
      Bitset member(family.ground_size);
      for (int ci : lit_occurrence[v])
        if (position[ci] >= 0) member.set(position[ci]);
      if (member.any()) {
        family.members.push_back(std::move(member));
        member_var.push_back(v);
      }
    }
    if (family.members.empty()) continue;

    keep_going = enumerate_unions(family, /*include_empty=*/false, [&](const Bitset& u) {
      Signature sig = base_sig;
      for (int p = 0; p < family.ground_size; ++p)
        if (u.test(p)) sig.set_bit(zero_u[p], 1);
      Assignment wit = base_wit;
      for (std::size_t f = 0; f < family.members.size(); ++f)
        if (family.members[f].is_subset_of(u)) {
          int v = member_var[f];
          wit.set(v, 1 - dec.lprime_fix.value(v));
        }
      if (counters) counters->work += cnf.num_clauses() + 1;
      return emit(sig, wit);
    }, counters);
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace sigenum
