#include "flashlight.hpp"

#include <utility>

#include "errors.hpp"

namespace sigenum {

namespace {

// Forcing state shared along the current prefix. A variable may be forced by
// several zero-clauses at once (shared or duplicate literals), so each
// variable carries a count and is released only when the last forcing clause
// is undone.
class ForcedSet {
 public:
  explicit ForcedSet(int num_vars) : assign_(num_vars), count_(num_vars + 1, 0) {}

  const Assignment& assignment() const { return assign_; }

  // Falsifies every literal of the clause. Returns false (and rolls back the
  // partial application) when some variable would be forced both ways.
  bool apply_zero_clause(const Clause& clause, std::vector<int>& undo) {
    for (const Literal& l : clause.literals()) {
      int var = l.var();
      int value = l.is_positive() ? 0 : 1;
      if (count_[var] > 0) {
        if (assign_.value(var) != value) {
          rollback(undo);
          return false;
        }
        ++count_[var];
      } else {
        assign_.set(var, value);
        count_[var] = 1;
      }
      undo.push_back(var);
    }
    return true;
  }

  void rollback(const std::vector<int>& undo) {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      if (--count_[*it] == 0) assign_.unset(*it);
    }
  }

 private:
  Assignment assign_;
  std::vector<int> count_;
};

class FlashlightRun {
 public:
  FlashlightRun(const Cnf& cnf, SatOracle& oracle, const SignatureSink& sink,
                EnumCounters* counters)
      : cnf_(cnf),
        oracle_(oracle),
        sink_(sink),
        counters_(counters),
        m_(cnf.num_clauses()),
        bits_(cnf.num_clauses(), 0),
        forced_(cnf.num_vars) {}

  bool run() { return descend(0, false); }

 private:
  void bump_work(std::uint64_t amount) {
    if (counters_) counters_->work += amount;
  }

  // Satisfiability of the one-clauses under the current forcing. When there
  // are no one-clauses the answer is immediate and costs no SAT call.
  SolveResult feasible_here() {
    if (ones_.empty()) {
      Assignment w = forced_.assignment();
      w.complete_with_zeros();
      return {SolveStatus::sat, std::move(w)};
    }
    Cnf query;
    query.num_vars = cnf_.num_vars;
    query.clauses.reserve(ones_.size());
    for (int i : ones_) query.clauses.push_back(cnf_.clauses[i]);
    bump_work(query.num_literals() + 1);
    SolveResult r = oracle_.solve(query, forced_.assignment());
    if (counters_) ++counters_->sat_calls;
    return r;
  }

  bool emit() {
    Signature sig(m_);
    for (int i = 0; i < m_; ++i) sig.set_bit(i, bits_[i]);
    if (signature_of(cnf_, witness_) != sig)
      throw InvariantError("flashlight: witness does not reproduce its signature");
    bump_work(m_ + 1);
    if (counters_) ++counters_->emitted;
    return sink_(sig, witness_);
  }

  // The prefix of length `depth` is feasible on entry. `fresh` says whether
  // witness_ came from a SAT call for exactly this prefix.
  bool descend(int depth, bool fresh) {
    bump_work(1);
    if (depth == m_) {
      if (!fresh) {
        SolveResult r = feasible_here();
        if (!r.sat())
          throw InvariantError("flashlight: feasible leaf rejected by the oracle");
        witness_ = std::move(r.witness);
      }
      return emit();
    }

    // child 1: clause `depth` joins the one-clauses
    ones_.push_back(depth);
    bits_[depth] = 1;
    SolveResult r1 = feasible_here();
    bool child1_feasible = r1.sat();
    if (child1_feasible) {
      witness_ = std::move(r1.witness);
      if (!descend(depth + 1, true)) return false;
    }
    ones_.pop_back();

    // child 0: clause `depth` is falsified literal by literal
    bits_[depth] = 0;
    std::vector<int> undo;
    bool keep_going = true;
    if (forced_.apply_zero_clause(cnf_.clauses[depth], undo)) {
      if (!child1_feasible) {
        // this node is feasible, so the remaining child must be
        keep_going = descend(depth + 1, false);
      } else {
        SolveResult r0 = feasible_here();
        if (r0.sat()) {
          witness_ = std::move(r0.witness);
          keep_going = descend(depth + 1, true);
        }
      }
      forced_.rollback(undo);
    } else if (!child1_feasible) {
      throw InvariantError("flashlight: feasible node with both children infeasible");
    }
    return keep_going;
  }

  const Cnf& cnf_;
  SatOracle& oracle_;
  const SignatureSink& sink_;
  EnumCounters* counters_;
  int m_;
  std::vector<std::int8_t> bits_;
  std::vector<int> ones_;
  ForcedSet forced_;
  Assignment witness_;
};

}  // namespace

PrefixNode make_prefix(const Cnf& cnf, const std::vector<std::int8_t>& bits) {
  PrefixNode node;
  node.depth = static_cast<int>(bits.size());
  node.bits = bits;
  ForcedSet forced(cnf.num_vars);
  std::vector<int> undo;
  for (int i = 0; i < node.depth; ++i) {
    if (bits[i] != 0) continue;
    if (!forced.apply_zero_clause(cnf.clauses[i], undo)) {
      node.consistent = false;
      break;
    }
  }
  node.forced = forced.assignment();
  return node;
}

bool prefix_feasible(const Cnf& cnf, const PrefixNode& node, SatOracle& oracle) {
  if (!node.consistent) return false;
  Cnf query;
  query.num_vars = cnf.num_vars;
  for (int i = 0; i < node.depth; ++i)
    if (node.bits[i]) query.clauses.push_back(cnf.clauses[i]);
  if (query.clauses.empty()) return true;
  return oracle.solve(query, node.forced).sat();
}

bool enumerate_flashlight(const Cnf& cnf, SatOracle& oracle, const SignatureSink& sink,
                          EnumCounters* counters) {
  return FlashlightRun(cnf, oracle, sink, counters).run();
}

}  // namespace sigenum
