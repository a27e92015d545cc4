#include "sat.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sigenum {

FormulaClass classify(const Cnf& cnf) {
  FormulaStats s = stats(cnf);
  if (s.monotone) return FormulaClass::monotone;
  if (s.two_cnf) return FormulaClass::two_cnf;
  if (s.horn) return FormulaClass::horn;
  return FormulaClass::general;
}

namespace {

// Variables of the residual formula, remapped to a dense 0-based range.
struct VarMap {
  std::vector<int> to_dense;   // var -> dense index or -1
  std::vector<int> to_var;     // dense index -> var

  explicit VarMap(const Cnf& cnf) : to_dense(cnf.num_vars + 1, -1) {
    for (int v : occurring_variables(cnf)) {
      to_dense[v] = static_cast<int>(to_var.size());
      to_var.push_back(v);
    }
  }
  int size() const { return static_cast<int>(to_var.size()); }
};

// 2-SAT by strongly connected components of the implication graph.
// Node 2*i is "variable i true", node 2*i+1 is "variable i false".
class TwoSatSolver {
 public:
  TwoSatSolver(const Cnf& residual, const VarMap& vars, std::uint64_t& ops)
      : vars_(vars), adj_(2 * vars.size()), ops_(ops) {
    for (const Clause& c : residual.clauses) {
      const auto& lits = c.literals();
      if (lits.size() == 1) {
        int u = node(lits[0]);
        add_edge(u ^ 1, u);
      } else {
        int u = node(lits[0]), v = node(lits[1]);
        add_edge(u ^ 1, v);
        add_edge(v ^ 1, u);
      }
    }
  }

  std::optional<std::vector<int>> solve() {
    tarjan();
    std::vector<int> values(vars_.size());
    for (int i = 0; i < vars_.size(); ++i) {
      ++ops_;
      if (comp_[2 * i] == comp_[2 * i + 1]) return std::nullopt;
      values[i] = comp_[2 * i] < comp_[2 * i + 1] ? 1 : 0;
    }
    return values;
  }

 private:
  int node(const Literal& l) const {
    int idx = vars_.to_dense[l.var()];
    return 2 * idx + (l.is_positive() ? 0 : 1);
  }

  void add_edge(int u, int v) {
    adj_[u].push_back(v);
    ++ops_;
  }

  // Iterative Tarjan; component ids come out in reverse topological order,
  // so a literal is set true when its component precedes its complement's.
  void tarjan() {
    int n = static_cast<int>(adj_.size());
    comp_.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), child(n, 0);
    std::vector<int> call, stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0, next_comp = 0;
    for (int root = 0; root < n; ++root) {
      if (index[root] != -1) continue;
      call.push_back(root);
      while (!call.empty()) {
        int u = call.back();
        ++ops_;
        if (index[u] == -1) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = true;
        }
        bool descended = false;
        while (child[u] < static_cast<int>(adj_[u].size())) {
          int v = adj_[u][child[u]++];
          ++ops_;
          if (index[v] == -1) {
            call.push_back(v);
            descended = true;
            break;
          }
          if (on_stack[v]) low[u] = std::min(low[u], index[v]);
        }
        if (descended) continue;
        if (low[u] == index[u]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp_[w] = next_comp;
            if (w == u) break;
          }
          ++next_comp;
        }
        call.pop_back();
        if (!call.empty()) {
          int p = call.back();
          low[p] = std::min(low[p], low[u]);
        }
      }
    }
  }

  const VarMap& vars_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> comp_;
  std::uint64_t& ops_;
};

// Horn satisfiability by unit propagation; the minimal model sets exactly
// the forced variables to 1.
std::optional<std::vector<int>> solve_horn(const Cnf& residual, const VarMap& vars,
                                           std::uint64_t& ops) {
  int m = residual.num_clauses();
  std::vector<int> remaining(m);
  std::vector<bool> satisfied(m, false);
  // occurrence lists: (clause, is_positive)
  std::vector<std::vector<std::pair<int, bool>>> occ(vars.size());
  for (int i = 0; i < m; ++i) {
    const auto& lits = residual.clauses[i].literals();
    remaining[i] = static_cast<int>(lits.size());
    for (const Literal& l : lits) {
      occ[vars.to_dense[l.var()]].emplace_back(i, l.is_positive());
      ++ops;
    }
  }

  std::vector<int> values(vars.size(), -1);
  std::vector<std::pair<int, int>> queue;  // (dense var, value)
  bool conflict = false;

  auto force = [&](int dense, int value) {
    if (values[dense] >= 0) {
      if (values[dense] != value) conflict = true;
      return;
    }
    values[dense] = value;
    queue.emplace_back(dense, value);
  };

  for (int i = 0; i < m; ++i)
    if (remaining[i] == 1) {
      const Literal& l = residual.clauses[i].literals()[0];
      force(vars.to_dense[l.var()], l.is_positive() ? 1 : 0);
    }

  for (std::size_t qi = 0; qi < queue.size() && !conflict; ++qi) {
    auto [dense, value] = queue[qi];
    for (auto [ci, positive] : occ[dense]) {
      ++ops;
      if (satisfied[ci]) continue;
      if ((value == 1) == positive) {
        satisfied[ci] = true;
        continue;
      }
      if (--remaining[ci] == 0) {
        conflict = true;
        break;
      }
      if (remaining[ci] == 1) {
        for (const Literal& l : residual.clauses[ci].literals()) {
          ++ops;
          int d = vars.to_dense[l.var()];
          if (values[d] < 0) {
            force(d, l.is_positive() ? 1 : 0);
            break;
          }
        }
      }
    }
  }
  if (conflict) return std::nullopt;
  for (int& v : values)
    if (v < 0) v = 0;
  return values;
}

// Plain DPLL with unit propagation; handles any dimension.
class DpllSolver {
 public:
  DpllSolver(const Cnf& residual, const VarMap& vars, std::uint64_t& ops)
      : residual_(residual), vars_(vars), values_(vars.size(), -1), ops_(ops) {}

  std::optional<std::vector<int>> solve() {
    if (!search()) return std::nullopt;
    for (int& v : values_)
      if (v < 0) v = 0;
    return values_;
  }

 private:
  enum class PropResult { conflict, satisfied, open };

  int lit_value(const Literal& l) const {
    int v = values_[vars_.to_dense[l.var()]];
    if (v < 0) return -1;
    return (v == 1) == l.is_positive() ? 1 : 0;
  }

  PropResult propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      bool all_satisfied = true;
      for (const Clause& c : residual_.clauses) {
        int unassigned = 0;
        const Literal* unit = nullptr;
        bool sat = false;
        for (const Literal& l : c.literals()) {
          ++ops_;
          int v = lit_value(l);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v == -1) {
            ++unassigned;
            unit = &l;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return PropResult::conflict;
        all_satisfied = false;
        if (unassigned == 1) {
          int d = vars_.to_dense[unit->var()];
          values_[d] = unit->is_positive() ? 1 : 0;
          trail.push_back(d);
          changed = true;
        }
      }
      if (all_satisfied) return PropResult::satisfied;
    }
    return PropResult::open;
  }

  int pick_branch_var() const {
    for (const Clause& c : residual_.clauses)
      for (const Literal& l : c.literals()) {
        int d = vars_.to_dense[l.var()];
        if (values_[d] < 0) return d;
      }
    return -1;
  }

  bool search() {
    std::vector<int> trail;
    PropResult r = propagate(trail);
    if (r == PropResult::satisfied) return true;
    if (r == PropResult::conflict) {
      for (int d : trail) values_[d] = -1;
      return false;
    }
    int d = pick_branch_var();
    for (int value : {1, 0}) {
      values_[d] = value;
      if (search()) return true;
      values_[d] = -1;
    }
    for (int t : trail) values_[t] = -1;
    return false;
  }

  const Cnf& residual_;
  const VarMap& vars_;
  std::vector<int> values_;
  std::uint64_t& ops_;
};

}  // namespace

SolveResult SatOracle::solve(const Cnf& cnf, const Assignment& fixed) {
  ++calls_;
  Restriction r = restrict(cnf, fixed);
  ops_ += cnf.num_literals() + cnf.num_clauses();

  for (std::int8_t d : r.determined)
    if (d == 0) return {SolveStatus::unsat, Assignment()};

  if (engine_ == Engine::two_sat && r.residual.dimension() > 2)
    throw EngineMismatchError("two-sat engine: residual dimension " +
                              std::to_string(r.residual.dimension()) + " exceeds 2");
  if (engine_ == Engine::horn) {
    for (int i = 0; i < r.residual.num_clauses(); ++i) {
      int positives = 0;
      for (const Literal& l : r.residual.clauses[i].literals())
        if (l.is_positive()) ++positives;
      if (positives > 1)
        throw EngineMismatchError("horn engine: residual clause with " +
                                  std::to_string(positives) + " positive literals");
    }
  }

  VarMap vars(r.residual);
  std::optional<std::vector<int>> model;
  switch (engine_) {
    case Engine::two_sat:
      model = TwoSatSolver(r.residual, vars, ops_).solve();
      break;
    case Engine::horn:
      model = solve_horn(r.residual, vars, ops_);
      break;
    case Engine::dpll:
      model = DpllSolver(r.residual, vars, ops_).solve();
      break;
  }
  if (!model) return {SolveStatus::unsat, Assignment()};

  Assignment witness(cnf.num_vars);
  for (int v = 1; v <= cnf.num_vars; ++v)
    if (fixed.has(v)) witness.set(v, fixed.value(v));
  for (int i = 0; i < vars.size(); ++i) witness.set(vars.to_var[i], (*model)[i]);
  witness.complete_with_zeros();
  return {SolveStatus::sat, witness};
}

}  // namespace sigenum
