#pragma once

#include <cstdint>

#include "formula.hpp"

namespace sigenum {

enum class Engine { two_sat, horn, dpll };

enum class FormulaClass { monotone, two_cnf, horn, general };

// Most specific syntactic class, priority monotone > two-cnf > horn.
FormulaClass classify(const Cnf& cnf);

enum class SolveStatus { sat, unsat };

struct SolveResult {
  SolveStatus status = SolveStatus::unsat;
  // Total assignment: fixed variables keep their values, residual variables
  // get the engine's solution, everything else defaults to 0.
  Assignment witness;

  bool sat() const { return status == SolveStatus::sat; }
};

// Satisfiability oracle under partial fixing. Each instance owns a
// monotone query counter (exactly +1 per answered query) and an operation
// counter for the linear-time claims of the two-sat and horn engines.
class SatOracle {
 public:
  explicit SatOracle(Engine engine) : engine_(engine) {}

  Engine engine() const { return engine_; }
  std::uint64_t calls() const { return calls_; }
  std::uint64_t ops() const { return ops_; }

  // Decides whether restrict(cnf, fixed) leaves a satisfiable residual.
  // A clause falsified by `fixed` makes the instance unsat outright; the
  // engine class check only applies when the engine actually runs.
  // Throws EngineMismatchError when the residual falls outside the
  // engine's class (two-sat: dimension <= 2; horn: at most one positive
  // literal per clause).
  SolveResult solve(const Cnf& cnf, const Assignment& fixed);

 private:
  Engine engine_;
  std::uint64_t calls_ = 0;
  std::uint64_t ops_ = 0;
};

}  // namespace sigenum
