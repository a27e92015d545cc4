#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "util.hpp"

namespace sigenum {

// A literal is a 1-based variable index with a polarity, stored as its
// signed DIMACS code.
class Literal {
 public:
  Literal() = default;
  static Literal from_dimacs(int code);
  static Literal positive(int var) { return Literal(var); }
  static Literal negative(int var) { return Literal(-var); }

  int var() const { return code_ < 0 ? -code_ : code_; }
  bool is_positive() const { return code_ > 0; }
  Literal negated() const { return Literal(-code_); }
  int dimacs() const { return code_; }

  friend bool operator==(Literal a, Literal b) = default;

 private:
  explicit Literal(int code) : code_(code) {}
  int code_ = 0;
};

// Duplicate-free list of literals in input order. Input order matters: the
// bounded-dimension enumerator picks the first literal of a clause as its
// free literal.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {}

  const std::vector<Literal>& literals() const { return lits_; }
  int size() const { return static_cast<int>(lits_.size()); }
  bool empty() const { return lits_.empty(); }
  bool contains(Literal l) const;
  bool tautological() const;
  int max_var() const;

 private:
  std::vector<Literal> lits_;
};

// Makes a clause from DIMACS codes, collapsing duplicate literals
// (first occurrence wins).
Clause make_clause(const std::vector<int>& codes);

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  // dim(Phi): the maximum clause size, 0 for the empty formula.
  int dimension() const;
  // Total number of literal occurrences.
  int num_literals() const;
};

// Convenience builder used all over the tests and tools.
Cnf make_cnf(int num_vars, const std::vector<std::vector<int>>& clauses);

// Partial truth assignment over variables 1..n; total assignments are the
// special case where every variable is set.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars) : vals_(num_vars + 1, -1) {}

  int num_vars() const { return static_cast<int>(vals_.size()) - 1; }
  bool has(int var) const { return vals_[var] >= 0; }
  int value(int var) const { return vals_[var]; }
  void set(int var, int value);
  void unset(int var);
  int assigned_count() const { return assigned_; }
  bool total() const { return assigned_ == num_vars(); }

  // Merge: entries of `other` fill variables this assignment leaves open.
  void fill_from(const Assignment& other);
  // Unassigned variables default to 0.
  void complete_with_zeros();

  std::vector<std::pair<int, int>> entries() const;
  std::string to_string() const;  // one char per variable: 0/1/'-'

  friend bool operator==(const Assignment& a, const Assignment& b) = default;

 private:
  std::vector<std::int8_t> vals_;
  int assigned_ = 0;
};

enum class ClauseValue { zero, one, undetermined };

// m-bit vector of clause values; coordinate order is clause input order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(int size) : bits_(size) {}

  int size() const { return bits_.size(); }
  int bit(int i) const { return bits_.test(i) ? 1 : 0; }
  void set_bit(int i, int v) { bits_.assign(i, v != 0); }

  // Coordinatewise comparison: *this <= o.
  bool leq(const Signature& o) const;

  std::string to_string() const;
  static Signature from_string(std::string_view s);

  std::size_t hash() const { return bits_.hash(); }
  friend bool operator==(const Signature& a, const Signature& b) = default;
  friend bool operator<(const Signature& a, const Signature& b);

 private:
  Bitset bits_;
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const { return s.hash(); }
};

// Streaming consumer; return false to stop the enumeration early.
using SignatureSink = std::function<bool(const Signature&, const Assignment&)>;

struct ParseOptions {
  // When false (the default), a tautological clause is a parse error; when
  // true it is kept and can be split off later with normalize().
  bool allow_tautologies = false;
};

Cnf parse_dimacs(std::string_view text, const ParseOptions& opts = {});
std::string to_dimacs(const Cnf& cnf);

struct NormalizeResult {
  Cnf cnf;                          // tautological clauses removed
  std::vector<bool> tautology_mask;  // length m of the input formula
  int removed = 0;
};

// Splits tautological clauses out of the formula. Their signature coordinate
// is constant 1 and gets re-inserted on output, so all indices stay stable.
NormalizeResult normalize(const Cnf& cnf);

// Re-inserts constant-1 coordinates for masked (tautological) clauses.
Signature lift_with_mask(const Signature& sig, const std::vector<bool>& mask);

ClauseValue evaluate_clause(const Clause& clause, const Assignment& a);

// Throws InvariantError naming the first undetermined clause (1-based).
Signature signature_of(const Cnf& cnf, const Assignment& a);

struct Restriction {
  Cnf residual;                     // same num_vars; undetermined clauses only
  std::vector<std::int8_t> determined;  // length m: -1 residual, else 0/1
  std::vector<int> index_map;       // residual clause index -> original index
};

Restriction restrict(const Cnf& cnf, const Assignment& a);

struct FormulaStats {
  int dimension = 0;
  int cooccurrence = 0;
  bool monotone = true;
  bool horn = true;
  bool two_cnf = true;
};

FormulaStats stats(const Cnf& cnf);

// Variables that occur in some clause, ascending.
std::vector<int> occurring_variables(const Cnf& cnf);

}  // namespace sigenum
