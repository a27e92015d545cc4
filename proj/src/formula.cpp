#include "formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "errors.hpp"

namespace sigenum {

Literal Literal::from_dimacs(int code) {
  if (code == 0) throw Error("literal code must be nonzero");
  return Literal(code);
}

bool Clause::contains(Literal l) const {
  return std::find(lits_.begin(), lits_.end(), l) != lits_.end();
}

bool Clause::tautological() const {
  for (const Literal& l : lits_)
    if (contains(l.negated())) return true;
  return false;
}

int Clause::max_var() const {
  int mx = 0;
  for (const Literal& l : lits_) mx = std::max(mx, l.var());
  return mx;
}

Clause make_clause(const std::vector<int>& codes) {
  std::vector<Literal> lits;
  lits.reserve(codes.size());
  for (int c : codes) {
    Literal l = Literal::from_dimacs(c);
    bool seen = false;
    for (const Literal& p : lits)
      if (p == l) {
        seen = true;
        break;
      }
    if (!seen) lits.push_back(l);
  }
  return Clause(std::move(lits));
}

int Cnf::dimension() const {
  int d = 0;
  for (const Clause& c : clauses) d = std::max(d, c.size());
  return d;
}

int Cnf::num_literals() const {
  int t = 0;
  for (const Clause& c : clauses) t += c.size();
  return t;
}

Cnf make_cnf(int num_vars, const std::vector<std::vector<int>>& clauses) {
  Cnf cnf;
  cnf.num_vars = num_vars;
  for (const auto& codes : clauses) cnf.clauses.push_back(make_clause(codes));
  return cnf;
}

void Assignment::set(int var, int value) {
  if (vals_[var] < 0) ++assigned_;
  vals_[var] = static_cast<std::int8_t>(value);
}

void Assignment::unset(int var) {
  if (vals_[var] >= 0) --assigned_;
  vals_[var] = -1;
}

void Assignment::fill_from(const Assignment& other) {
  for (int v = 1; v <= num_vars(); ++v)
    if (!has(v) && other.has(v)) set(v, other.value(v));
}

void Assignment::complete_with_zeros() {
  for (int v = 1; v <= num_vars(); ++v)
    if (!has(v)) set(v, 0);
}

std::vector<std::pair<int, int>> Assignment::entries() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= num_vars(); ++v)
    if (has(v)) out.emplace_back(v, value(v));
  return out;
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(num_vars());
  for (int v = 1; v <= num_vars(); ++v)
    s.push_back(has(v) ? static_cast<char>('0' + value(v)) : '-');
  return s;
}

bool Signature::leq(const Signature& o) const {
  for (int i = 0; i < size(); ++i)
    if (bit(i) > o.bit(i)) return false;
  return true;
}

std::string Signature::to_string() const { return bits_.to_string(); }

Signature Signature::from_string(std::string_view s) {
  Signature sig(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    sig.set_bit(static_cast<int>(i), s[i] == '1');
  return sig;
}

bool operator<(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i)
    if (a.bit(i) != b.bit(i)) return a.bit(i) < b.bit(i);
  return false;
}

namespace {

struct Token {
  std::string text;
  int line = 0;
};

std::vector<Token> tokenize_dimacs(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    bool at_line_start = tokens.empty() || tokens.back().line != line;
    if (c == 'c' && at_line_start) {
      // comment line: skip to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    tokens.push_back({std::string(text.substr(i, j - i)), line});
    i = j;
  }
  return tokens;
}

int parse_int(const Token& t, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    std::ostringstream os;
    os << "line " << t.line << ": expected " << what << ", got '" << t.text << "'";
    throw ParseError(os.str());
  }
  return value;
}

}  // namespace

Cnf parse_dimacs(std::string_view text, const ParseOptions& opts) {
  std::vector<Token> tokens = tokenize_dimacs(text);
  std::size_t pos = 0;
  auto need = [&](const char* what) -> const Token& {
    if (pos >= tokens.size())
      throw ParseError(std::string("unexpected end of input, expected ") + what);
    return tokens[pos++];
  };

  const Token& p = need("'p' header");
  if (p.text != "p") throw ParseError("line " + std::to_string(p.line) + ": missing 'p cnf' header");
  const Token& fmt = need("'cnf' format tag");
  if (fmt.text != "cnf")
    throw ParseError("line " + std::to_string(fmt.line) + ": unsupported format '" + fmt.text + "'");
  int n = parse_int(need("variable count"), "variable count");
  int m = parse_int(need("clause count"), "clause count");
  if (n < 0 || m < 0) throw ParseError("header declares negative counts");

  Cnf cnf;
  cnf.num_vars = n;
  std::vector<int> codes;
  while (pos < tokens.size()) {
    const Token& t = tokens[pos++];
    int code = parse_int(t, "literal");
    if (code != 0) {
      if (std::abs(code) > n) {
        std::ostringstream os;
        os << "line " << t.line << ": variable " << std::abs(code)
           << " out of range (header declares " << n << ")";
        throw ParseError(os.str());
      }
      codes.push_back(code);
      continue;
    }
    int index = cnf.num_clauses() + 1;  // 1-based, for messages
    if (codes.empty()) {
      std::ostringstream os;
      os << "line " << t.line << ": empty clause at index " << index;
      throw ParseError(os.str());
    }
    Clause clause = make_clause(codes);
    codes.clear();
    if (!opts.allow_tautologies && clause.tautological()) {
      std::ostringstream os;
      os << "line " << t.line << ": tautological clause at index " << index;
      throw ParseError(os.str());
    }
    cnf.clauses.push_back(std::move(clause));
  }
  if (!codes.empty()) throw ParseError("unterminated clause at end of input");
  if (cnf.num_clauses() != m) {
    std::ostringstream os;
    os << "clause count mismatch: header declares " << m << ", found " << cnf.num_clauses();
    throw ParseError(os.str());
  }
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_vars << ' ' << cnf.num_clauses() << '\n';
  for (const Clause& c : cnf.clauses) {
    for (const Literal& l : c.literals()) os << l.dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

NormalizeResult normalize(const Cnf& cnf) {
  NormalizeResult r;
  r.cnf.num_vars = cnf.num_vars;
  r.tautology_mask.assign(cnf.num_clauses(), false);
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    if (cnf.clauses[i].tautological()) {
      r.tautology_mask[i] = true;
      ++r.removed;
    } else {
      r.cnf.clauses.push_back(cnf.clauses[i]);
    }
  }
  return r;
}

Signature lift_with_mask(const Signature& sig, const std::vector<bool>& mask) {
  Signature out(static_cast<int>(mask.size()));
  int j = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i])
      out.set_bit(static_cast<int>(i), 1);
    else
      out.set_bit(static_cast<int>(i), sig.bit(j++));
  }
  if (j != sig.size()) throw InvariantError("mask length does not fit signature");
  return out;
}

ClauseValue evaluate_clause(const Clause& clause, const Assignment& a) {
  bool all_assigned = true;
  for (const Literal& l : clause.literals()) {
    if (!a.has(l.var())) {
      all_assigned = false;
      continue;
    }
    if (a.value(l.var()) == (l.is_positive() ? 1 : 0)) return ClauseValue::one;
  }
  return all_assigned ? ClauseValue::zero : ClauseValue::undetermined;
}

Signature signature_of(const Cnf& cnf, const Assignment& a) {
  Signature sig(cnf.num_clauses());
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    switch (evaluate_clause(cnf.clauses[i], a)) {
      case ClauseValue::one:
        sig.set_bit(i, 1);
        break;
      case ClauseValue::zero:
        sig.set_bit(i, 0);
        break;
      case ClauseValue::undetermined:
        throw InvariantError("clause " + std::to_string(i + 1) +
                             " undetermined under the given assignment");
    }
  }
  return sig;
}

Restriction restrict(const Cnf& cnf, const Assignment& a) {
  Restriction r;
  r.residual.num_vars = cnf.num_vars;
  r.determined.assign(cnf.num_clauses(), -1);
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    const Clause& c = cnf.clauses[i];
    bool satisfied = false;
    std::vector<Literal> rest;
    for (const Literal& l : c.literals()) {
      if (!a.has(l.var())) {
        rest.push_back(l);
        continue;
      }
      if (a.value(l.var()) == (l.is_positive() ? 1 : 0)) {
        satisfied = true;
        break;
      }
    }
    if (satisfied) {
      r.determined[i] = 1;
    } else if (rest.empty()) {
      r.determined[i] = 0;
    } else {
      r.residual.clauses.push_back(Clause(std::move(rest)));
      r.index_map.push_back(i);
    }
  }
  return r;
}

FormulaStats stats(const Cnf& cnf) {
  FormulaStats s;
  s.dimension = cnf.dimension();
  s.two_cnf = s.dimension <= 2;
  std::vector<int> occ(cnf.num_vars + 1, 0);
  for (const Clause& c : cnf.clauses) {
    int positives = 0;
    for (const Literal& l : c.literals()) {
      ++occ[l.var()];
      if (l.is_positive())
        ++positives;
      else
        s.monotone = false;
    }
    if (positives > 1) s.horn = false;
  }
  for (int v = 1; v <= cnf.num_vars; ++v) s.cooccurrence = std::max(s.cooccurrence, occ[v]);
  return s;
}

std::vector<int> occurring_variables(const Cnf& cnf) {
  std::vector<bool> seen(cnf.num_vars + 1, false);
  for (const Clause& c : cnf.clauses)
    for (const Literal& l : c.literals()) seen[l.var()] = true;
  std::vector<int> out;
  for (int v = 1; v <= cnf.num_vars; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace sigenum
