#include "oracle.hpp"

#include <string>
#include <unordered_set>

#include "errors.hpp"

namespace sigenum {

std::vector<std::pair<Signature, Assignment>> brute_force_signatures(const Cnf& cnf,
                                                                     const OracleOptions& opts) {
  if (cnf.num_vars > opts.max_vars)
    throw ResourceLimitError("brute-force oracle limited to " + std::to_string(opts.max_vars) +
                             " variables, formula has " + std::to_string(cnf.num_vars));
  const int n = cnf.num_vars;
  std::vector<std::pair<Signature, Assignment>> out;
  std::unordered_set<Signature, SignatureHash> seen;
  for (std::uint64_t counter = 0; counter < (std::uint64_t(1) << n); ++counter) {
    Assignment a(n);
    // lexicographic over (a(x1),...,a(xn)): x1 is the most significant bit
    for (int v = 1; v <= n; ++v) a.set(v, (counter >> (n - v)) & 1);
    Signature sig = signature_of(cnf, a);
    if (seen.insert(sig).second) out.emplace_back(std::move(sig), std::move(a));
  }
  return out;
}

std::vector<Signature> brute_force_extremal(const std::vector<Signature>& sigs,
                                            ExtremalDirection direction) {
  std::vector<Signature> out;
  for (const Signature& s : sigs) {
    bool extremal = true;
    for (const Signature& t : sigs) {
      if (t == s) continue;
      bool dominated = direction == ExtremalDirection::minimal ? t.leq(s) : s.leq(t);
      if (dominated) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back(s);
  }
  return out;
}

std::vector<Bitset> brute_force_unions(const SetFamily& family, bool include_empty,
                                       int max_members) {
  const int k = static_cast<int>(family.members.size());
  if (k > max_members)
    throw ResourceLimitError("union oracle limited to " + std::to_string(max_members) +
                             " members, family has " + std::to_string(k));
  std::vector<Bitset> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    if (mask == 0 && !include_empty) continue;
    Bitset u(family.ground_size);
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) u |= family.members[i];
    if (seen.insert(u).second) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace sigenum
