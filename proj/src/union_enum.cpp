#include "union_enum.hpp"

#include <deque>
#include <utility>

#include "errors.hpp"

namespace sigenum {

UnionTrie::UnionTrie(int depth) : depth_(depth), nodes_(1) {}

bool UnionTrie::insert_if_absent(const Bitset& key, std::uint64_t& ops) {
  std::int32_t at = 0;
  bool fresh = false;
  for (int level = 0; level < depth_; ++level) {
    ++ops;
    int bit = key.test(level) ? 1 : 0;
    std::int32_t next = nodes_[at].child[bit];
    if (next < 0) {
      next = static_cast<std::int32_t>(nodes_.size());
      nodes_.emplace_back();
      nodes_[at].child[bit] = next;
      fresh = true;
      ++ops;
    }
    at = next;
  }
  if (depth_ == 0) {
    // the only key is the empty set; track it via the stored counter
    fresh = stored_ == 0;
  }
  if (fresh) ++stored_;
  return fresh;
}

bool enumerate_unions(const SetFamily& family, bool include_empty, const SubsetSink& sink,
                      EnumCounters* counters) {
  std::uint64_t local_ops = 0;
  std::uint64_t& ops = counters ? counters->work : local_ops;
  UnionTrie trie(family.ground_size);
  std::deque<Bitset> queue;
  if (include_empty) {
    Bitset empty(family.ground_size);
    if (trie.insert_if_absent(empty, ops)) queue.push_back(std::move(empty));
  }
  for (const Bitset& member : family.members)
    if (trie.insert_if_absent(member, ops)) queue.push_back(member);

  while (!queue.empty()) {
    Bitset head = std::move(queue.front());
    queue.pop_front();
    for (const Bitset& member : family.members) {
      Bitset grown = head;
      grown |= member;
      if (trie.insert_if_absent(grown, ops)) queue.push_back(std::move(grown));
    }
    if (counters) ++counters->emitted;
    if (!sink(head)) return false;
  }
  return true;
}

SetFamily clause_variable_family(const Cnf& cnf) {
  SetFamily family;
  family.ground_size = cnf.num_vars;
  family.members.reserve(cnf.num_clauses());
  for (const Clause& c : cnf.clauses) {
    Bitset vars(cnf.num_vars);
    for (const Literal& l : c.literals()) vars.set(l.var() - 1);
    family.members.push_back(std::move(vars));
  }
  return family;
}

bool monotone_signatures(const Cnf& cnf, const SignatureSink& sink, EnumCounters* counters) {
  for (const Clause& c : cnf.clauses)
    for (const Literal& l : c.literals())
      if (!l.is_positive())
        throw EngineMismatchError("monotone enumeration requires all-positive literals");

  SetFamily family = clause_variable_family(cnf);
  const int m = cnf.num_clauses();
  return enumerate_unions(family, /*include_empty=*/true, [&](const Bitset& u) {
    Assignment witness(cnf.num_vars);
    for (int v = 1; v <= cnf.num_vars; ++v) witness.set(v, u.test(v - 1) ? 0 : 1);
    Signature sig(m);
    for (int i = 0; i < m; ++i) {
      if (counters) ++counters->work;
      sig.set_bit(i, family.members[i].is_subset_of(u) ? 0 : 1);
    }
    return sink(sig, witness);
  }, counters);
}

}  // namespace sigenum
