#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "counters.hpp"
#include "formula.hpp"
#include "util.hpp"

namespace sigenum {

// Family of subsets of {0,...,ground_size-1}.
struct SetFamily {
  int ground_size = 0;
  std::vector<Bitset> members;
};

// Binary trie of depth ground_size over characteristic vectors; only nodes
// on paths to stored sets exist. Membership test and insert cost one root-
// to-leaf walk. Can hold exponentially many sets; that matches the queue in
// the union enumeration, which may also grow exponentially.
class UnionTrie {
 public:
  explicit UnionTrie(int depth);

  // Returns true when the key was absent and is now stored.
  // Adds one unit per visited/created node to `ops`.
  bool insert_if_absent(const Bitset& key, std::uint64_t& ops);

  std::size_t stored() const { return stored_; }

 private:
  struct Node {
    std::int32_t child[2] = {-1, -1};
  };
  int depth_;
  std::vector<Node> nodes_;
  std::size_t stored_ = 0;
};

using SubsetSink = std::function<bool(const Bitset&)>;

// Streams every distinct union of a nonempty subfamily exactly once (plus
// the empty union when include_empty). FIFO queue seeded with the member
// sets; before the head U is emitted, C∪U is probed in the trie for every
// member C and novel unions are enqueued. Per output this costs at most
// 2·|members| trie walks.
bool enumerate_unions(const SetFamily& family, bool include_empty, const SubsetSink& sink,
                      EnumCounters* counters = nullptr);

// Signatures of a monotone CNF via the union closure of its clauses viewed
// as variable sets: a signature's zero-set is exactly a union of clauses.
// The empty union is included, so the all-ones signature comes first.
// Throws EngineMismatchError on non-monotone input.
bool monotone_signatures(const Cnf& cnf, const SignatureSink& sink,
                         EnumCounters* counters = nullptr);

// The set family of a monotone CNF: ground set = variables (0-based),
// one member per clause.
SetFamily clause_variable_family(const Cnf& cnf);

}  // namespace sigenum
