#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "counters.hpp"
#include "formula.hpp"
#include "util.hpp"

namespace sigenum {

// Undirected graph on clause indices 0..m-1. Serves both the conflict graph
// (edges between clauses with complementary literals) and the dual graph
// (edges between clauses sharing a variable).
class ClauseGraph {
 public:
  ClauseGraph() = default;
  explicit ClauseGraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const Bitset& neighbor_bits(int v) const { return rows_[v]; }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> rows_;
  int edges_ = 0;
};

// Throws InvariantError on a tautological clause (it would need a self-loop).
ClauseGraph conflict_graph(const Cnf& cnf);

ClauseGraph dual_graph(const Cnf& cnf);

// Lowest-index-first greedy; the result is independent and dominating.
std::vector<int> greedy_maximal_independent_set(const ClauseGraph& g);

using VertexSetSink = std::function<bool(const Bitset&)>;

// Streams every maximal independent set exactly once. Supergraph traversal:
// starting from the greedy MIS, each output set is mutated around every
// vertex j (keep the non-neighbors of j below j, add j, recomplete greedily)
// and unseen results are queued. Visited-set memory can grow with the number
// of outputs; per-output work stays polynomial in the graph size.
bool enumerate_maximal_independent_sets(const ClauseGraph& g, const VertexSetSink& sink,
                                        EnumCounters* counters = nullptr);

// Greedy over edges in lexicographic order; returns a maximal induced
// matching (no two matched edges share a vertex or are joined by an edge).
std::vector<std::pair<int, int>> greedy_maximal_induced_matching(const ClauseGraph& g);

// Test helpers used by the verification suites.
bool is_independent_set(const ClauseGraph& g, const Bitset& s);
bool is_maximal_independent_set(const ClauseGraph& g, const Bitset& s);
bool is_induced_matching(const ClauseGraph& g, const std::vector<std::pair<int, int>>& m);

}  // namespace sigenum
