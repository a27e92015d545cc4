#include "clause_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "errors.hpp"

namespace sigenum {

ClauseGraph::ClauseGraph(int vertex_count)
    : adj_(vertex_count), rows_(vertex_count, Bitset(vertex_count)) {}

void ClauseGraph::add_edge(int u, int v) {
  if (u == v) throw InvariantError("self-loop on clause " + std::to_string(u + 1));
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

std::vector<std::pair<int, int>> ClauseGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

ClauseGraph conflict_graph(const Cnf& cnf) {
  const int m = cnf.num_clauses();
  ClauseGraph g(m);
  for (int i = 0; i < m; ++i)
    if (cnf.clauses[i].tautological())
      throw InvariantError("tautological clause at index " + std::to_string(i + 1) +
                           ": conflict graph requires a normalized formula");
  // literal -> clauses containing it
  std::vector<std::vector<int>> pos(cnf.num_vars + 1), neg(cnf.num_vars + 1);
  for (int i = 0; i < m; ++i)
    for (const Literal& l : cnf.clauses[i].literals())
      (l.is_positive() ? pos : neg)[l.var()].push_back(i);
  for (int v = 1; v <= cnf.num_vars; ++v)
    for (int i : pos[v])
      for (int j : neg[v])
        if (i != j) g.add_edge(i, j);
  return g;
}

ClauseGraph dual_graph(const Cnf& cnf) {
  const int m = cnf.num_clauses();
  ClauseGraph g(m);
  std::vector<std::vector<int>> occ(cnf.num_vars + 1);
  for (int i = 0; i < m; ++i)
    for (const Literal& l : cnf.clauses[i].literals()) occ[l.var()].push_back(i);
  for (int v = 1; v <= cnf.num_vars; ++v) {
    auto& cs = occ[v];
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = a + 1; b < cs.size(); ++b)
        if (cs[a] != cs[b]) g.add_edge(cs[a], cs[b]);
  }
  return g;
}

std::vector<int> greedy_maximal_independent_set(const ClauseGraph& g) {
  std::vector<int> out;
  Bitset taken(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbor_bits(v).intersects(taken)) continue;
    taken.set(v);
    out.push_back(v);
  }
  return out;
}

namespace {

// Greedy completion: scan all vertices in ascending order and add every
// vertex with no neighbor in the current set. The result is always maximal.
Bitset greedy_complete(const ClauseGraph& g, Bitset set, EnumCounters* counters) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (counters) ++counters->work;
    if (set.test(v)) continue;
    if (!g.neighbor_bits(v).intersects(set)) set.set(v);
  }
  return set;
}

}  // namespace

bool enumerate_maximal_independent_sets(const ClauseGraph& g, const VertexSetSink& sink,
                                        EnumCounters* counters) {
  const int n = g.vertex_count();
  Bitset root = greedy_complete(g, Bitset(n), counters);
  std::unordered_set<Bitset, BitsetHash> seen{root};
  std::deque<Bitset> queue{root};
  while (!queue.empty()) {
    Bitset s = std::move(queue.front());
    queue.pop_front();
    if (counters) ++counters->emitted;
    if (!sink(s)) return false;
    for (int j = 0; j < n; ++j) {
      Bitset seed(n);
      for (int v = 0; v < j; ++v) {
        if (counters) ++counters->work;
        if (s.test(v) && !g.adjacent(v, j)) seed.set(v);
      }
      seed.set(j);
      Bitset t = greedy_complete(g, std::move(seed), counters);
      if (seen.insert(t).second) queue.push_back(std::move(t));
    }
  }
  return true;
}

std::vector<std::pair<int, int>> greedy_maximal_induced_matching(const ClauseGraph& g) {
  std::vector<std::pair<int, int>> matching;
  Bitset covered(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    if (covered.test(u) || covered.test(v)) continue;
    if (g.neighbor_bits(u).intersects(covered)) continue;
    if (g.neighbor_bits(v).intersects(covered)) continue;
    covered.set(u);
    covered.set(v);
    matching.emplace_back(u, v);
  }
  return matching;
}

bool is_independent_set(const ClauseGraph& g, const Bitset& s) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s.test(v) && g.neighbor_bits(v).intersects(s)) return false;
  return true;
}

bool is_maximal_independent_set(const ClauseGraph& g, const Bitset& s) {
  if (!is_independent_set(g, s)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!s.test(v) && !g.neighbor_bits(v).intersects(s)) return false;
  return true;
}

bool is_induced_matching(const ClauseGraph& g, const std::vector<std::pair<int, int>>& m) {
  Bitset covered(g.vertex_count());
  for (auto [u, v] : m) {
    if (!g.adjacent(u, v)) return false;
    if (covered.test(u) || covered.test(v)) return false;
    covered.set(u);
    covered.set(v);
  }
  // covered vertices must induce exactly the matching edges
  for (auto [u, v] : m) {
    for (int w : g.neighbors(u))
      if (covered.test(w) && w != v) return false;
    for (int w : g.neighbors(v))
      if (covered.test(w) && w != u) return false;
  }
  return true;
}

}  // namespace sigenum
