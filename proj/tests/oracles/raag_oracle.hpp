#pragma once

// Test-only brute force for clique-pair questions. Works on adjacency
// matrices directly and shares no code with src/raag.cpp.

#include <algorithm>
#include <numeric>
#include <vector>

namespace tcb::oracle {

struct TinyGraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;  // 0-based

  explicit TinyGraph(int n_) : n(n_), adj(n_, std::vector<bool>(n_, false)) {}
  void connect(int a, int b) { adj[a][b] = adj[b][a] = true; }
};

// Unordered pairs (a < b) in lexicographic order; the graph with index `code`
// has edge number k iff bit k of `code` is set.
inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

inline TinyGraph graph_from_code(int n, unsigned long long code) {
  TinyGraph g(n);
  const auto pairs = vertex_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((code >> k) & 1ULL) g.connect(pairs[k].first, pairs[k].second);
  return g;
}

inline bool subset_is_clique(const TinyGraph& g, unsigned s) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (((s >> a) & 1U) && ((s >> b) & 1U) && !g.adj[a][b]) return false;
  return true;
}

inline int count_bits(unsigned s) {
  int c = 0;
  for (; s; s >>= 1) c += static_cast<int>(s & 1U);
  return c;
}

// max |K1 u K2| over all pairs of vertex subsets that are cliques.
inline int brute_force_z(const TinyGraph& g, bool disjoint_only = false) {
  std::vector<unsigned> cliques;
  for (unsigned s = 0; s < (1U << g.n); ++s)
    if (subset_is_clique(g, s)) cliques.push_back(s);
  int best = 0;
  for (unsigned a : cliques)
    for (unsigned b : cliques) {
      if (disjoint_only && (a & b)) continue;
      best = std::max(best, count_bits(a | b));
    }
  return best;
}

inline int brute_force_omega(const TinyGraph& g) {
  int best = 0;
  for (unsigned s = 0; s < (1U << g.n); ++s)
    if (subset_is_clique(g, s)) best = std::max(best, count_bits(s));
  return best;
}

// Inclusion-maximal cliques as sorted 1-based vertex lists, sorted.
inline std::vector<std::vector<int>> brute_force_maximal_cliques(const TinyGraph& g) {
  std::vector<unsigned> cliques;
  for (unsigned s = 1; s < (1U << g.n); ++s)
    if (subset_is_clique(g, s)) cliques.push_back(s);
  std::vector<std::vector<int>> out;
  for (unsigned a : cliques) {
    bool maximal = true;
    for (unsigned b : cliques)
      if (b != a && (a & b) == a) maximal = false;
    if (!maximal) continue;
    std::vector<int> vs;
    for (int v = 0; v < g.n; ++v)
      if ((a >> v) & 1U) vs.push_back(v + 1);
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Least edge code over all vertex relabelings: a canonical form for
// isomorphism classes of graphs on n <= 7 vertices.
inline unsigned long long canonical_code(int n, unsigned long long code) {
  const auto pairs = vertex_pairs(n);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t k = 0; k < pairs.size(); ++k)
    index[pairs[k].first][pairs[k].second] = index[pairs[k].second][pairs[k].first] =
        static_cast<int>(k);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  unsigned long long best = ~0ULL;
  do {
    unsigned long long c = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((code >> k) & 1ULL) c |= 1ULL << index[perm[pairs[k].first]][perm[pairs[k].second]];
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace tcb::oracle
