#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tcbounds/parallel.hpp"
#include "tcbounds/presentations.hpp"

namespace tcb {

/// Sorted list of 1-based vertex indices.
using VertexSet = std::vector<int>;

/// Finite simple graph on vertices 1..n, stored as adjacency bitsets.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Throws DomainError unless 0 <= n <= kMaxVertices.
  explicit SimpleGraph(int n);
  /// Throws DomainError on loops, duplicate edges or out-of-range endpoints.
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

  static SimpleGraph complete(int n);
  static SimpleGraph empty(int n) { return SimpleGraph(n); }
  static SimpleGraph path(int n);

  void add_edge(int a, int b);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;
  bool adjacent(int a, int b) const;
  /// Bit i-1 set for every neighbor i of `a`.
  std::uint64_t neighbor_mask(int a) const { return adj_.at(static_cast<std::size_t>(a - 1)); }
  /// Edges (a, b) with a < b, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_clique(const VertexSet& s) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct CliquePair {
  VertexSet k1;
  VertexSet k2;
  int union_size = 0;

  friend bool operator==(const CliquePair&, const CliquePair&) = default;
};

/// Inclusion-maximal cliques, each sorted, the list sorted lexicographically.
/// Throws ResourceError when n exceeds max_vertices or more than max_cliques
/// cliques turn up.
std::vector<VertexSet> maximal_cliques(const SimpleGraph& g,
                                       int max_vertices = SimpleGraph::kMaxVertices,
                                       std::size_t max_cliques = 1'000'000);

int clique_number(const SimpleGraph& g);

struct ZResult {
  int z = 0;
  /// Pair of maximal cliques attaining z; the lexicographically least pair
  /// (i <= j) of indices into maximal_cliques().
  CliquePair witness;
  /// Disjoint cliques with the same union, suitable for clique_pair_bound().
  CliquePair disjoint_witness;
};

/// Largest number of vertices spanned by two cliques. Throws DomainError on
/// the empty graph.
ZResult z_number(const SimpleGraph& g, Execution exec = Execution::Parallel);

/// The retraction G_Γ -> Z^|K2| onto the clique K2 that kills every other
/// generator.
struct CliqueRetraction {
  VertexSet k1;
  VertexSet k2;
  VertexSet killed;  // vertices outside K2
  /// images[i-1] is the image of x_i in F(K2 generators) (abelian target).
  std::vector<Word> images;
};

struct CliquePairBound {
  int bound = 0;  // |K1| + |K2|
  CliqueRetraction retraction;
};

/// Throws DomainError when K1 or K2 is not a clique, contains an invalid
/// vertex, or the two meet.
CliquePairBound clique_pair_bound(const SimpleGraph& g, const VertexSet& k1, const VertexSet& k2);

/// <x1..xn | [xa, xb] for every edge (a, b)>.
Presentation raag_presentation(const SimpleGraph& g);

}  // namespace tcb
