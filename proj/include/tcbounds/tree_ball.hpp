#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcbounds/freeprod.hpp"
#include "tcbounds/parallel.hpp"

namespace tcb {

/// A-type vertices are cosets gA (stabilizer conjugate to factor 0), B-type
/// vertices are cosets gB.
enum class VertexType : std::uint8_t { A = 0, B = 1 };

/// The vertex g.v (type A) or g.w (type B) of the Bass-Serre tree.
struct VertexRef {
  FPWord element;
  VertexType type = VertexType::A;
};

/// A finite subtree of the Bass-Serre tree of A * B containing the base edge
/// (v, w), where v = A and w = B are the cosets of the identity.
///
/// Each vertex is identified by its shortest coset representative: the
/// normal form of g with a trailing syllable from the stabilizing factor
/// dropped. Vertices are stored in BFS order from the base edge; the children
/// of a vertex are contiguous and sorted by the id of the factor element that
/// leads to them, so find() is a walk down the tree.
class TreeBall {
 public:
  using Vertex = std::uint32_t;
  static constexpr Vertex v = 0;
  static constexpr Vertex w = 1;
  static constexpr std::size_t kDefaultMaxVertices = 5'000'000;

  /// Every vertex within `radius` edges of the base edge whose path from it
  /// uses only factor elements of size <= exponent_cap. Throws ResourceError
  /// when the ball would exceed max_vertices.
  static TreeBall build(const FreeProduct& fp, int radius, int exponent_cap,
                        std::size_t max_vertices = kDefaultMaxVertices);

  /// Smallest subtree containing the base edge and every seed vertex. Since
  /// it contains the geodesics between its vertices, BFS distances in the
  /// hull are tree distances.
  static TreeBall hull(const FreeProduct& fp, std::span<const VertexRef> seeds,
                       std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t size() const { return nodes_.size(); }
  int radius() const { return radius_; }
  VertexType type(Vertex x) const { return static_cast<VertexType>(node(x).type); }
  int depth(Vertex x) const { return node(x).depth; }

  /// Neighbors in the ball: parent (or the other base vertex) and children.
  std::vector<Vertex> neighbors(Vertex x) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Coset representative of x.
  FPWord representative(const FreeProduct& fp, Vertex x) const;
  /// The vertex g.v or g.w, if it lies in the ball.
  std::optional<Vertex> find(const FreeProduct& fp, const VertexRef& ref) const;

  /// Connected with |E| = |V| - 1.
  bool is_tree() const;

 private:
  struct Node {
    std::uint32_t parent = UINT32_MAX;
    std::uint32_t element = 0;  // id in elements_[factor of the parent's type]
    std::uint32_t first_child = 0;
    std::uint32_t child_count = 0;
    std::uint8_t type = 0;
    std::uint16_t depth = 0;
  };

  const Node& node(Vertex x) const;
  std::uint32_t intern(int factor, const Word& element);
  std::optional<Vertex> child(Vertex x, std::uint32_t element) const;

  std::vector<Node> nodes_;
  std::array<std::vector<Word>, 2> elements_;
  std::array<std::map<Word, std::uint32_t>, 2> element_ids_;
  int radius_ = 0;
};

/// Single-source BFS edge counts; -1 for nothing (the ball is connected).
std::vector<int> bfs_distances(const TreeBall& ball, TreeBall::Vertex source);

/// BFS edge count between two ball vertices. Throws DomainError for vertices
/// outside the ball.
int tree_distance(const TreeBall& ball, TreeBall::Vertex x, TreeBall::Vertex y);

/// min d(x, g.x) over ball vertices x whose image stays in the ball. An
/// empirical translation length, used to cross-check hyperbolic_length().
std::optional<std::size_t> translation_length_bfs(const TreeBall& ball, const FreeProduct& fp,
                                                  const FPWord& g);

std::string to_dot(const TreeBall& ball, const FreeProduct& fp);

/// Outcome of checking d(g.w, v) = 2k - 1 and d(g.w, w) = 2k for every
/// alternating g = a1 b1 ... ak bk with k <= max_k and syllables drawn from
/// Factor::elements_up_to(exponent_cap).
struct DistanceLemmaReport {
  std::size_t words_checked = 0;
  std::size_t outside_ball = 0;
  std::vector<std::string> failures;  // sorted, printable

  bool ok() const { return failures.empty() && outside_ball == 0; }
  friend bool operator==(const DistanceLemmaReport&, const DistanceLemmaReport&) = default;
};

DistanceLemmaReport verify_distance_lemma(const FreeProduct& fp, const TreeBall& ball, int max_k,
                                          int exponent_cap, Execution exec = Execution::Parallel);

}  // namespace tcb
