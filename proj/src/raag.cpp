#include "tcbounds/raag.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tcbounds/error.hpp"

namespace tcb {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << (v - 1); }

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

struct CliqueSearch {
  const SimpleGraph& g;
  std::size_t max_cliques;
  std::vector<Mask> found;

  // Bron-Kerbosch with Tomita pivoting.
  void expand(Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      if (found.size() == max_cliques)
        throw ResourceError("more than " + std::to_string(max_cliques) + " maximal cliques");
      found.push_back(r);
      return;
    }
    int pivot = 0;
    int best = -1;
    for (Mask px = p | x; px != 0; px &= px - 1) {
      const int u = std::countr_zero(px) + 1;
      const int c = std::popcount(p & g.neighbor_mask(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~g.neighbor_mask(pivot); cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand) + 1;
      const Mask nv = g.neighbor_mask(v);
      expand(r | bit(v), p & nv, x & nv);
      p &= ~bit(v);
      x |= bit(v);
    }
  }
};

Mask to_mask(const SimpleGraph& g, const VertexSet& s, const char* what) {
  Mask m = 0;
  for (int v : s) {
    if (v < 1 || v > g.vertex_count())
      throw DomainError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
    if (m & bit(v)) throw DomainError(std::string(what) + ": repeated vertex " + std::to_string(v));
    m |= bit(v);
  }
  return m;
}

struct Best {
  int size = -1;
  std::size_t i = 0, j = 0;

  bool improves(const Best& o) const {
    if (size != o.size) return size > o.size;
    return std::pair(i, j) < std::pair(o.i, o.j);
  }
};

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw DomainError("graph size " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxVertices));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
  for (auto [a, b] : edges) add_edge(a, b);
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) g.add_edge(a, b);
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n);
  for (int a = 1; a < n; ++a) g.add_edge(a, a + 1);
  return g;
}

void SimpleGraph::add_edge(int a, int b) {
  if (a < 1 || a > n_ || b < 1 || b > n_)
    throw DomainError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                      "} has an endpoint outside 1.." + std::to_string(n_));
  if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
  if (adjacent(a, b))
    throw DomainError("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  adj_[static_cast<std::size_t>(a - 1)] |= bit(b);
  adj_[static_cast<std::size_t>(b - 1)] |= bit(a);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

bool SimpleGraph::adjacent(int a, int b) const {
  return (adj_.at(static_cast<std::size_t>(a - 1)) & bit(b)) != 0;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a)
    for (int b : to_set(neighbor_mask(a) & ~((bit(a) << 1) - 1))) out.emplace_back(a, b);
  return out;
}

bool SimpleGraph::is_clique(const VertexSet& s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n_) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !adjacent(s[i], s[j])) return false;
  }
  return true;
}

std::vector<VertexSet> maximal_cliques(const SimpleGraph& g, int max_vertices,
                                       std::size_t max_cliques) {
  if (g.vertex_count() > max_vertices)
    throw ResourceError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices, limit is " + std::to_string(max_vertices));
  if (g.vertex_count() == 0) return {};
  CliqueSearch search{g, max_cliques, {}};
  const Mask all = g.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
  search.expand(0, all, 0);
  std::vector<VertexSet> out;
  out.reserve(search.found.size());
  for (Mask m : search.found) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int clique_number(const SimpleGraph& g) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
  return static_cast<int>(best);
}

ZResult z_number(const SimpleGraph& g, Execution exec) {
  if (g.vertex_count() == 0) throw DomainError("z_number needs at least one vertex");
  const auto cliques = maximal_cliques(g);
  std::vector<Mask> masks;
  masks.reserve(cliques.size());
  for (const auto& c : cliques) masks.push_back(to_mask(g, c, "clique"));
  const std::size_t m = masks.size();

  Best best;
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        const Best cand{std::popcount(masks[i] | masks[j]), i, j};
        if (cand.improves(best)) best = cand;
      }
  } else {
    const auto rows = static_cast<long long>(m);
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(dynamic, 16) nowait
      for (long long ii = 0; ii < rows; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i; j < m; ++j) {
          const Best cand{std::popcount(masks[i] | masks[j]), i, j};
          if (cand.improves(local)) local = cand;
        }
      }
#pragma omp critical(tcb_z_number)
      if (local.improves(best)) best = local;
    }
  }

  ZResult r;
  r.z = best.size;
  r.witness = {cliques[best.i], cliques[best.j], best.size};

  Mask a = masks[best.i];
  Mask b = masks[best.j] & ~a;
  if (b == 0 && std::popcount(a) >= 2) {
    // K2 inside K1: split off the largest vertex of K1.
    const Mask top = Mask{1} << (63 - std::countl_zero(a));
    a &= ~top;
    b = top;
  }
  r.disjoint_witness = {to_set(a), to_set(b), std::popcount(a | b)};
  return r;
}

CliquePairBound clique_pair_bound(const SimpleGraph& g, const VertexSet& k1, const VertexSet& k2) {
  const Mask a = to_mask(g, k1, "K1");
  const Mask b = to_mask(g, k2, "K2");
  if (!g.is_clique(k1)) throw DomainError("K1 is not a clique");
  if (!g.is_clique(k2)) throw DomainError("K2 is not a clique");
  if (a & b) throw DomainError("K1 and K2 share vertex " + std::to_string(std::countr_zero(a & b) + 1));

  CliquePairBound out;
  out.bound = std::popcount(a) + std::popcount(b);
  auto& ret = out.retraction;
  ret.k1 = to_set(a);
  ret.k2 = to_set(b);
  const std::size_t target_rank = ret.k2.size();
  std::uint32_t next = 1;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (b & bit(v)) {
      ret.images.push_back(Word::generator(target_rank, next++));
    } else {
      ret.killed.push_back(v);
      ret.images.emplace_back(target_rank);
    }
  }
  return out;
}

Presentation raag_presentation(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Word> relators;
  for (auto [a, b] : g.edges()) {
    const Word x = Word::generator(n, static_cast<std::uint32_t>(a));
    const Word y = Word::generator(n, static_cast<std::uint32_t>(b));
    relators.push_back(x * y * x.inverse() * y.inverse());
  }
  return Presentation(Alphabet::numbered("x", n), std::move(relators));
}

}  // namespace tcb
