#include "tcbounds/tree_ball.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "tcbounds/error.hpp"

namespace tcb {

namespace {

int factor_of(VertexType t) { return static_cast<int>(t); }

// Syllables of the coset representative of g.v (type A) or g.w (type B).
std::vector<Syllable> coset_path(const VertexRef& ref) {
  std::vector<Syllable> path = ref.element.syllables();
  if (!path.empty() && path.back().factor == factor_of(ref.type)) path.pop_back();
  return path;
}

}  // namespace

const TreeBall::Node& TreeBall::node(Vertex x) const {
  if (x >= nodes_.size())
    throw DomainError("vertex " + std::to_string(x) + " is outside the ball");
  return nodes_[x];
}

std::uint32_t TreeBall::intern(int factor, const Word& element) {
  auto& ids = element_ids_[static_cast<std::size_t>(factor)];
  auto& table = elements_[static_cast<std::size_t>(factor)];
  auto [it, fresh] = ids.emplace(element, static_cast<std::uint32_t>(table.size()));
  if (fresh) table.push_back(element);
  return it->second;
}

std::optional<TreeBall::Vertex> TreeBall::child(Vertex x, std::uint32_t element) const {
  const Node& n = node(x);
  const auto begin = nodes_.begin() + n.first_child;
  const auto end = begin + n.child_count;
  const auto it = std::lower_bound(begin, end, element,
                                   [](const Node& c, std::uint32_t e) { return c.element < e; });
  if (it == end || it->element != element) return std::nullopt;
  return static_cast<Vertex>(it - nodes_.begin());
}

TreeBall TreeBall::build(const FreeProduct& fp, int radius, int exponent_cap,
                         std::size_t max_vertices) {
  if (radius < 1) throw DomainError("tree ball radius must be >= 1");
  if (radius > std::numeric_limits<std::uint16_t>::max())
    throw DomainError("tree ball radius too large");
  if (exponent_cap < 1) throw DomainError("exponent cap must be >= 1");

  TreeBall ball;
  ball.radius_ = radius;
  std::array<std::size_t, 2> branching{};
  for (int f = 0; f < 2; ++f) {
    for (const auto& e : fp.factor(f).elements_up_to(exponent_cap)) ball.intern(f, e);
    branching[static_cast<std::size_t>(f)] = ball.elements_[static_cast<std::size_t>(f)].size();
  }

  // Level counts: A-vertices spawn B-vertices through factor-0 elements and
  // vice versa.
  std::size_t a = 1, b = 1, total = 2;
  for (int d = 0; d < radius; ++d) {
    const long double na = static_cast<long double>(b) * branching[1];
    const long double nb = static_cast<long double>(a) * branching[0];
    if (total + na + nb > static_cast<long double>(max_vertices))
      throw ResourceError("tree ball of radius " + std::to_string(radius) + " with cap " +
                          std::to_string(exponent_cap) + " exceeds " +
                          std::to_string(max_vertices) + " vertices");
    a = static_cast<std::size_t>(na);
    b = static_cast<std::size_t>(nb);
    total += a + b;
  }

  ball.nodes_.reserve(total);
  ball.nodes_.push_back(Node{UINT32_MAX, 0, 0, 0, static_cast<std::uint8_t>(VertexType::A), 0});
  ball.nodes_.push_back(Node{UINT32_MAX, 0, 0, 0, static_cast<std::uint8_t>(VertexType::B), 0});
  for (std::size_t x = 0; x < ball.nodes_.size(); ++x) {
    const Node cur = ball.nodes_[x];
    ball.nodes_[x].first_child = static_cast<std::uint32_t>(ball.nodes_.size());
    if (cur.depth >= radius) continue;
    const auto f = static_cast<std::size_t>(cur.type);
    const auto child_type = static_cast<std::uint8_t>(1 - cur.type);
    for (std::uint32_t e = 0; e < branching[f]; ++e)
      ball.nodes_.push_back(Node{static_cast<std::uint32_t>(x), e, 0, 0, child_type,
                                 static_cast<std::uint16_t>(cur.depth + 1)});
    ball.nodes_[x].child_count = static_cast<std::uint32_t>(branching[f]);
  }
  return ball;
}

TreeBall TreeBall::hull(const FreeProduct& fp, std::span<const VertexRef> seeds,
                        std::size_t max_vertices) {
  struct Temp {
    std::uint32_t parent;
    std::uint32_t element;
    std::uint8_t type;
    std::uint16_t depth;
    std::map<std::uint32_t, std::uint32_t> children;
  };
  TreeBall ball;
  std::vector<Temp> temp;
  temp.push_back({UINT32_MAX, 0, 0, 0, {}});
  temp.push_back({UINT32_MAX, 0, 1, 0, {}});

  for (const auto& seed : seeds) {
    const auto path = coset_path(seed);
    if (path.empty()) continue;
    std::uint32_t cur = path.front().factor == 0 ? v : w;
    for (const auto& s : path) {
      const std::uint32_t id = ball.intern(s.factor, fp.factor(s.factor).normalize(s.element));
      auto it = temp[cur].children.find(id);
      if (it == temp[cur].children.end()) {
        if (temp.size() >= max_vertices)
          throw ResourceError("tree hull exceeds " + std::to_string(max_vertices) + " vertices");
        const auto fresh = static_cast<std::uint32_t>(temp.size());
        const std::uint8_t type = temp[cur].type;
        const std::uint16_t depth = temp[cur].depth;
        temp[cur].children.emplace(id, fresh);
        temp.push_back({cur, id, static_cast<std::uint8_t>(1 - type),
                        static_cast<std::uint16_t>(depth + 1), {}});
        cur = fresh;
      } else {
        cur = it->second;
      }
    }
  }

  // Flatten in BFS order so that children are contiguous and sorted by id.
  std::vector<std::uint32_t> order{v, w};
  std::vector<std::uint32_t> new_index(temp.size());
  new_index[v] = v;
  new_index[w] = w;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& [id, c] : temp[order[i]].children) {
      new_index[c] = static_cast<std::uint32_t>(order.size());
      order.push_back(c);
    }
  ball.nodes_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Temp& t = temp[order[i]];
    Node& n = ball.nodes_[i];
    n.parent = t.parent == UINT32_MAX ? UINT32_MAX : new_index[t.parent];
    n.element = t.element;
    n.type = t.type;
    n.depth = t.depth;
    n.child_count = static_cast<std::uint32_t>(t.children.size());
    n.first_child = t.children.empty() ? 0 : new_index[t.children.begin()->second];
    ball.radius_ = std::max<int>(ball.radius_, t.depth);
  }
  return ball;
}

std::vector<TreeBall::Vertex> TreeBall::neighbors(Vertex x) const {
  const Node& n = node(x);
  std::vector<Vertex> out;
  out.reserve(n.child_count + 1);
  if (x == v)
    out.push_back(w);
  else if (x == w)
    out.push_back(v);
  else
    out.push_back(n.parent);
  for (std::uint32_t i = 0; i < n.child_count; ++i) out.push_back(n.first_child + i);
  return out;
}

std::vector<std::pair<TreeBall::Vertex, TreeBall::Vertex>> TreeBall::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (nodes_.size() < 2) return out;
  out.reserve(nodes_.size() - 1);
  out.emplace_back(v, w);
  for (Vertex x = 2; x < nodes_.size(); ++x) out.emplace_back(nodes_[x].parent, x);
  return out;
}

FPWord TreeBall::representative(const FreeProduct& fp, Vertex x) const {
  std::vector<Syllable> rev;
  for (Vertex cur = x; cur != v && cur != w; cur = node(cur).parent) {
    const Node& n = node(cur);
    const int f = 1 - n.type;  // the parent's factor
    rev.push_back({f, elements_[static_cast<std::size_t>(f)][n.element]});
  }
  std::reverse(rev.begin(), rev.end());
  return fp.normal_form(rev);
}

std::optional<TreeBall::Vertex> TreeBall::find(const FreeProduct& fp, const VertexRef& ref) const {
  const auto path = coset_path(ref);
  if (path.empty()) return ref.type == VertexType::A ? v : w;
  Vertex cur = path.front().factor == 0 ? v : w;
  for (const auto& s : path) {
    const auto& ids = element_ids_[static_cast<std::size_t>(s.factor)];
    const auto it = ids.find(fp.factor(s.factor).normalize(s.element));
    if (it == ids.end()) return std::nullopt;
    const auto next = child(cur, it->second);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

bool TreeBall::is_tree() const {
  if (nodes_.empty()) return false;
  if (edges().size() != nodes_.size() - 1) return false;
  const auto d = bfs_distances(*this, v);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<int> bfs_distances(const TreeBall& ball, TreeBall::Vertex source) {
  std::vector<int> dist(ball.size(), -1);
  if (source >= ball.size()) throw DomainError("vertex outside the ball");
  std::deque<TreeBall::Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto y : ball.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

int tree_distance(const TreeBall& ball, TreeBall::Vertex x, TreeBall::Vertex y) {
  if (x >= ball.size() || y >= ball.size()) throw DomainError("vertex outside the ball");
  std::vector<int> dist(ball.size(), -1);
  std::deque<TreeBall::Vertex> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    if (cur == y) return dist[cur];
    for (auto n : ball.neighbors(cur))
      if (dist[n] < 0) {
        dist[n] = dist[cur] + 1;
        queue.push_back(n);
      }
  }
  return -1;
}

std::optional<std::size_t> translation_length_bfs(const TreeBall& ball, const FreeProduct& fp,
                                                  const FPWord& g) {
  std::optional<std::size_t> best;
  for (TreeBall::Vertex x = 0; x < ball.size(); ++x) {
    const VertexRef image{fp.multiply(g, ball.representative(fp, x)), ball.type(x)};
    const auto gx = ball.find(fp, image);
    if (!gx) continue;
    const auto d = static_cast<std::size_t>(tree_distance(ball, x, *gx));
    if (!best || d < *best) best = d;
    if (best == 0u) break;
  }
  return best;
}

std::string to_dot(const TreeBall& ball, const FreeProduct& fp) {
  std::ostringstream out;
  out << "graph bass_serre {\n";
  for (TreeBall::Vertex x = 0; x < ball.size(); ++x) {
    const char* stab = ball.type(x) == VertexType::A ? "A" : "B";
    out << "  n" << x << " [label=\"" << fp.to_string(ball.representative(fp, x)) << " " << stab
        << "\"" << (ball.type(x) == VertexType::A ? ", shape=circle" : ", shape=box") << "];\n";
  }
  for (const auto& [a, b] : ball.edges()) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

// Decodes `index` into an alternating word a1 b1 ... ak bk.
FPWord alternating_word(const FreeProduct& fp, const std::array<std::vector<Word>, 2>& tables,
                        int k, std::size_t index) {
  std::vector<Syllable> raw;
  raw.reserve(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < 2 * k; ++i) {
    const int f = i % 2;
    const auto& t = tables[static_cast<std::size_t>(f)];
    raw.push_back({f, t[index % t.size()]});
    index /= t.size();
  }
  return fp.normal_form(raw);
}

}  // namespace

DistanceLemmaReport verify_distance_lemma(const FreeProduct& fp, const TreeBall& ball, int max_k,
                                          int exponent_cap, Execution exec) {
  const std::array<std::vector<Word>, 2> tables{fp.factor(0).elements_up_to(exponent_cap),
                                                fp.factor(1).elements_up_to(exponent_cap)};
  const auto from_v = bfs_distances(ball, TreeBall::v);
  const auto from_w = bfs_distances(ball, TreeBall::w);

  DistanceLemmaReport report;
  for (int k = 1; k <= max_k; ++k) {
    std::size_t count = 1;
    for (int i = 0; i < k; ++i) count *= tables[0].size() * tables[1].size();

    auto check = [&](std::size_t index, std::vector<std::string>& failures,
                     std::size_t& outside) {
      const FPWord g = alternating_word(fp, tables, k, index);
      const auto x = ball.find(fp, VertexRef{g, VertexType::B});
      if (!x) {
        ++outside;
        return;
      }
      const int dv = from_v[*x], dw = from_w[*x];
      if (dv != 2 * k - 1 || dw != 2 * k)
        failures.push_back(fp.to_string(g) + ": d(gw,v)=" + std::to_string(dv) +
                           " d(gw,w)=" + std::to_string(dw) + " k=" + std::to_string(k));
    };

    std::size_t outside = 0;
    std::vector<std::string> failures;
    if (exec == Execution::Serial) {
      for (std::size_t i = 0; i < count; ++i) check(i, failures, outside);
    } else {
#pragma omp parallel
      {
        std::vector<std::string> local;
        std::size_t local_outside = 0;
#pragma omp for schedule(static) nowait
        for (std::size_t i = 0; i < count; ++i) check(i, local, local_outside);
#pragma omp critical
        {
          failures.insert(failures.end(), local.begin(), local.end());
          outside += local_outside;
        }
      }
    }
    report.words_checked += count;
    report.outside_ball += outside;
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
  }
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace tcb
