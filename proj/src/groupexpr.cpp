#include "tcbounds/groupexpr.hpp"

#include <algorithm>

#include "tcbounds/error.hpp"

namespace tcb {

struct GroupExpr::Node {
  GroupKind kind = GroupKind::Trivial;
  int parameter = 0;
  std::vector<GroupExpr> children;
  std::optional<SimpleGraph> graph;
  std::optional<OpaqueFacts> facts;
  std::optional<std::string> aspherical;
};

namespace {

bool is_complete(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

std::string wrap(const GroupExpr& child, GroupKind parent) {
  const GroupKind k = child.kind();
  const bool compound = k == GroupKind::Product || k == GroupKind::FreeProduct;
  return compound && k != parent ? "(" + child.label() + ")" : child.label();
}

}  // namespace

GroupExpr GroupExpr::trivial() { return GroupExpr(std::make_shared<Node>()); }

GroupExpr GroupExpr::free(int rank) {
  if (rank < 0) throw DomainError("free group rank must be >= 0, got " + std::to_string(rank));
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::Free;
  n->parameter = rank;
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::free_abelian(int rank) {
  if (rank < 0)
    throw DomainError("free abelian rank must be >= 0, got " + std::to_string(rank));
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::FreeAbelian;
  n->parameter = rank;
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::pure_braid(int strands) {
  if (strands < 2)
    throw DomainError("pure braid group needs n >= 2, got " + std::to_string(strands));
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::PureBraid;
  n->parameter = strands;
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::bs12() {
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::BS12;
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::raag(SimpleGraph graph) {
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::Raag;
  n->parameter = graph.vertex_count();
  n->graph = std::move(graph);
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::surface(int genus) {
  if (genus < 1) throw DomainError("surface genus must be >= 1, got " + std::to_string(genus));
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::Surface;
  n->parameter = genus;
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::opaque(OpaqueFacts facts) {
  if (facts.name.empty()) throw DomainError("opaque group needs a name");
  if (facts.citation.empty())
    throw DomainError("opaque group " + facts.name + " needs a citation for its chd");
  if (facts.chd_lower < 0 || facts.chd_lower > facts.chd_upper)
    throw DomainError("opaque group " + facts.name + " has an invalid chd interval");
  if (facts.orientable_pd) {
    if (facts.duality && *facts.duality != *facts.orientable_pd)
      throw DomainError("opaque group " + facts.name + ": PD and duality dimensions differ");
    facts.duality = facts.orientable_pd;
  }
  if (facts.duality && (facts.chd_lower != *facts.duality || facts.chd_upper != *facts.duality))
    throw DomainError("opaque group " + facts.name + ": a duality group of dimension " +
                      std::to_string(*facts.duality) + " has exactly that chd");
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::Opaque;
  n->facts = std::move(facts);
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::product(GroupExpr left, GroupExpr right) {
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::Product;
  n->children = {std::move(left), std::move(right)};
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::free_product(GroupExpr left, GroupExpr right) {
  auto n = std::make_shared<Node>();
  n->kind = GroupKind::FreeProduct;
  n->children = {std::move(left), std::move(right)};
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::with_aspherical_2complex(std::string citation) const {
  if (citation.empty()) throw DomainError("an aspherical 2-complex assertion needs a citation");
  if (chd(*this).upper > 2)
    throw DomainError(label() + " has chd above 2, so it has no aspherical 2-complex");
  auto n = std::make_shared<Node>(*node_);
  n->aspherical = std::move(citation);
  return GroupExpr(std::move(n));
}

GroupKind GroupExpr::kind() const { return node_->kind; }
int GroupExpr::parameter() const { return node_->parameter; }

const GroupExpr& GroupExpr::left() const {
  if (node_->children.size() != 2) throw DomainError(label() + " has no factors");
  return node_->children[0];
}

const GroupExpr& GroupExpr::right() const {
  if (node_->children.size() != 2) throw DomainError(label() + " has no factors");
  return node_->children[1];
}

const SimpleGraph& GroupExpr::graph() const {
  if (!node_->graph) throw DomainError(label() + " is not a right-angled Artin group");
  return *node_->graph;
}

const OpaqueFacts& GroupExpr::opaque_facts() const {
  if (!node_->facts) throw DomainError(label() + " is not an opaque group");
  return *node_->facts;
}

const std::optional<std::string>& GroupExpr::aspherical_2complex() const {
  return node_->aspherical;
}

std::string GroupExpr::label() const {
  const int p = node_->parameter;
  switch (node_->kind) {
    case GroupKind::Trivial: return "1";
    case GroupKind::Free: return p == 0 ? "1" : "F_" + std::to_string(p);
    case GroupKind::FreeAbelian:
      return p == 0 ? "1" : p == 1 ? "Z" : "Z^" + std::to_string(p);
    case GroupKind::PureBraid: return "PB_" + std::to_string(p);
    case GroupKind::BS12: return "BS(1,2)";
    case GroupKind::Raag:
      return "RAAG(n=" + std::to_string(p) + ",m=" + std::to_string(node_->graph->edge_count()) + ")";
    case GroupKind::Surface: return "S_" + std::to_string(p);
    case GroupKind::Opaque: return node_->facts->name;
    case GroupKind::Product:
      return wrap(left(), GroupKind::Product) + " x " + wrap(right(), GroupKind::Product);
    case GroupKind::FreeProduct:
      return wrap(left(), GroupKind::FreeProduct) + " * " + wrap(right(), GroupKind::FreeProduct);
  }
  return "?";
}

std::optional<int> is_orientable_pd(const GroupExpr& e) {
  const int p = e.parameter();
  switch (e.kind()) {
    case GroupKind::Trivial: return 0;
    case GroupKind::Free:
      if (p <= 1) return p;
      return std::nullopt;
    case GroupKind::FreeAbelian: return p;
    case GroupKind::PureBraid:
      if (p == 2) return 1;
      return std::nullopt;
    case GroupKind::BS12: return std::nullopt;
    case GroupKind::Raag:
      if (is_complete(e.graph())) return p;
      return std::nullopt;
    case GroupKind::Surface: return 2;
    case GroupKind::Opaque: return e.opaque_facts().orientable_pd;
    case GroupKind::Product: {
      const auto l = is_orientable_pd(e.left());
      const auto r = is_orientable_pd(e.right());
      if (l && r) return *l + *r;
      return std::nullopt;
    }
    case GroupKind::FreeProduct: {
      const auto l = is_orientable_pd(e.left());
      const auto r = is_orientable_pd(e.right());
      if (l == 0) return r;
      if (r == 0) return l;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<int> is_duality(const GroupExpr& e) {
  if (auto pd = is_orientable_pd(e)) return pd;
  const int p = e.parameter();
  switch (e.kind()) {
    case GroupKind::Free: return 1;  // rank >= 2 here
    case GroupKind::PureBraid: return p - 1;
    case GroupKind::BS12: return 2;
    case GroupKind::Raag:
      if (e.graph().edge_count() == 0) return 1;  // free group
      return std::nullopt;
    case GroupKind::Opaque: return e.opaque_facts().duality;
    case GroupKind::Product: {
      const auto l = is_duality(e.left());
      const auto r = is_duality(e.right());
      if (l && r) return *l + *r;
      return std::nullopt;
    }
    case GroupKind::FreeProduct: {
      const auto l = is_duality(e.left());
      const auto r = is_duality(e.right());
      if (is_orientable_pd(e.left()) == 0) return r;
      if (is_orientable_pd(e.right()) == 0) return l;
      if (l == 1 && r == 1) return 1;  // free * free is free
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

namespace {

ChdResult exact(const GroupExpr& e, int value, std::string rule, std::string anchor) {
  ChdResult r;
  r.lower = r.upper = value;
  r.trace.push_back({std::move(rule), std::move(anchor), e.label(), value, value});
  return r;
}

void absorb(ChdResult& into, ChdResult&& from) {
  into.trace.insert(into.trace.end(), std::make_move_iterator(from.trace.begin()),
                    std::make_move_iterator(from.trace.end()));
  for (auto& c : from.caveats)
    if (std::find(into.caveats.begin(), into.caveats.end(), c) == into.caveats.end())
      into.caveats.push_back(std::move(c));
}

}  // namespace

ChdResult chd(const GroupExpr& e) {
  const int p = e.parameter();
  switch (e.kind()) {
    case GroupKind::Trivial: return exact(e, 0, "base", "the trivial group has chd 0");
    case GroupKind::Free:
      if (p == 0) return exact(e, 0, "base", "the trivial group has chd 0");
      return exact(e, 1, "base",
                   "nontrivial free groups have chd 1 (Stallings-Swan)");
    case GroupKind::FreeAbelian:
      return exact(e, p, "base", "Z^n is an orientable Poincare duality group of dimension n");
    case GroupKind::PureBraid:
      return exact(e, p - 1, "base",
                   "PB_n is an iterated extension of free groups (Fadell-Neuwirth), a duality "
                   "group of dimension n-1");
    case GroupKind::BS12:
      return exact(e, 2, "base",
                   "BS(1,2) = Z[1/2] x| Z is a duality group of dimension 2");
    case GroupKind::Raag:
      return exact(e, e.graph().vertex_count() == 0 ? 0 : clique_number(e.graph()),
                   "base (plumbing)",
                   "chd of a right-angled Artin group is the clique number of its graph "
                   "(Salvetti complex)");
    case GroupKind::Surface:
      return exact(e, 2, "base", "closed orientable surface groups are orientable PD_2 groups");
    case GroupKind::Opaque: {
      const auto& f = e.opaque_facts();
      ChdResult r;
      r.lower = f.chd_lower;
      r.upper = f.chd_upper;
      r.trace.push_back({"cited", f.citation, e.label(), r.lower, r.upper});
      return r;
    }
    case GroupKind::Product: {
      ChdResult l = chd(e.left());
      ChdResult r = chd(e.right());
      const auto dl = is_duality(e.left()), dr = is_duality(e.right());
      const auto pl = is_orientable_pd(e.left()), pr = is_orientable_pd(e.right());
      ChdResult out;
      RuleStep step{"", "", e.label(), 0, l.upper + r.upper};
      if (dl && dr) {
        step.rule = "duality-sum";
        step.anchor = "a product of duality groups of dimensions k and l is a duality group of "
                      "dimension k+l (Bieri-Eckmann)";
        step.lower = *dl + *dr;
      } else if (pl || pr) {
        const int pd = pl ? *pl : *pr;
        const ChdResult& other = pl ? r : l;
        step.rule = "orientable-PD-sum";
        step.anchor = "chd(A x B) = chd(A) + chd(B) when A is an orientable Poincare duality "
                      "group (Kunneth with the fundamental class)";
        step.lower = pd + other.lower;
      } else {
        step.rule = "subadditive-interval";
        step.anchor = "chd(A x B) <= chd(A) + chd(B); each factor is a retract";
        step.lower = std::max(l.lower, r.lower);
        out.caveats.push_back("chd(" + e.label() +
                              ") may be smaller than the sum of the factors; no exactness "
                              "rule applies");
      }
      out.lower = step.lower;
      out.upper = step.upper;
      absorb(out, std::move(l));
      absorb(out, std::move(r));
      out.trace.push_back(std::move(step));
      return out;
    }
    case GroupKind::FreeProduct: {
      ChdResult l = chd(e.left());
      ChdResult r = chd(e.right());
      ChdResult out;
      out.lower = std::max(l.lower, r.lower);
      out.upper = std::max(l.upper, r.upper);
      absorb(out, std::move(l));
      absorb(out, std::move(r));
      out.trace.push_back({"free-product-max",
                           "chd(A * B) = max(chd A, chd B) (Mayer-Vietoris over the "
                           "Bass-Serre tree)",
                           e.label(), out.lower, out.upper});
      return out;
    }
  }
  throw DomainError("unknown group expression");
}

namespace {

// Largest gd allowed by Eilenberg-Ganea for chd in [.., upper]: gd = chd
// except that chd 2 leaves gd in {2, 3}.
int eilenberg_ganea_upper(int chd_upper) { return chd_upper == 2 ? 3 : chd_upper; }

void merge_caveats(GdResult& into, const GdResult& from) {
  for (const auto& c : from.caveats)
    if (std::find(into.caveats.begin(), into.caveats.end(), c) == into.caveats.end())
      into.caveats.push_back(c);
}

}  // namespace

GdResult geometric_dimension(const GroupExpr& e) {
  const ChdResult c = chd(e);
  GdResult out;
  out.lower = c.lower;
  switch (e.kind()) {
    case GroupKind::Opaque:
      out.upper = eilenberg_ganea_upper(c.upper);
      break;
    case GroupKind::Product: {
      const GdResult l = geometric_dimension(e.left());
      const GdResult r = geometric_dimension(e.right());
      out.upper = std::min(l.upper + r.upper, eilenberg_ganea_upper(c.upper));
      merge_caveats(out, l);
      merge_caveats(out, r);
      break;
    }
    case GroupKind::FreeProduct: {
      const GdResult l = geometric_dimension(e.left());
      const GdResult r = geometric_dimension(e.right());
      out.upper = std::min(std::max(l.upper, r.upper), eilenberg_ganea_upper(c.upper));
      merge_caveats(out, l);
      merge_caveats(out, r);
      break;
    }
    default:
      // Every base family has a classifying space of dimension chd: graphs,
      // tori, arrangement complements, the BS(1,2) presentation complex,
      // Salvetti complexes and surfaces.
      out.upper = c.upper;
      break;
  }
  if (e.aspherical_2complex()) out.upper = std::min(out.upper, 2);
  out.upper = std::max(out.upper, out.lower);
  if (out.upper > c.upper && out.caveats.empty())
    out.caveats.push_back("chd(" + e.label() +
                          ") = 2 with no aspherical 2-complex on record; gd may be 3 "
                          "(Eilenberg-Ganea problem)");
  else if (out.upper <= c.upper)
    out.caveats.clear();
  return out;
}

}  // namespace tcb
