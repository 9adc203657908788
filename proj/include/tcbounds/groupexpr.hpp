#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcbounds/raag.hpp"

namespace tcb {

enum class GroupKind {
  Trivial,
  Free,
  FreeAbelian,
  PureBraid,
  BS12,
  Raag,
  Surface,
  Opaque,
  Product,
  FreeProduct,
};

/// Facts about a group the calculus cannot derive, injected by a case study.
/// The citation is mandatory and is copied into every trace that uses it.
struct OpaqueFacts {
  std::string name;
  int chd_lower = 0;
  int chd_upper = 0;
  std::optional<int> duality;
  std::optional<int> orientable_pd;
  std::string citation;
};

/// Immutable expression tree over a few group families, products and free
/// products. Copies share structure.
class GroupExpr {
 public:
  static GroupExpr trivial();
  static GroupExpr free(int rank);
  static GroupExpr free_abelian(int rank);
  static GroupExpr pure_braid(int n);
  /// BS(1,2) = <x, y | x y x^-1 = y^2>.
  static GroupExpr bs12();
  static GroupExpr raag(SimpleGraph graph);
  static GroupExpr surface(int genus);
  /// Throws DomainError on an empty citation, an empty or negative chd
  /// interval, or flags inconsistent with it.
  static GroupExpr opaque(OpaqueFacts facts);
  static GroupExpr product(GroupExpr left, GroupExpr right);
  static GroupExpr free_product(GroupExpr left, GroupExpr right);

  /// Records that the group has a 2-dimensional aspherical presentation
  /// complex. Only meaningful when chd <= 2; otherwise DomainError.
  GroupExpr with_aspherical_2complex(std::string citation) const;

  GroupKind kind() const;
  /// Rank, strand count or genus of a base node; 0 otherwise.
  int parameter() const;
  const GroupExpr& left() const;
  const GroupExpr& right() const;
  const SimpleGraph& graph() const;
  const OpaqueFacts& opaque_facts() const;
  const std::optional<std::string>& aspherical_2complex() const;

  /// Compact name such as "Z^2 x PB_3" or "BS(1,2) * F_2".
  std::string label() const;

 private:
  struct Node;
  explicit GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One rule application: the rule, the mathematical result it rests on, the
/// subexpression it was applied to and the interval it produced.
struct RuleStep {
  std::string rule;
  std::string anchor;
  std::string subject;
  int lower = 0;
  int upper = 0;

  friend bool operator==(const RuleStep&, const RuleStep&) = default;
};

struct ChdResult {
  int lower = 0;
  int upper = 0;
  std::vector<RuleStep> trace;  // children before parents
  std::vector<std::string> caveats;

  bool exact() const { return lower == upper; }
};

/// Cohomological dimension, exact when a rule forces it, else an interval.
ChdResult chd(const GroupExpr& e);

/// Dimension when the group is known to be a duality group. Never a false
/// positive: unknown means absent.
std::optional<int> is_duality(const GroupExpr& e);
std::optional<int> is_orientable_pd(const GroupExpr& e);

struct GdResult {
  int lower = 0;
  int upper = 0;
  std::vector<std::string> caveats;
};

/// Geometric dimension. gd = chd away from chd = 2; at chd = 2 the upper end
/// is 3 unless an aspherical 2-complex is known or asserted.
GdResult geometric_dimension(const GroupExpr& e);

}  // namespace tcb
