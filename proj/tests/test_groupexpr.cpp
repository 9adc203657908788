#include <random>

#include "doctest.h"
#include "tcbounds/error.hpp"
#include "tcbounds/groupexpr.hpp"

using namespace tcb;

namespace {

GroupExpr borromean_b() {
  return GroupExpr::opaque({"BorromeanB", 2, 2, std::nullopt, std::nullopt,
                            "B is a non-free subgroup of a group with an aspherical 2-complex"});
}

GroupExpr opaque_interval(const std::string& name, int lo, int hi) {
  return GroupExpr::opaque({name, lo, hi, std::nullopt, std::nullopt, "test fixture"});
}

GroupExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 7);
  switch (pick(rng)) {
    case 0: return GroupExpr::trivial();
    case 1: return GroupExpr::free(1 + static_cast<int>(rng() % 3));
    case 2: return GroupExpr::free_abelian(1 + static_cast<int>(rng() % 3));
    case 3: return GroupExpr::pure_braid(2 + static_cast<int>(rng() % 4));
    case 4: return GroupExpr::bs12();
    case 5: return GroupExpr::surface(1 + static_cast<int>(rng() % 2));
    case 6: return GroupExpr::raag(SimpleGraph::path(1 + static_cast<int>(rng() % 4)));
    case 7: {
      const int lo = static_cast<int>(rng() % 3);
      return opaque_interval("Q", lo, lo + static_cast<int>(rng() % 2));
    }
    case 8: return GroupExpr::product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default:
      return GroupExpr::free_product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_SUITE_BEGIN("groupexpr");

TEST_CASE("base cases") {
  CHECK(chd(GroupExpr::trivial()).upper == 0);
  CHECK(chd(GroupExpr::free(3)).lower == 1);
  CHECK(chd(GroupExpr::free_abelian(4)).lower == 4);
  for (int n = 2; n <= 8; ++n) {
    const auto r = chd(GroupExpr::pure_braid(n));
    CHECK(r.exact());
    CHECK(r.lower == n - 1);
  }
  CHECK(chd(GroupExpr::bs12()).lower == 2);
  CHECK(chd(GroupExpr::surface(3)).lower == 2);
  CHECK(chd(GroupExpr::raag(SimpleGraph(4, {{1, 2}, {2, 3}, {1, 3}}))).lower == 3);
  CHECK_THROWS_AS(GroupExpr::pure_braid(1), DomainError);
  CHECK_THROWS_AS(GroupExpr::surface(0), DomainError);
  CHECK_THROWS_AS(GroupExpr::opaque({"X", 2, 2, std::nullopt, std::nullopt, ""}), DomainError);
  CHECK_THROWS_AS(GroupExpr::opaque({"X", 3, 2, std::nullopt, std::nullopt, "c"}), DomainError);
  CHECK_THROWS_AS(GroupExpr::opaque({"X", 2, 3, 2, std::nullopt, "c"}), DomainError);
}

TEST_CASE("product rules") {
  const auto bs = GroupExpr::product(GroupExpr::bs12(), GroupExpr::bs12());
  const auto r = chd(bs);
  CHECK(r.exact());
  CHECK(r.lower == 4);
  CHECK(r.trace.back().rule == "duality-sum");
  CHECK(is_duality(bs) == 4);

  const auto zb = GroupExpr::product(GroupExpr::free_abelian(1), borromean_b());
  const auto s = chd(zb);
  CHECK(s.exact());
  CHECK(s.lower == 3);
  CHECK(s.trace.back().rule == "orientable-PD-sum");
  CHECK(s.trace[1].anchor.find("non-free") != std::string::npos);

  const auto qq = GroupExpr::product(opaque_interval("Q1", 1, 2), opaque_interval("Q2", 1, 2));
  const auto t = chd(qq);
  CHECK(t.lower == 1);
  CHECK(t.upper == 4);
  CHECK_FALSE(t.caveats.empty());

  const auto zpb = GroupExpr::product(GroupExpr::free_abelian(3), GroupExpr::pure_braid(4));
  CHECK(chd(zpb).lower == 6);
  CHECK(chd(zpb).exact());
}

TEST_CASE("free products") {
  CHECK(chd(GroupExpr::free_product(GroupExpr::free(1), GroupExpr::free(1))).lower == 1);
  CHECK(chd(GroupExpr::free(2)).lower == 1);
  const auto fp = GroupExpr::free_product(GroupExpr::bs12(), GroupExpr::free_abelian(3));
  CHECK(chd(fp).lower == 3);
  CHECK(chd(fp).exact());
  CHECK(is_duality(GroupExpr::free_product(GroupExpr::free(1), GroupExpr::free(2))) == 1);
  CHECK_FALSE(is_duality(fp).has_value());
}

TEST_CASE("is_duality") {
  CHECK(is_duality(GroupExpr::free_abelian(3)) == 3);
  CHECK(is_duality(GroupExpr::bs12()) == 2);
  CHECK_FALSE(is_duality(opaque_interval("X", 2, 2)).has_value());
  CHECK(is_duality(GroupExpr::pure_braid(5)) == 4);
  CHECK(is_orientable_pd(GroupExpr::surface(2)) == 2);
  CHECK_FALSE(is_orientable_pd(GroupExpr::pure_braid(4)).has_value());
  CHECK_FALSE(is_orientable_pd(GroupExpr::bs12()).has_value());
}

TEST_CASE("geometric dimension") {
  const auto bare = opaque_interval("G", 2, 2);
  const auto g = geometric_dimension(bare);
  CHECK(g.lower == 2);
  CHECK(g.upper == 3);
  CHECK_FALSE(g.caveats.empty());

  const auto asserted = bare.with_aspherical_2complex("explicit aspherical presentation complex");
  const auto h = geometric_dimension(asserted);
  CHECK(h.upper == 2);
  CHECK(h.caveats.empty());

  CHECK(geometric_dimension(GroupExpr::bs12()).upper == 2);
  CHECK(geometric_dimension(GroupExpr::pure_braid(4)).upper == 3);
  CHECK(geometric_dimension(GroupExpr::product(bare, GroupExpr::free(1))).upper == 3);
  CHECK(geometric_dimension(GroupExpr::product(GroupExpr::free(1), GroupExpr::free(1))).upper == 2);
  CHECK_THROWS_AS(GroupExpr::free_abelian(3).with_aspherical_2complex("c"), DomainError);
}

TEST_CASE("labels") {
  CHECK(GroupExpr::product(GroupExpr::free_abelian(2), GroupExpr::pure_braid(3)).label() ==
        "Z^2 x PB_3");
  CHECK(GroupExpr::free_product(GroupExpr::bs12(), GroupExpr::free(2)).label() ==
        "BS(1,2) * F_2");
  CHECK(GroupExpr::product(GroupExpr::free_product(GroupExpr::free(1), GroupExpr::free(1)),
                           GroupExpr::free(1))
            .label() == "(F_1 * F_1) x F_1");
}

TEST_CASE("interval properties on random expressions") {
  std::mt19937 rng(8);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_expr(rng, 2);
    const auto b = random_expr(rng, 2);
    const auto ca = chd(a), cb = chd(b);
    const auto ab = chd(GroupExpr::product(a, b));
    const auto ba = chd(GroupExpr::product(b, a));
    CHECK(ab.lower <= ab.upper);
    CHECK(ab.upper == ca.upper + cb.upper);
    CHECK(ab.lower >= std::max(ca.lower, cb.lower));
    CHECK(ab.lower == ba.lower);
    CHECK(ab.upper == ba.upper);
    if (const auto d = is_duality(a)) CHECK((ca.exact() && ca.lower == *d));

    // Where both exactness rules apply they must agree.
    const auto pa = is_orientable_pd(a);
    const auto db = is_duality(b);
    if (pa && db) CHECK(ab.lower == *pa + *db);

    const auto gd = geometric_dimension(a);
    CHECK(gd.lower == ca.lower);
    CHECK(gd.upper >= ca.upper);
    CHECK(gd.upper <= std::max(ca.upper, 3));
  }
}

TEST_SUITE_END();
