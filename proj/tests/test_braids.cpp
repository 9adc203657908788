#include <random>

#include "doctest.h"
#include "oracles/braid_oracle.hpp"
#include "tcbounds/braids.hpp"
#include "tcbounds/error.hpp"

using namespace tcb;

namespace {

std::vector<std::pair<int, int>> raw(const BraidWord& b) {
  std::vector<std::pair<int, int>> out;
  for (const Letter& l : b.letters()) out.emplace_back(static_cast<int>(l.gen), l.sign);
  return out;
}

BraidWord random_braid(int n, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1);
  std::bernoulli_distribution flip(0.5);
  std::vector<Letter> letters;
  const int k = len(rng);
  for (int i = 0; i < k; ++i)
    letters.push_back({static_cast<std::uint32_t>(gen(rng)), flip(rng) ? 1 : -1});
  return BraidWord(n, letters);
}

// Random pure braid from the generators A_ij, at most max_len letters.
BraidWord random_pure(int n, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<int> pick(1, n);
  std::bernoulli_distribution flip(0.5);
  BraidWord out(n, {});
  for (int tries = 0; tries < 6; ++tries) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    BraidWord g = pure_generator(n, i, j);
    if (flip(rng)) g = g.inverse();
    if (out.size() + g.size() > max_len) break;
    out = out * g;
  }
  return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation out(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) out[p] = f[static_cast<std::size_t>(g[p] - 1)];
  return out;
}

std::vector<long> alpha_column(int n, const std::vector<long>& k) {
  BraidWord w(n, {});
  for (int j = 1; j <= n - 1; ++j) w = w * alpha_generator(n, j).pow(k[j - 1]);
  return linking_matrix(w).last_column();
}

}  // namespace

TEST_SUITE_BEGIN("braids");

TEST_CASE("parsing and validation") {
  const auto b = BraidWord::parse(4, "s1 s2^-1 s3^2");
  CHECK(b.size() == 4);
  CHECK(to_string(b) == "s1 s2^-1 s3 s3");
  CHECK(BraidWord::parse(3, "s1 s1^-1").size() == 2);
  CHECK(BraidWord::parse(3, "1").size() == 0);
  CHECK_THROWS_AS(BraidWord::parse(3, "s3"), DomainError);
  CHECK_THROWS_AS(BraidWord::parse(1, "1"), DomainError);
  CHECK_THROWS_AS(BraidWord(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(BraidWord::parse(3, "s1") * BraidWord::parse(4, "s1"), DomainError);
}

TEST_CASE("permutation") {
  CHECK(permutation(BraidWord::parse(2, "s1")) == Permutation{2, 1});
  CHECK(cycle_string(permutation(BraidWord::parse(2, "s1"))) == "(1 2)");
  CHECK(is_pure(alpha_generator(4, 1)));
  const auto b = BraidWord::parse(4, "s1 s3 s2^-1");
  CHECK(is_pure(b * b.inverse()));
  CHECK(cycle_string(permutation(BraidWord::parse(4, "1"))) == "()");

  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 5;
    const auto u = random_braid(n, rng, 10);
    const auto v = random_braid(n, rng, 10);
    CHECK(permutation(u * v) == compose(permutation(u), permutation(v)));
  }
}

TEST_CASE("alpha_generator") {
  CHECK(alpha_generator(4, 1) == BraidWord::parse(4, "s1 s2 s3 s3 s2 s1"));
  CHECK(alpha_generator(2, 1) == BraidWord::parse(2, "s1^2"));
  CHECK(alpha_generator(4, 3) == BraidWord::parse(4, "s3^2"));
  CHECK_THROWS_AS(alpha_generator(4, 4), DomainError);
  CHECK_THROWS_AS(alpha_generator(4, 0), DomainError);

  for (int n = 2; n <= 7; ++n)
    for (int j = 1; j <= n - 1; ++j) {
      const auto lk = linking_matrix(alpha_generator(n, j));
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) CHECK(lk.at(a, b) == (a == j ? 1 : 0));
    }
}

TEST_CASE("braid_equal") {
  CHECK(braid_equal(BraidWord::parse(3, "s1 s2 s1"), BraidWord::parse(3, "s2 s1 s2")));
  const auto a1 = alpha_generator(4, 1), a3 = alpha_generator(4, 3);
  CHECK(braid_equal(a1 * a3, a3 * a1));
  CHECK_FALSE(braid_equal(BraidWord::parse(3, "s1"), BraidWord::parse(3, "s2")));
  CHECK_FALSE(braid_equal(BraidWord::parse(3, "s1^2"), BraidWord::parse(3, "1")));
  CHECK_FALSE(braid_equal(BraidWord::parse(3, "s1^2 s2^2"), BraidWord::parse(3, "s2^2 s1^2")));
  CHECK_THROWS_AS(braid_equal(BraidWord::parse(3, "1"), BraidWord::parse(4, "1")), DomainError);

  SUBCASE("braid relations") {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 6; ++n)
      for (int t = 0; t < 20; ++t) {
        const auto g = random_braid(n, rng, 6);
        for (int i = 1; i <= n - 1; ++i) {
          for (int j = i + 2; j <= n - 1; ++j) {
            const auto lhs = BraidWord::parse(n, "s" + std::to_string(i) + " s" + std::to_string(j));
            const auto rhs = BraidWord::parse(n, "s" + std::to_string(j) + " s" + std::to_string(i));
            CHECK(braid_equal(g * lhs * g.inverse(), g * rhs * g.inverse()));
          }
          if (i + 1 <= n - 1) {
            const std::string a = "s" + std::to_string(i), b = "s" + std::to_string(i + 1);
            CHECK(braid_equal(g * BraidWord::parse(n, a + " " + b + " " + a),
                              g * BraidWord::parse(n, b + " " + a + " " + b)));
          }
        }
        CHECK(braid_equal(g * g.inverse(), BraidWord(n, {})));
      }
  }

  SUBCASE("action agrees with the substitution oracle") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + t % 5;
      const auto b = random_braid(n, rng, 8);
      const auto img = artin_action(b);
      const auto ref = oracle::action(n, raw(b));
      for (int k = 0; k < n; ++k) {
        oracle::IntWord mine;
        for (const Letter& l : img[static_cast<std::size_t>(k)].letters())
          mine.push_back(static_cast<int>(l.gen) * l.sign);
        CHECK(mine == ref[static_cast<std::size_t>(k)]);
      }
    }
  }

  SUBCASE("alpha generators commute") {
    for (int n = 2; n <= 6; ++n)
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
          const auto a = alpha_generator(n, i), b = alpha_generator(n, j);
          CHECK(braid_equal(a * b, b * a));
        }
  }

  SUBCASE("limits") {
    const auto long_word = BraidWord::parse(3, "s1").pow(65);
    CHECK_THROWS_AS(braid_equal(long_word, long_word), ResourceError);
    BraidLimits tight;
    tight.max_image = 50;
    CHECK_THROWS_AS(artin_action(BraidWord::parse(3, "s1 s2^-1").pow(20), tight), ResourceError);
  }
}

TEST_CASE("linking_matrix") {
  CHECK(linking_matrix(BraidWord::parse(2, "s1^2")).at(1, 2) == 1);
  CHECK(linking_matrix(BraidWord::parse(2, "s1^-4")).at(2, 1) == -2);
  CHECK_THROWS_AS(linking_matrix(BraidWord::parse(3, "s1")), DomainError);

  const auto lk = linking_matrix(alpha_generator(4, 1));
  CHECK(lk.at(1, 2) == 1);
  CHECK(lk.at(1, 3) == 1);
  CHECK(lk.at(1, 4) == 1);
  CHECK(lk.at(2, 3) == 0);
  CHECK(lk.at(2, 4) == 0);
  CHECK(lk.at(3, 4) == 0);

  const auto mixed = alpha_generator(4, 1).pow(2) * alpha_generator(4, 3).inverse();
  CHECK(linking_matrix(mixed).last_column() == std::vector<long>{2, 0, -1});

  SUBCASE("agrees with the longitude oracle") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + t % 4;
      const auto b = random_pure(n, rng, 16);
      const auto mine = linking_matrix(b);
      const auto ref = oracle::linking_from_action(n, raw(b));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) CHECK(mine.at(i, j) == ref.at({i, j}));
    }
  }

  SUBCASE("conjugation invariance") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + t % 4;
      const auto b = random_pure(n, rng, 12);
      const auto g = random_pure(n, rng, 12);
      CHECK(linking_matrix(g * b * g.inverse()) == linking_matrix(b));
    }
  }

  SUBCASE("alpha decomposition round trip") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> e(-3, 3);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + t % 5;
      std::vector<long> k(static_cast<std::size_t>(n - 1));
      for (auto& x : k) x = e(rng);
      CHECK(alpha_column(n, k) == k);
    }
  }
}

TEST_CASE("pb_tc_lower_bound") {
  CHECK(pb_tc_lower_bound(2).bound == 1);
  CHECK(pb_tc_lower_bound(3).bound == 3);
  CHECK(pb_tc_lower_bound(4).bound == 5);
  CHECK_THROWS_AS(pb_tc_lower_bound(1), DomainError);

  const auto r = pb_tc_lower_bound(5, 42);
  CHECK(r.bound == 7);
  CHECK(r.certificate.a_generators.size() == 4);
  CHECK(r.certificate.b_generators.size() == 6);
  CHECK(r.certificate.conjugation_samples == 50);
  int verified_steps = 0;
  for (const auto& s : r.certificate.steps) {
    CHECK_FALSE(s.evidence.empty());
    if (s.status == StepStatus::MachineVerified) ++verified_steps;
  }
  CHECK(verified_steps == 5);
}

TEST_SUITE_END();
