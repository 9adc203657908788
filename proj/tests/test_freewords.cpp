#include <random>

#include "doctest.h"
#include "oracles/free_group_oracle.hpp"
#include "tcbounds/error.hpp"
#include "tcbounds/freewords.hpp"
#include "tcbounds/word_parser.hpp"

using namespace tcb;

namespace {

const Alphabet kAb({"a", "b"});
const Alphabet kXy({"x", "y"});

Word ab(std::string_view s) { return parse_word(s, kAb); }
Word xy(std::string_view s) { return parse_word(s, kXy); }

}  // namespace

TEST_SUITE_BEGIN("freewords");

TEST_CASE("reduce") {
  CHECK(xy("x x^-1").empty());
  CHECK(ab("a b b^-1 a") == ab("a^2"));
  CHECK(xy("x^-1 x y") == xy("y"));

  SUBCASE("index out of range") {
    const std::vector<Letter> raw{{3, 1}};
    CHECK_THROWS_AS(Word::reduce(raw, 2), DomainError);
    const std::vector<Letter> zero{{0, 1}};
    CHECK_THROWS_AS(Word::reduce(zero, 2), DomainError);
  }

  SUBCASE("rank zero is the trivial group") {
    const Word e = Word::reduce({}, 0);
    CHECK(e.empty());
    CHECK(e.rank() == 0);
  }
}

TEST_CASE("cyclically_reduce") {
  auto [core, conj] = cyclically_reduce(xy("x y x^-1"));
  CHECK(core == xy("y"));
  CHECK(conj == xy("x"));

  auto r2 = cyclically_reduce(ab("a b"));
  CHECK(r2.core == ab("a b"));
  CHECK(r2.conjugator.empty());

  const Alphabet xab({"x", "a", "b"});
  auto r3 = cyclically_reduce(parse_word("x^-1 a b x", xab));
  CHECK(r3.core == parse_word("a b", xab));
  CHECK(r3.conjugator == parse_word("x^-1", xab));
}

TEST_CASE("conjugate_in_free") {
  CHECK(conjugate_in_free(ab("a b"), ab("b a")));
  CHECK_FALSE(conjugate_in_free(ab("a"), ab("b")));
  CHECK(conjugate_in_free(ab("1"), ab("a a^-1")));
  CHECK_FALSE(conjugate_in_free(ab("1"), ab("a")));

  // alpha^m ~ beta^n only for m = n = 0.
  const Alphabet ab2({"alpha", "beta"});
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      const bool c = conjugate_in_free(Word::generator(2, 1, m), Word::generator(2, 2, n));
      CHECK(c == (m == 0 && n == 0));
    }
}

TEST_CASE("exponent_sum") {
  const Word r = xy("x y x^-1 y^-2");
  CHECK(exponent_sum(r, 2) == -1);
  CHECK(exponent_sum(r, 1) == 0);
  CHECK(exponent_sum(r * r.inverse(), 1) == 0);
  CHECK_THROWS_AS(exponent_sum(r, 3), DomainError);
}

TEST_CASE("primitive roots and powers") {
  CHECK(primitive_root(ab("a b a b a b")) == ab("a b"));
  CHECK(primitive_root(ab("a b a")) == ab("a b a"));
  CHECK(powers_conjugate(ab("a b"), ab("b a b a")));
  CHECK(powers_conjugate(ab("a b"), ab("b^-1 a^-1")));
  CHECK_FALSE(powers_conjugate(ab("a"), ab("b")));
  CHECK_FALSE(powers_conjugate(ab("a"), ab("1")));
  CHECK_FALSE(powers_conjugate(ab("a b"), ab("a b^-1")));
}

TEST_CASE("parser") {
  CHECK(ab("[a,b]") == ab("a b a^-1 b^-1"));
  CHECK(ab("(a b)^-2") == ab("b^-1 a^-1 b^-1 a^-1"));
  CHECK(ab("a*b") == ab("a b"));
  CHECK(ab("") == ab("1"));
  CHECK(to_string(ab("a a b^-1 a"), kAb) == "a^2 b^-1 a");
  CHECK(to_string(ab("1"), kAb) == "1");
  CHECK_THROWS_AS(ab("a c"), DomainError);
  CHECK_THROWS_AS(ab("[a b"), DomainError);
  CHECK_THROWS_AS(ab("a^"), DomainError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), DomainError);
}

TEST_CASE("properties") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const auto raw = oracle::random_letters(rng, 3, 12);
    const Word w = Word::reduce(raw, 3);
    // idempotence
    CHECK(Word::reduce(w.letters(), 3) == w);
    CHECK((w * w.inverse()).empty());

    const Word u = oracle::random_word(rng, 3, 8);
    for (std::uint32_t g = 1; g <= 3; ++g)
      CHECK(exponent_sum(u * w, g) == exponent_sum(u, g) + exponent_sum(w, g));

    // w = conj core conj^-1 and core is cyclically reduced
    const auto [core, conj] = cyclically_reduce(w);
    CHECK(conj * core * conj.inverse() == w);
    if (core.size() >= 2) CHECK_FALSE(core.front().cancels(core.back()));

    CHECK(conjugate_in_free(w, w));
    CHECK(conjugate_in_free(w, u * w * u.inverse()));
    CHECK(conjugate_in_free(u, w) == conjugate_in_free(w, u));
  }
}

TEST_CASE("conjugacy agrees with conjugator search") {
  // Conjugators of length <= 6 suffice for words of length <= 6: with
  // u = c U c^-1, v = d V d^-1 and V a rotation of U, a conjugator of length
  // at most |c| + |d| + |U|/2 <= 6 exists.
  const auto conjugators = oracle::all_reduced_words(2, 6);
  std::mt19937 rng(77);
  int positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = oracle::random_word(rng, 2, 6);
    Word v = oracle::random_word(rng, 2, 6);
    if (trial % 2 == 0) {
      const Word g = oracle::random_word(rng, 2, 2);
      const Word c = g * u * g.inverse();
      if (c.size() <= 6) v = c;
    }
    const bool fast = conjugate_in_free(u, v);
    positives += fast;
    CHECK(fast == oracle::conjugate_by_search(u, v, conjugators));
  }
  CHECK(positives > 20);
}

TEST_SUITE_END();
