#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcb {

/// One letter of a word: generator index (1-based) raised to +1 or -1.
struct Letter {
  std::uint32_t gen = 1;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  bool cancels(const Letter& o) const { return gen == o.gen && sign == -o.sign; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group of rank `rank()`. The empty word is
/// the identity; rank 0 is the trivial group.
///
/// Every constructor reduces, so a Word can never hold x x^-1.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  /// Freely reduce `raw`. Throws DomainError when a generator index is 0 or
  /// exceeds `rank`.
  static Word reduce(std::span<const Letter> raw, std::size_t rank);
  /// gen^power as a reduced word.
  static Word generator(std::size_t rank, std::uint32_t gen, long power = 1);

  std::size_t rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  Word inverse() const;
  Word pow(long n) const;
  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  /// Shortlex order; used for deterministic tie-breaks.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

CyclicReduction cyclically_reduce(const Word& w);

/// Decides conjugacy in the free group: the cyclic reductions must be cyclic
/// rotations of one another. Linear time via a doubled-word search.
bool conjugate_in_free(const Word& u, const Word& v);

/// Signed number of occurrences of generator `gen`.
long exponent_sum(const Word& w, std::uint32_t gen);

/// Shortest r with core == r^k for a cyclically reduced core. Returns the
/// empty word for the empty input.
Word primitive_root(const Word& core);

/// True iff some nonzero powers of u and v are conjugate, i.e. the conjugates
/// of <u> meet <v> nontrivially. Both trivial subgroups meet nothing.
bool powers_conjugate(const Word& u, const Word& v);

/// Names for generators 1..rank. Index 0 of `names` is generator 1.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  /// "s1".."s<rank>" style alphabets.
  static Alphabet numbered(std::string_view prefix, std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::uint32_t gen) const { return names_.at(gen - 1); }
  std::optional<std::uint32_t> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// "a b^-1 a^2"; the empty word prints as "1".
std::string to_string(const Word& w, const Alphabet& alphabet);

}  // namespace tcb
