#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcbounds/freewords.hpp"

namespace tcb {

enum class FactorKind { Free, FreeAbelian };

/// One factor of a free product: F(names) or Z^rank with named generators.
/// Free abelian elements are kept in the canonical form x1^e1 x2^e2 ... .
class Factor {
 public:
  Factor(FactorKind kind, Alphabet names);
  static Factor free(std::vector<std::string> names) {
    return Factor(FactorKind::Free, Alphabet(std::move(names)));
  }
  static Factor free_abelian(std::vector<std::string> names) {
    return Factor(FactorKind::FreeAbelian, Alphabet(std::move(names)));
  }

  FactorKind kind() const { return kind_; }
  std::size_t rank() const { return names_.rank(); }
  const Alphabet& names() const { return names_; }

  Word normalize(const Word& w) const;
  Word multiply(const Word& a, const Word& b) const { return normalize(a * b); }

  /// Nontrivial elements of "size" <= cap, in shortlex order: reduced words of
  /// length <= cap for free factors, exponent vectors with max |e_i| <= cap
  /// for free abelian ones. For rank 1 both give x^e, 1 <= |e| <= cap.
  std::vector<Word> elements_up_to(int cap) const;

 private:
  FactorKind kind_;
  Alphabet names_;
};

/// Nontrivial element of factor 0 or 1.
struct Syllable {
  int factor = 0;
  Word element;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of A * B in syllable normal form: adjacent syllables alternate
/// factors and no syllable is trivial.
class FPWord {
 public:
  FPWord() = default;
  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }
  friend bool operator==(const FPWord&, const FPWord&) = default;

 private:
  friend class FreeProduct;
  std::vector<Syllable> syllables_;
};

/// g = conjugator * core * conjugator^-1 with core cyclically reduced: either
/// at most one syllable or an even number of syllables starting and ending in
/// different factors.
struct CyclicFPWord {
  FPWord core;
  FPWord conjugator;
};

/// Free product of exactly two factors. Iterated products nest.
class FreeProduct {
 public:
  FreeProduct(Factor a, Factor b);

  const Factor& factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }

  /// Merges adjacent same-factor syllables and drops identities. Throws
  /// DomainError when an element is not over its declared factor.
  FPWord normal_form(std::span<const Syllable> raw) const;
  FPWord identity() const { return {}; }
  FPWord syllable(int factor, const Word& element) const;
  FPWord multiply(const FPWord& g, const FPWord& h) const;
  FPWord inverse(const FPWord& g) const;
  FPWord pow(const FPWord& g, long n) const;

  CyclicFPWord cyclic_normal_form(const FPWord& g) const;
  /// Conjugate into A or B, i.e. the cyclic normal form has <= 1 syllable.
  bool is_elliptic(const FPWord& g) const;
  /// Translation length on the Bass-Serre tree: 0 for elliptic elements,
  /// otherwise the syllable count of the cyclic normal form.
  std::size_t hyperbolic_length(const FPWord& g) const;

  /// Words over the union of the factor alphabets, e.g. "y^2 w^-1 y".
  FPWord parse(std::string_view text) const;
  std::string to_string(const FPWord& g) const;
  const Alphabet& joint_alphabet() const { return joint_; }

 private:
  std::array<Factor, 2> factors_;
  Alphabet joint_;
};

}  // namespace tcb
