#include "tcbounds/freeprod.hpp"

#include <algorithm>

#include "tcbounds/error.hpp"
#include "tcbounds/word_parser.hpp"

namespace tcb {

namespace {

Alphabet join(const Alphabet& a, const Alphabet& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  return Alphabet(std::move(names));
}

void extend_words(std::vector<std::vector<Letter>>& layer, std::size_t rank) {
  std::vector<std::vector<Letter>> next;
  for (const auto& w : layer)
    for (std::uint32_t g = 1; g <= rank; ++g)
      for (int s : {1, -1}) {
        const Letter l{g, s};
        if (!w.empty() && w.back().cancels(l)) continue;
        next.push_back(w);
        next.back().push_back(l);
      }
  layer = std::move(next);
}

}  // namespace

Factor::Factor(FactorKind kind, Alphabet names) : kind_(kind), names_(std::move(names)) {
  if (names_.rank() == 0) throw DomainError("free product factors must be nontrivial");
}

Word Factor::normalize(const Word& w) const {
  if (w.rank() != rank()) throw DomainError("element does not lie in its declared factor");
  if (kind_ == FactorKind::Free) return w;
  std::vector<Letter> canon;
  for (std::uint32_t g = 1; g <= rank(); ++g) {
    const long e = exponent_sum(w, g);
    canon.insert(canon.end(), static_cast<std::size_t>(e < 0 ? -e : e), Letter{g, e < 0 ? -1 : 1});
  }
  return Word::reduce(canon, rank());
}

std::vector<Word> Factor::elements_up_to(int cap) const {
  std::vector<Word> out;
  if (cap <= 0) return out;
  if (kind_ == FactorKind::Free) {
    std::vector<std::vector<Letter>> layer{{}};
    for (int len = 1; len <= cap; ++len) {
      extend_words(layer, rank());
      for (const auto& w : layer) out.push_back(Word::reduce(w, rank()));
    }
  } else {
    std::vector<long> e(rank(), -cap);
    for (;;) {
      if (std::any_of(e.begin(), e.end(), [](long x) { return x != 0; })) {
        Word w(rank());
        for (std::uint32_t g = 1; g <= rank(); ++g) w = w * Word::generator(rank(), g, e[g - 1]);
        out.push_back(normalize(w));
      }
      std::size_t i = 0;
      while (i < e.size() && e[i] == cap) e[i++] = -cap;
      if (i == e.size()) break;
      ++e[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FreeProduct::FreeProduct(Factor a, Factor b)
    : factors_{std::move(a), std::move(b)}, joint_(join(factors_[0].names(), factors_[1].names())) {}

FPWord FreeProduct::normal_form(std::span<const Syllable> raw) const {
  FPWord out;
  auto& stack = out.syllables_;
  for (const auto& s : raw) {
    if (s.factor != 0 && s.factor != 1) throw DomainError("syllable factor must be 0 or 1");
    Word e = factor(s.factor).normalize(s.element);
    if (e.empty()) continue;
    if (!stack.empty() && stack.back().factor == s.factor) {
      Word merged = factor(s.factor).multiply(stack.back().element, e);
      if (merged.empty())
        stack.pop_back();
      else
        stack.back().element = std::move(merged);
    } else {
      stack.push_back({s.factor, std::move(e)});
    }
  }
  return out;
}

FPWord FreeProduct::syllable(int f, const Word& element) const {
  const Syllable s{f, element};
  return normal_form(std::span(&s, 1));
}

FPWord FreeProduct::multiply(const FPWord& g, const FPWord& h) const {
  std::vector<Syllable> raw = g.syllables_;
  raw.insert(raw.end(), h.syllables_.begin(), h.syllables_.end());
  return normal_form(raw);
}

FPWord FreeProduct::inverse(const FPWord& g) const {
  FPWord out;
  for (auto it = g.syllables_.rbegin(); it != g.syllables_.rend(); ++it)
    out.syllables_.push_back({it->factor, factor(it->factor).normalize(it->element.inverse())});
  return out;
}

FPWord FreeProduct::pow(const FPWord& g, long n) const {
  const FPWord base = n < 0 ? inverse(g) : g;
  FPWord out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = multiply(out, base);
  return out;
}

CyclicFPWord FreeProduct::cyclic_normal_form(const FPWord& g) const {
  CyclicFPWord out{g, FPWord{}};
  // Conjugating by the first syllable folds it into the last one; each round
  // shortens the word by one or two syllables.
  while (out.core.length() >= 2 &&
         out.core.syllables_.front().factor == out.core.syllables_.back().factor) {
    const FPWord first = syllable(out.core.syllables_.front().factor,
                                  out.core.syllables_.front().element);
    out.core = multiply(multiply(inverse(first), out.core), first);
    out.conjugator = multiply(out.conjugator, first);
  }
  return out;
}

bool FreeProduct::is_elliptic(const FPWord& g) const {
  return cyclic_normal_form(g).core.length() <= 1;
}

std::size_t FreeProduct::hyperbolic_length(const FPWord& g) const {
  const auto len = cyclic_normal_form(g).core.length();
  return len <= 1 ? 0 : len;
}

FPWord FreeProduct::parse(std::string_view text) const {
  const auto letters = parse_letters(text, joint_);
  const auto rank0 = static_cast<std::uint32_t>(factors_[0].rank());
  std::vector<Syllable> raw;
  for (const auto& l : letters) {
    const int f = l.gen <= rank0 ? 0 : 1;
    const Letter local{f == 0 ? l.gen : l.gen - rank0, l.sign};
    const Word w = Word::reduce(std::span(&local, 1), factor(f).rank());
    if (!raw.empty() && raw.back().factor == f)
      raw.back().element = raw.back().element * w;
    else
      raw.push_back({f, w});
  }
  return normal_form(raw);
}

std::string FreeProduct::to_string(const FPWord& g) const {
  if (g.empty()) return "1";
  std::string out;
  for (const auto& s : g.syllables()) {
    if (!out.empty()) out += ' ';
    out += tcb::to_string(s.element, factor(s.factor).names());
  }
  return out;
}

}  // namespace tcb
