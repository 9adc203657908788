#include "tcbounds/freewords.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tcbounds/error.hpp"

namespace tcb {

namespace {

void check_index(const Letter& l, std::size_t rank) {
  if (l.gen == 0 || l.gen > rank)
    throw DomainError("generator index " + std::to_string(l.gen) +
                      " outside rank " + std::to_string(rank));
  if (l.sign != 1 && l.sign != -1)
    throw DomainError("letter sign must be +1 or -1");
}

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().cancels(l))
    out.pop_back();
  else
    out.push_back(l);
}

// Knuth-Morris-Pratt occurrence test of `needle` in `hay`.
bool contains(std::span<const Letter> hay, std::span<const Letter> needle) {
  if (needle.empty()) return true;
  std::vector<std::size_t> fail(needle.size(), 0);
  for (std::size_t i = 1, k = 0; i < needle.size(); ++i) {
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < hay.size(); ++i) {
    while (k > 0 && hay[i] != needle[k]) k = fail[k - 1];
    if (hay[i] == needle[k]) ++k;
    if (k == needle.size()) return true;
  }
  return false;
}

bool is_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  std::vector<Letter> doubled(a.letters().begin(), a.letters().end());
  doubled.insert(doubled.end(), a.letters().begin(), a.letters().end());
  return contains(doubled, b.letters());
}

}  // namespace

Word Word::reduce(std::span<const Letter> raw, std::size_t rank) {
  Word w(rank);
  w.letters_.reserve(raw.size());
  for (const auto& l : raw) {
    check_index(l, rank);
    push_reduced(w.letters_, l);
  }
  return w;
}

Word Word::generator(std::size_t rank, std::uint32_t gen, long power) {
  Word w(rank);
  const Letter l{gen, power < 0 ? -1 : 1};
  check_index(l, rank);
  w.letters_.assign(static_cast<std::size_t>(power < 0 ? -power : power), l);
  return w;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(long n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out(rank_);
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_)
    throw DomainError("cannot multiply words of rank " +
                      std::to_string(a.rank_) + " and " +
                      std::to_string(b.rank_));
  Word w = a;
  w.letters_.reserve(a.size() + b.size());
  for (const auto& l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

CyclicReduction cyclically_reduce(const Word& w) {
  const auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word::reduce(letters.subspan(lo, hi - lo), w.rank()),
          Word::reduce(letters.subspan(0, lo), w.rank())};
}

bool conjugate_in_free(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) return false;
  return is_rotation(cyclically_reduce(u).core, cyclically_reduce(v).core);
}

long exponent_sum(const Word& w, std::uint32_t gen) {
  if (gen == 0 || gen > w.rank())
    throw DomainError("generator index " + std::to_string(gen) +
                      " outside rank " + std::to_string(w.rank()));
  long s = 0;
  for (const auto& l : w.letters())
    if (l.gen == gen) s += l.sign;
  return s;
}

Word primitive_root(const Word& core) {
  const auto n = core.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i)
      periodic = core[i] == core[i - p];
    if (periodic) return Word::reduce(core.letters().subspan(0, p), core.rank());
  }
  return core;
}

bool powers_conjugate(const Word& u, const Word& v) {
  if (u.empty() || v.empty() || u.rank() != v.rank()) return false;
  // In a free group u^m ~ v^n with m, n != 0 forces the maximal cyclic
  // subgroups to be conjugate, i.e. the primitive roots agree up to rotation
  // and inversion.
  const Word ru = primitive_root(cyclically_reduce(u).core);
  const Word rv = primitive_root(cyclically_reduce(v).core);
  return conjugate_in_free(ru, rv) || conjugate_in_free(ru, rv.inverse());
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty generator name");
    if (!seen.insert(n).second)
      throw DomainError("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::numbered(std::string_view prefix, std::size_t rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i)
    names.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i + 1);
  return std::nullopt;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long e = static_cast<long>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet.name(letters[i].gen);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace tcb
