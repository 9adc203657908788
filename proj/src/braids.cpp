#include "tcbounds/braids.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tcbounds/error.hpp"
#include "tcbounds/word_parser.hpp"

namespace tcb {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : n_(strands), letters_(std::move(letters)) {
  if (strands < 2) throw DomainError("a braid needs at least 2 strands, got " + std::to_string(strands));
  for (const Letter& l : letters_) {
    if (l.gen < 1 || l.gen > static_cast<std::uint32_t>(strands - 1))
      throw DomainError("s" + std::to_string(l.gen) + " is not a generator of B_" +
                        std::to_string(strands));
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  if (strands < 2) throw DomainError("a braid needs at least 2 strands, got " + std::to_string(strands));
  return BraidWord(strands, parse_letters(text, braid_alphabet(strands)));
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::pow(long k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(n_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_)
    throw DomainError("cannot multiply braids on " + std::to_string(a.n_) + " and " +
                      std::to_string(b.n_) + " strands");
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.n_, std::move(out));
}

Alphabet braid_alphabet(int strands) {
  return Alphabet::numbered("s", static_cast<std::size_t>(std::max(strands - 1, 0)));
}

std::string to_string(const BraidWord& b) {
  if (b.letters().empty()) return "1";
  std::string out;
  for (const Letter& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Permutation permutation(const BraidWord& b) {
  Permutation p(static_cast<std::size_t>(b.strands()));
  std::iota(p.begin(), p.end(), 1);
  for (const Letter& l : b.letters()) std::swap(p[l.gen - 1], p[l.gen]);
  return p;
}

bool is_pure(const BraidWord& b) {
  const Permutation p = permutation(b);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start + 1)) continue;
    out += '(';
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) out += ' ';
      out += std::to_string(cur + 1);
      first = false;
      cur = static_cast<std::size_t>(p[cur] - 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

BraidWord alpha_generator(int n, int j) {
  if (n < 2 || j < 1 || j > n - 1)
    throw DomainError("alpha_" + std::to_string(j) + " is not defined in PB_" + std::to_string(n));
  std::vector<Letter> out;
  for (int i = j; i <= n - 1; ++i) out.push_back({static_cast<std::uint32_t>(i), 1});
  for (int i = n - 1; i >= j; --i) out.push_back({static_cast<std::uint32_t>(i), 1});
  return BraidWord(n, std::move(out));
}

BraidWord pure_generator(int n, int i, int j) {
  if (n < 2 || i < 1 || j <= i || j > n)
    throw DomainError("A_" + std::to_string(i) + "," + std::to_string(j) +
                      " is not defined in PB_" + std::to_string(n));
  std::vector<Letter> out;
  for (int k = j - 1; k > i; --k) out.push_back({static_cast<std::uint32_t>(k), 1});
  out.push_back({static_cast<std::uint32_t>(i), 1});
  out.push_back({static_cast<std::uint32_t>(i), 1});
  for (int k = i + 1; k <= j - 1; ++k) out.push_back({static_cast<std::uint32_t>(k), -1});
  return BraidWord(n, std::move(out));
}

std::vector<Word> artin_action(const BraidWord& b, const BraidLimits& limits) {
  if (b.size() > limits.max_word)
    throw ResourceError("braid word has " + std::to_string(b.size()) +
                        " letters, limit is " + std::to_string(limits.max_word));
  const auto n = static_cast<std::size_t>(b.strands());
  std::vector<Word> img;
  img.reserve(n);
  for (std::uint32_t g = 1; g <= n; ++g) img.push_back(Word::generator(n, g));
  std::size_t total = n;
  // psi' = psi o phi_s: only the images of x_i and x_(i+1) change.
  for (const Letter& l : b.letters()) {
    Word& xi = img[l.gen - 1];
    Word& xj = img[l.gen];
    total -= xi.size() + xj.size();
    if (l.sign > 0) {
      Word next = xi * xj * xi.inverse();
      xj = std::move(xi);
      xi = std::move(next);
    } else {
      Word next = xj.inverse() * xi * xj;
      xi = std::move(xj);
      xj = std::move(next);
    }
    total += xi.size() + xj.size();
    if (total > limits.max_image)
      throw ResourceError("free-group images exceed " + std::to_string(limits.max_image) +
                          " letters");
  }
  return img;
}

bool braid_equal(const BraidWord& u, const BraidWord& v, const BraidLimits& limits) {
  if (u.strands() != v.strands())
    throw DomainError("cannot compare braids on " + std::to_string(u.strands()) + " and " +
                      std::to_string(v.strands()) + " strands");
  if (permutation(u) != permutation(v)) return false;
  return artin_action(u, limits) == artin_action(v, limits);
}

void LinkingMatrix::set(int i, int j, long value) {
  if (i == j) throw DomainError("the linking matrix has a zero diagonal");
  entries_.at(index(i, j)) = value;
  entries_.at(index(j, i)) = value;
}

std::vector<long> LinkingMatrix::last_column() const {
  std::vector<long> out;
  for (int i = 1; i < n_; ++i) out.push_back(at(i, n_));
  return out;
}

std::size_t LinkingMatrix::index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw DomainError("linking index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside 1.." + std::to_string(n_));
  return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
}

LinkingMatrix linking_matrix(const BraidWord& b) {
  if (!is_pure(b)) throw DomainError("linking numbers need a pure braid; permutation is " +
                                     cycle_string(permutation(b)));
  const int n = b.strands();
  std::vector<long> count(static_cast<std::size_t>(n * n), 0);
  std::vector<int> strand_at(static_cast<std::size_t>(n));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (const Letter& l : b.letters()) {
    const int s = strand_at[l.gen - 1];
    const int t = strand_at[l.gen];
    count[static_cast<std::size_t>(std::min(s, t) * n + std::max(s, t))] += l.sign;
    std::swap(strand_at[l.gen - 1], strand_at[l.gen]);
  }
  LinkingMatrix lk(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const long c = count[static_cast<std::size_t>(i * n + j)];
      if (c % 2 != 0) throw std::logic_error("odd crossing count in a pure braid");
      lk.set(i + 1, j + 1, c / 2);
    }
  return lk;
}

namespace {

BraidWord random_pure(int n, std::mt19937_64& rng, int factors) {
  std::uniform_int_distribution<int> pick_i(1, n - 1);
  std::bernoulli_distribution flip(0.5);
  BraidWord out(n, {});
  for (int k = 0; k < factors; ++k) {
    const int i = pick_i(rng);
    std::uniform_int_distribution<int> pick_j(i + 1, n);
    const BraidWord g = pure_generator(n, i, pick_j(rng));
    out = out * (flip(rng) ? g : g.inverse());
  }
  return out;
}

LinkingMatrix add(const LinkingMatrix& a, const LinkingMatrix& b) {
  LinkingMatrix out(a.size());
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  return out;
}

}  // namespace

PureBraidBound pb_tc_lower_bound(int n, std::uint64_t seed, const BraidLimits& limits) {
  if (n < 2) throw DomainError("pure braid bound needs n >= 2, got " + std::to_string(n));
  PureBraidBound out;
  out.bound = (n - 1) + (n - 2);
  auto& cert = out.certificate;
  cert.n = n;
  for (int j = 1; j <= n - 1; ++j) cert.a_generators.push_back(alpha_generator(n, j));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) cert.b_generators.push_back(pure_generator(n, i, j));

  for (std::size_t j = 0; j < cert.a_generators.size(); ++j) {
    const auto& a = cert.a_generators[j];
    if (!is_pure(a))
      throw VerificationError("alpha generator is not pure", to_string(a));
    std::vector<long> unit(static_cast<std::size_t>(n - 1), 0);
    unit[j] = 1;
    if (linking_matrix(a).last_column() != unit)
      throw VerificationError("alpha generator has the wrong last linking column", to_string(a));
  }
  cert.steps.push_back(verified("each alpha_j is a pure braid",
                                "permutation of each alpha_j is the identity"));
  cert.steps.push_back(verified(
      "the last linking column of alpha_j is the unit vector e_j",
      "linking_matrix(alpha_j) for j = 1.." + std::to_string(n - 1)));

  for (std::size_t i = 0; i < cert.a_generators.size(); ++i)
    for (std::size_t j = i + 1; j < cert.a_generators.size(); ++j) {
      const auto& a = cert.a_generators[i];
      const auto& b = cert.a_generators[j];
      if (!braid_equal(a * b, b * a, limits))
        throw VerificationError("alpha generators do not commute",
                                to_string(a) + " | " + to_string(b));
    }
  cert.steps.push_back(verified("the alpha_j commute pairwise",
                                "braid_equal on every pair via the Artin action on F_" +
                                    std::to_string(n)));
  cert.steps.push_back(verified(
      "A = <alpha_1..alpha_(n-1)> is free abelian of rank n-1",
      "A is abelian and the last linking column maps it onto Z^(n-1) with alpha_j -> e_j"));

  for (const auto& b : cert.b_generators) {
    const auto col = linking_matrix(b).last_column();
    if (std::any_of(col.begin(), col.end(), [](long x) { return x != 0; }))
      throw VerificationError("a generator of PB_(n-1) links the last strand", to_string(b));
  }
  cert.steps.push_back(verified(
      "every generator A_ij (i < j <= n-1) of B = PB_(n-1) has zero last linking column",
      "linking_matrix on " + std::to_string(cert.b_generators.size()) + " generators"));

  if (n >= 3) {
    std::mt19937_64 rng(seed);
    constexpr std::size_t kSamples = 50;
    for (std::size_t s = 0; s < kSamples; ++s) {
      const BraidWord b = random_pure(n, rng, 3);
      const BraidWord c = random_pure(n, rng, 3);
      const BraidWord g = random_pure(n, rng, 2);
      const LinkingMatrix lb = linking_matrix(b);
      if (linking_matrix(g * b * g.inverse()) != lb)
        throw VerificationError("linking numbers changed under conjugation",
                                to_string(g) + " | " + to_string(b));
      if (linking_matrix(b * c) != add(lb, linking_matrix(c)))
        throw VerificationError("linking numbers are not additive", to_string(b) + " | " + to_string(c));
    }
    cert.conjugation_samples = kSamples;
  }
  cert.steps.push_back(trusted(
      "linking numbers of closures are additive on PB_n and invariant under conjugation, "
      "so an element of B conjugate into A has zero linking column and is trivial",
      "closures of conjugate pure braids are isotopic ordered links; " +
          std::to_string(cert.conjugation_samples) + " random pure conjugations agreed"));
  cert.steps.push_back(trusted("chd(PB_(n-1)) = n-2 and chd(Z^(n-1) x PB_(n-1)) = 2n-3",
                               "Fadell-Neuwirth fibrations; products of duality groups"));
  return out;
}

}  // namespace tcb
