#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tcbounds/certificate.hpp"
#include "tcbounds/freewords.hpp"

namespace tcb {

/// A word in the Artin generators s1..s(n-1) of the braid group B_n. Letters
/// reuse Letter with gen = i for sigma_i. Unlike Word, a BraidWord keeps its
/// spelling: s1 s1^-1 stays two letters.
class BraidWord {
 public:
  /// Throws DomainError when n < 2 or an index is outside 1..n-1.
  BraidWord(int strands, std::vector<Letter> letters);
  /// "s1 s2^-1 s3^2", with the word grammar; "1" is the empty braid.
  static BraidWord parse(int strands, std::string_view text);

  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  BraidWord inverse() const;
  BraidWord pow(long k) const;
  /// Concatenation; throws DomainError on a strand-count mismatch.
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  /// Spelling equality. Use braid_equal() for equality in B_n.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_ = 2;
  std::vector<Letter> letters_;
};

/// Alphabet s1..s(n-1).
Alphabet braid_alphabet(int strands);
std::string to_string(const BraidWord& b);

/// perm[p-1] is the starting position of the strand that ends at position p.
/// permutation(u * v) = permutation(u) o permutation(v).
using Permutation = std::vector<int>;

Permutation permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);
/// Cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "()".
std::string cycle_string(const Permutation& p);

/// s_j s_(j+1) ... s_(n-1) s_(n-1) ... s_(j+1) s_j.
BraidWord alpha_generator(int n, int j);
/// The standard pure braid generator A_ij (1 <= i < j <= n):
/// s_(j-1) ... s_(i+1) s_i^2 s_(i+1)^-1 ... s_(j-1)^-1.
BraidWord pure_generator(int n, int i, int j);

struct BraidLimits {
  std::size_t max_word = 64;            // letters per input braid
  std::size_t max_image = 1'000'000;    // total letters across the n images
};

/// Images of x1..xn under the automorphism of F_n induced by b, with
/// s_i: x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i. Throws ResourceError when
/// a limit is exceeded.
std::vector<Word> artin_action(const BraidWord& b, const BraidLimits& limits = {});

/// Equality in B_n, decided by comparing the two free-group automorphisms
/// (the action is faithful). Throws DomainError when the strand counts differ.
bool braid_equal(const BraidWord& u, const BraidWord& v, const BraidLimits& limits = {});

/// Symmetric n x n matrix with zero diagonal. lk(i, j) is the linking number
/// of closure components i and j, 1-based.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), 0) {}

  int size() const { return n_; }
  long at(int i, int j) const { return entries_.at(index(i, j)); }
  void set(int i, int j, long value);
  /// (lk(1,n), ..., lk(n-1,n)).
  std::vector<long> last_column() const;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;
  int n_;
  std::vector<long> entries_;
};

/// Half the signed crossing count of each strand pair. Throws DomainError for
/// braids that are not pure.
LinkingMatrix linking_matrix(const BraidWord& b);

/// Data for the lower bound TC(PB_n) >= 2n - 3, with A = <alpha_1..alpha_(n-1)>
/// and B = PB_(n-1) on the first n-1 strands.
struct LinkingCertificate {
  int n = 2;
  std::vector<BraidWord> a_generators;
  std::vector<BraidWord> b_generators;
  std::vector<Step> steps;
  std::size_t conjugation_samples = 0;
};

struct PureBraidBound {
  int bound = 0;  // (n-1) + (n-2)
  LinkingCertificate certificate;
};

/// Runs the machine checks behind the certificate. Throws DomainError for
/// n < 2 and VerificationError if a check fails.
PureBraidBound pb_tc_lower_bound(int n, std::uint64_t seed = 1, const BraidLimits& limits = {});

}  // namespace tcb
