#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcbounds/braids.hpp"
#include "tcbounds/certificate.hpp"
#include "tcbounds/freeprod.hpp"
#include "tcbounds/groupexpr.hpp"
#include "tcbounds/parallel.hpp"
#include "tcbounds/presentations.hpp"
#include "tcbounds/raag.hpp"

namespace tcb {

enum class CertificateKind { Retraction, SplitExtension, Linking, TrustedChain };

const char* to_string(CertificateKind k);

/// Evidence that gAg^-1 meets B trivially for every g in G. Steps are in
/// proof order; machine-verified steps were checked when the certificate was
/// built.
struct DisjointnessCertificate {
  CertificateKind kind = CertificateKind::TrustedChain;
  std::string a_description;
  std::string b_description;
  std::vector<Step> steps;

  bool fully_machine_verified() const;
};

/// A homomorphism from G onto B, given by generator images in the free or
/// free abelian group on target.rank() generators.
struct RetractionMap {
  Alphabet target;
  bool abelian_target = false;
  std::vector<Word> images;  // one per generator of G
};

/// Checks: every relator maps to 1; the i-th B generator maps to the i-th
/// target generator; every A generator maps to 1; for an abelian target the
/// B generators commute in G (their commutators are relators). Throws
/// VerificationError naming the first failure.
DisjointnessCertificate verify_retraction_certificate(const Presentation& g,
                                                      const std::vector<std::uint32_t>& a_gens,
                                                      const std::vector<std::uint32_t>& b_gens,
                                                      const RetractionMap& phi);

/// A = <a>, B = p^-1<beta> for a split surjection p onto a free group.
/// Checks p(a) != 1, beta != 1, and that no nonzero powers of p(a) and beta
/// are conjugate (decided by cyclic words, cross-checked by brute force on
/// small powers). Throws VerificationError on failure.
DisjointnessCertificate verify_split_extension_certificate(const FreeHom& p, std::uint32_t a,
                                                           const Word& beta);

DisjointnessCertificate linking_certificate(const LinkingCertificate& braid_data);

/// A and B complementary (A meet B = 1 and AB = G), supplied as cited data.
DisjointnessCertificate complementary_certificate(std::string a, std::string b,
                                                  std::string intersection_citation,
                                                  std::string product_citation);
/// G = A x| B with A normal and A meet B = 1.
DisjointnessCertificate semidirect_certificate(std::string a, std::string b,
                                               std::string citation);

struct Provenance {
  std::string rule;
  std::string anchor;
  int value = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct CertifiedPair {
  GroupExpr a;
  GroupExpr b;
  DisjointnessCertificate certificate;
};

struct CertificateEntry {
  std::string a_label;
  std::string b_label;
  ChdResult product_chd;
  DisjointnessCertificate certificate;
};

struct BoundReport {
  std::string group;
  int lower = 0;
  int upper = 0;
  std::vector<Provenance> lower_provenance;
  std::vector<Provenance> upper_provenance;
  std::vector<std::string> caveats;
  std::vector<std::string> annotations;  // cited known values, never used as bounds
  std::vector<Step> pipeline;            // case-study checks, in order
  std::vector<CertificateEntry> certificates;

  bool exact() const { return lower == upper; }
};

/// lower = max(chd G, chd(A x B) over the certified pairs); upper = 2 gd(G).
/// Throws VerificationError when a certificate is empty or a trusted step
/// lacks a citation, and when the bounds cross.
BoundReport tc_report(const GroupExpr& g, const std::vector<CertifiedPair>& pairs);

/// Lower bound chd(G x H) for G * H, with the usual cat and dimension bounds.
BoundReport free_product_bound(const GroupExpr& g, const GroupExpr& h);

/// Outcome of the elliptic/hyperbolic dichotomy check on every normal form
/// of a free product with at most max_syllables syllables, exponents
/// 1..exponent_cap in absolute value.
struct DichotomyReport {
  std::size_t words = 0;
  std::size_t elliptic = 0;
  std::size_t hyperbolic = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  friend bool operator==(const DichotomyReport&, const DichotomyReport&) = default;
};

/// Elliptic words must fix the vertex their conjugator names; hyperbolic
/// words g with core a1 b1 ... ak bk must satisfy d(g^m x, x) = 2km for
/// m = 1, 2 on a suitable base vertex x. Requires rank-1 factors.
DichotomyReport check_dichotomy(const FreeProduct& fp, int max_syllables, int exponent_cap,
                                Execution exec = Execution::Parallel);

struct CaseOptions {
  Execution exec = Execution::Parallel;
  std::uint64_t seed = 1;
  BraidLimits braid_limits;
  int higman_syllables = 8;
  int higman_cap = 2;
};

BoundReport higman_case_study(const CaseOptions& opts = {});
BoundReport borromean_case_study(const CaseOptions& opts = {});
BoundReport pure_braid_case_study(int n, const CaseOptions& opts = {});
BoundReport raag_case_study(const SimpleGraph& g, const CaseOptions& opts = {});

/// The presentations used by the case studies.
Presentation higman_presentation();
Presentation borromean_presentation();

}  // namespace tcb
