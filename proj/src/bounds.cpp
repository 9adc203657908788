#include "tcbounds/bounds.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "tcbounds/error.hpp"
#include "tcbounds/tree_ball.hpp"
#include "tcbounds/word_parser.hpp"

namespace tcb {

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Retraction: return "retraction";
    case CertificateKind::SplitExtension: return "split-extension";
    case CertificateKind::Linking: return "linking";
    case CertificateKind::TrustedChain: return "trusted-chain";
  }
  return "?";
}

bool DisjointnessCertificate::fully_machine_verified() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const Step& s) { return s.status == StepStatus::MachineVerified; });
}

namespace {

std::string subgroup(const Alphabet& names, const std::vector<std::uint32_t>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += names.name(gens[i]);
  }
  return out + ">";
}

bool abelian_trivial(const Word& w) {
  for (std::uint32_t g = 1; g <= w.rank(); ++g)
    if (exponent_sum(w, g) != 0) return false;
  return true;
}

const std::string kTheoremAnchor =
    "TC(G) >= chd(A x B) whenever gAg^-1 meets B trivially for every g in G";

}  // namespace

DisjointnessCertificate verify_retraction_certificate(const Presentation& g,
                                                      const std::vector<std::uint32_t>& a_gens,
                                                      const std::vector<std::uint32_t>& b_gens,
                                                      const RetractionMap& phi) {
  const std::size_t k = phi.target.rank();
  if (phi.images.size() != g.rank())
    throw DomainError("retraction has " + std::to_string(phi.images.size()) +
                      " images for " + std::to_string(g.rank()) + " generators");
  if (b_gens.size() != k)
    throw DomainError("B has " + std::to_string(b_gens.size()) +
                      " generators but the target has rank " + std::to_string(k));
  for (const Word& img : phi.images)
    if (img.rank() != k) throw DomainError("retraction image over the wrong alphabet");
  for (auto gen : a_gens)
    if (gen < 1 || gen > g.rank()) throw DomainError("A generator index out of range");
  for (auto gen : b_gens) {
    if (gen < 1 || gen > g.rank()) throw DomainError("B generator index out of range");
    if (std::find(a_gens.begin(), a_gens.end(), gen) != a_gens.end())
      throw DomainError("generator " + g.alphabet().name(gen) + " lies in both A and B");
  }

  DisjointnessCertificate cert;
  cert.kind = CertificateKind::Retraction;
  cert.a_description = subgroup(g.alphabet(), a_gens);
  cert.b_description = subgroup(g.alphabet(), b_gens);
  const char* target_kind = phi.abelian_target ? "free abelian" : "free";

  for (const Word& r : g.relators()) {
    const Word img = substitute(phi.images, k, r);
    const bool ok = phi.abelian_target ? abelian_trivial(img) : img.empty();
    if (!ok)
      throw VerificationError("retraction does not respect a relator",
                              to_string(r, g.alphabet()) + " -> " + to_string(img, phi.target));
  }
  cert.steps.push_back(verified(
      "phi is a homomorphism onto the " + std::string(target_kind) + " group of rank " +
          std::to_string(k),
      "all " + std::to_string(g.relators().size()) + " relators map to 1"));

  for (std::size_t j = 0; j < k; ++j) {
    const Word& img = phi.images[b_gens[j] - 1];
    if (img != Word::generator(k, static_cast<std::uint32_t>(j + 1)))
      throw VerificationError("retraction is not the identity on B",
                              g.alphabet().name(b_gens[j]) + " -> " + to_string(img, phi.target));
  }
  cert.steps.push_back(verified("phi is the identity on B = " + cert.b_description,
                                "each B generator maps to the matching target generator"));

  if (phi.abelian_target) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const Word x = Word::generator(g.rank(), b_gens[i]);
        const Word y = Word::generator(g.rank(), b_gens[j]);
        const Word c = x * y * x.inverse() * y.inverse();
        if (!g.has_relator_cyclically(c))
          throw VerificationError("B generators are not known to commute",
                                  to_string(c, g.alphabet()));
      }
    cert.steps.push_back(verified("B is abelian",
                                  "every commutator of two B generators is a relator"));
  }

  for (auto gen : a_gens) {
    const Word& img = phi.images[gen - 1];
    if (!(phi.abelian_target ? abelian_trivial(img) : img.empty()))
      throw VerificationError("retraction does not kill A",
                              g.alphabet().name(gen) + " -> " + to_string(img, phi.target));
  }
  cert.steps.push_back(verified("phi kills A = " + cert.a_description,
                                "each A generator maps to 1"));

  cert.steps.push_back(trusted(
      "phi(gAg^-1) = 1 while phi is injective on B, so gAg^-1 meets B trivially",
      "a k-generated group mapping onto a free or free abelian group of rank k is isomorphic "
      "to it (Hopfian property)"));
  return cert;
}

DisjointnessCertificate verify_split_extension_certificate(const FreeHom& p, std::uint32_t a,
                                                           const Word& beta) {
  const Alphabet& src = p.source().alphabet();
  const Alphabet& tgt = p.target();
  if (a < 1 || a > src.rank()) throw DomainError("generator index out of range");
  if (beta.rank() != tgt.rank()) throw DomainError("beta is not over the target alphabet");

  DisjointnessCertificate cert;
  cert.kind = CertificateKind::SplitExtension;
  cert.a_description = "<" + src.name(a) + ">";
  cert.b_description = "p^-1<" + to_string(beta, tgt) + ">";
  cert.steps.push_back(verified("p is a homomorphism onto F(" + std::to_string(tgt.rank()) + ")",
                                "every relator maps to 1 in the free group"));

  const Word& pa = p.image(a);
  if (pa.empty()) throw VerificationError("p(a) is trivial", src.name(a));
  if (beta.empty()) throw VerificationError("beta is trivial", "1");
  cert.steps.push_back(verified("p(" + src.name(a) + ") = " + to_string(pa, tgt) +
                                    " is nontrivial, so it has infinite order",
                                "reduced word is nonempty; free groups are torsion-free"));

  if (powers_conjugate(pa, beta))
    throw VerificationError("nonzero powers of p(a) and beta are conjugate",
                            to_string(pa, tgt) + " ~ " + to_string(beta, tgt));
  for (long m = -4; m <= 4; ++m)
    for (long n = -4; n <= 4; ++n) {
      if (m == 0 || n == 0) continue;
      if (conjugate_in_free(pa.pow(m), beta.pow(n)))
        throw VerificationError("cyclic-word test and power search disagree",
                                to_string(pa.pow(m), tgt) + " ~ " + to_string(beta.pow(n), tgt));
    }
  cert.steps.push_back(verified(
      "conjugates of <p(a)> meet <beta> trivially in the free group",
      "primitive roots are not conjugate up to inversion; powers up to 4 checked directly"));

  cert.steps.push_back(trusted(
      "if x = g a^n g^-1 lies in B then p(x) = 1, so x is in K = ker p; K is normal, hence "
      "a^n is in K, p(a)^n = 1 and n = 0",
      "kernels are normal subgroups; free groups are torsion-free"));
  return cert;
}

DisjointnessCertificate linking_certificate(const LinkingCertificate& braid_data) {
  DisjointnessCertificate cert;
  cert.kind = CertificateKind::Linking;
  const int n = braid_data.n;
  cert.a_description = "<alpha_1..alpha_" + std::to_string(n - 1) + "> in PB_" + std::to_string(n);
  cert.b_description = "PB_" + std::to_string(n - 1) + " on strands 1.." + std::to_string(n - 1);
  cert.steps = braid_data.steps;
  return cert;
}

DisjointnessCertificate complementary_certificate(std::string a, std::string b,
                                                  std::string intersection_citation,
                                                  std::string product_citation) {
  if (intersection_citation.empty() || product_citation.empty())
    throw DomainError("complementary subgroups need citations for A meet B = 1 and AB = G");
  DisjointnessCertificate cert;
  cert.kind = CertificateKind::TrustedChain;
  cert.a_description = std::move(a);
  cert.b_description = std::move(b);
  cert.steps.push_back(trusted("A meets B trivially", std::move(intersection_citation)));
  cert.steps.push_back(trusted("AB = G", std::move(product_citation)));
  cert.steps.push_back(trusted(
      "for g = a'b' the conjugate gAg^-1 meets B in b'(A meet B)b'^-1 = 1",
      "complementary subgroups have conjugate-disjoint pairs"));
  return cert;
}

DisjointnessCertificate semidirect_certificate(std::string a, std::string b, std::string citation) {
  if (citation.empty()) throw DomainError("semidirect product data needs a citation");
  DisjointnessCertificate cert;
  cert.kind = CertificateKind::TrustedChain;
  cert.a_description = std::move(a);
  cert.b_description = std::move(b);
  cert.steps.push_back(trusted("G = A x| B with A normal and A meet B = 1", std::move(citation)));
  cert.steps.push_back(trusted("gAg^-1 = A, so gAg^-1 meets B trivially",
                               "normal complements are conjugation invariant"));
  return cert;
}

namespace {

void validate(const DisjointnessCertificate& c) {
  if (c.steps.empty())
    throw VerificationError("certificate has no justification steps", c.a_description);
  for (const Step& s : c.steps)
    if (s.evidence.empty())
      throw VerificationError(std::string(to_string(s.status)) + " step lacks evidence", s.claim);
}

void add_caveats(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& c : from)
    if (std::find(into.begin(), into.end(), c) == into.end()) into.push_back(c);
}

void finish_upper(BoundReport& r, const GroupExpr& g, const ChdResult& c) {
  const GdResult gd = geometric_dimension(g);
  r.upper = 2 * c.upper;
  r.upper_provenance.push_back(
      {"cat(G x G)", "TC(X) <= cat(X x X) = chd(G x G) <= 2 chd(G)", 2 * c.upper});
  if (gd.upper == c.upper)
    r.upper_provenance.push_back(
        {"dimension", "TC(X) <= 2 dim X for a K(G,1) of dimension gd(G)", 2 * gd.upper});
  add_caveats(r.caveats, gd.caveats);
  add_caveats(r.caveats, c.caveats);
}

}  // namespace

BoundReport tc_report(const GroupExpr& g, const std::vector<CertifiedPair>& pairs) {
  BoundReport r;
  r.group = g.label();
  const ChdResult c = chd(g);
  r.lower = c.lower;
  r.lower_provenance.push_back(
      {"cat = chd", "cat(G) = chd(G) (Eilenberg-Ganea, Stallings-Swan) and cat <= TC", c.lower});
  for (const auto& p : pairs) {
    validate(p.certificate);
    CertificateEntry e{p.a.label(), p.b.label(), chd(GroupExpr::product(p.a, p.b)), p.certificate};
    r.lower_provenance.push_back(
        {"conjugate-disjoint subgroups", kTheoremAnchor, e.product_chd.lower});
    r.lower = std::max(r.lower, e.product_chd.lower);
    add_caveats(r.caveats, e.product_chd.caveats);
    r.certificates.push_back(std::move(e));
  }
  finish_upper(r, g, c);
  if (r.lower > r.upper)
    throw VerificationError("certified lower bound exceeds the upper bound",
                            std::to_string(r.lower) + " > " + std::to_string(r.upper));
  return r;
}

BoundReport free_product_bound(const GroupExpr& g, const GroupExpr& h) {
  const GroupExpr fp = GroupExpr::free_product(g, h);
  BoundReport r;
  r.group = fp.label();
  const ChdResult c = chd(fp);
  const ChdResult prod = chd(GroupExpr::product(g, h));
  r.lower_provenance.push_back(
      {"cat = chd", "cat(G) = chd(G) (Eilenberg-Ganea, Stallings-Swan) and cat <= TC", c.lower});
  r.lower_provenance.push_back(
      {"free product", "TC(G * H) >= chd(G x H): conjugates of G meet H trivially in G * H",
       prod.lower});
  r.lower = std::max(c.lower, prod.lower);
  add_caveats(r.caveats, prod.caveats);
  finish_upper(r, fp, c);
  if (r.lower > r.upper)
    throw VerificationError("certified lower bound exceeds the upper bound",
                            std::to_string(r.lower) + " > " + std::to_string(r.upper));
  return r;
}

namespace {

struct Block {
  std::size_t syllables;
  int start;
  std::size_t count;
};

std::string check_word(const FreeProduct& fp, const FPWord& g, bool& elliptic) {
  const auto [core, conj] = fp.cyclic_normal_form(g);
  elliptic = core.length() <= 1;
  if (elliptic) {
    if (fp.hyperbolic_length(g) != 0) return "elliptic word with positive length";
    const VertexType t = core.syllables().front().factor == 0 ? VertexType::A : VertexType::B;
    const std::array<VertexRef, 2> seeds{VertexRef{conj, t}, VertexRef{fp.multiply(g, conj), t}};
    const TreeBall hull = TreeBall::hull(fp, seeds);
    if (hull.find(fp, seeds[0]) != hull.find(fp, seeds[1])) return "elliptic word fixes no vertex";
    return {};
  }
  const std::size_t len = core.length();
  if (fp.hyperbolic_length(g) != len) return "hyperbolic length differs from core length";
  // Core a1 b1 ... moves w; core b1 a1 ... moves v.
  const VertexType t = core.syllables().front().factor == 0 ? VertexType::B : VertexType::A;
  const std::array<VertexRef, 3> seeds{VertexRef{conj, t},
                                       VertexRef{fp.multiply(g, conj), t},
                                       VertexRef{fp.multiply(fp.pow(g, 2), conj), t}};
  const TreeBall hull = TreeBall::hull(fp, seeds);
  const auto x = hull.find(fp, seeds[0]);
  for (int m = 1; m <= 2; ++m) {
    const auto y = hull.find(fp, seeds[static_cast<std::size_t>(m)]);
    if (!x || !y) return "hull lost a seed vertex";
    if (tree_distance(hull, *x, *y) != static_cast<int>(m * len))
      return "d(g^" + std::to_string(m) + " x, x) != " + std::to_string(m * len);
  }
  return {};
}

}  // namespace

DichotomyReport check_dichotomy(const FreeProduct& fp, int max_syllables, int exponent_cap,
                                Execution exec) {
  if (max_syllables < 1 || exponent_cap < 1)
    throw DomainError("dichotomy check needs max_syllables >= 1 and exponent_cap >= 1");
  const std::array<std::vector<Word>, 2> elems{fp.factor(0).elements_up_to(exponent_cap),
                                               fp.factor(1).elements_up_to(exponent_cap)};
  std::vector<Block> blocks;
  std::size_t total = 0;
  for (std::size_t len = 1; len <= static_cast<std::size_t>(max_syllables); ++len)
    for (int start = 0; start < 2; ++start) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < len; ++i) count *= elems[static_cast<std::size_t>((start + i) % 2)].size();
      blocks.push_back({len, start, count});
      total += count;
    }

  const auto decode = [&](std::size_t index) {
    std::size_t b = 0;
    while (index >= blocks[b].count) index -= blocks[b++].count;
    std::vector<Syllable> raw;
    for (std::size_t i = 0; i < blocks[b].syllables; ++i) {
      const int f = static_cast<int>((static_cast<std::size_t>(blocks[b].start) + i) % 2);
      const auto& pool = elems[static_cast<std::size_t>(f)];
      raw.push_back({f, pool[index % pool.size()]});
      index /= pool.size();
    }
    return fp.normal_form(raw);
  };

  DichotomyReport rep;
  rep.words = total;
  const auto run = [&](std::size_t i, std::size_t& ell, std::size_t& hyp,
                       std::vector<std::string>& fails) {
    const FPWord g = decode(i);
    bool elliptic = false;
    const std::string err = check_word(fp, g, elliptic);
    ++(elliptic ? ell : hyp);
    if (!err.empty()) fails.push_back(fp.to_string(g) + ": " + err);
  };

  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < total; ++i) run(i, rep.elliptic, rep.hyperbolic, rep.failures);
  } else {
    const auto n = static_cast<long long>(total);
#pragma omp parallel
    {
      std::size_t ell = 0, hyp = 0;
      std::vector<std::string> fails;
#pragma omp for schedule(dynamic, 256) nowait
      for (long long i = 0; i < n; ++i) run(static_cast<std::size_t>(i), ell, hyp, fails);
#pragma omp critical(tcb_dichotomy)
      {
        rep.elliptic += ell;
        rep.hyperbolic += hyp;
        rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
      }
    }
  }
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

Presentation higman_presentation() {
  return Presentation::parse({"x", "y", "z", "w"},
                             {"x y x^-1 y^-2", "y z y^-1 z^-2", "z w z^-1 w^-2", "w x w^-1 x^-2"});
}

Presentation borromean_presentation() {
  return Presentation::parse({"a", "b", "c"}, {"[a,[b^-1,c]]", "[b,[c^-1,a]]"});
}

namespace {

std::string describe_image(const Presentation& p, const AbelianInvariants& ab) {
  std::string out = "H_1 = ";
  if (ab.is_trivial()) out += "0";
  if (ab.free_rank > 0)
    out += ab.free_rank == 1 ? "Z" : "Z^" + std::to_string(ab.free_rank);
  for (const auto& d : ab.torsion) out += " + Z/" + d.str();
  out += ";";
  for (std::uint32_t g = 1; g <= p.rank(); ++g)
    out += " " + p.alphabet().name(g) +
           (ab.image(g).is_zero() ? " -> 0"
                                  : ab.image(g).has_infinite_order() ? " infinite order"
                                                                     : " torsion");
  return out;
}

// Sub-presentation check: `survivor` has infinite order in H_1 and every
// generator in `killed` maps to 0.
Step survives_and_dies(const std::vector<std::string>& gens,
                       const std::vector<std::string>& relators, const std::string& survivor,
                       const std::vector<std::string>& killed) {
  const Presentation p = Presentation::parse(gens, relators);
  const AbelianInvariants ab = abelianization(p);
  const std::string group = "H_" + std::accumulate(gens.begin(), gens.end(), std::string());
  if (!ab.image(*p.alphabet().find(survivor)).has_infinite_order())
    throw VerificationError(survivor + " does not survive in the abelianization of " + group,
                            describe_image(p, ab));
  std::string dead;
  for (const auto& k : killed) {
    if (!ab.image(*p.alphabet().find(k)).is_zero())
      throw VerificationError(k + " survives in the abelianization of " + group,
                              describe_image(p, ab));
    dead += (dead.empty() ? "" : ", ") + k;
  }
  return verified("in " + group + " nontrivial powers of " + survivor +
                      " survive in H_1 while " + dead + " map to 0, so no nonzero power of " +
                      survivor + " is conjugate to a power of " + killed.front(),
                  "Smith form of the relator matrix: " + describe_image(p, ab));
}

Step dichotomy_step(const FreeProduct& fp, const std::string& name, const CaseOptions& o) {
  const DichotomyReport d = check_dichotomy(fp, o.higman_syllables, o.higman_cap, o.exec);
  if (!d.ok())
    throw VerificationError("elliptic/hyperbolic dichotomy fails in " + name, d.failures.front());
  return verified(
      "in " + name + " every sampled element not conjugate into a factor is hyperbolic",
      std::to_string(d.words) + " normal forms with <= " + std::to_string(o.higman_syllables) +
          " syllables and exponents up to " + std::to_string(o.higman_cap) + ": " +
          std::to_string(d.elliptic) + " elliptic fix a vertex, " + std::to_string(d.hyperbolic) +
          " hyperbolic move a base vertex by exactly 2km under g^m (m = 1, 2)");
}

}  // namespace

BoundReport higman_case_study(const CaseOptions& opts) {
  std::vector<Step> steps;

  const Presentation p = higman_presentation();
  const AbelianInvariants ab = abelianization(p);
  if (!ab.is_trivial())
    throw VerificationError("Higman group has nontrivial abelianization", describe_image(p, ab));
  steps.push_back(verified("the Higman group is perfect: H_1 = 0",
                           "Smith form of the 4 x 4 relator matrix is the identity"));

  steps.push_back(survives_and_dies({"x", "y", "z"}, {"x y x^-1 y^-2", "y z y^-1 z^-2"}, "x",
                                    {"y", "z"}));
  steps.push_back(survives_and_dies({"w", "x", "y"}, {"w x w^-1 x^-2", "x y x^-1 y^-2"}, "w",
                                    {"x", "y"}));
  steps.push_back(survives_and_dies({"y", "z", "w"}, {"y z y^-1 z^-2", "z w z^-1 w^-2"}, "y",
                                    {"z", "w"}));
  steps.push_back(survives_and_dies({"z", "w", "x"}, {"z w z^-1 w^-2", "w x w^-1 x^-2"}, "z",
                                    {"w", "x"}));

  steps.push_back(dichotomy_step(FreeProduct(Factor::free({"y"}), Factor::free({"w"})),
                                 "F(y) * F(w)", opts));
  steps.push_back(dichotomy_step(FreeProduct(Factor::free({"x"}), Factor::free({"z"})),
                                 "F(x) * F(z)", opts));

  steps.push_back(trusted(
      "in A * B acting on its Bass-Serre tree, an element not conjugate into A or B is "
      "hyperbolic",
      "d(gw, v) = 2k - 1 and d(gw, w) = 2k for g = a1 b1 ... ak bk (Serre, Trees, I.1 and I.6)"));
  steps.push_back(trusted(
      "in an amalgam A *_C B, an element of A conjugate in G to an element of B is conjugate "
      "in G to an element of C",
      "structure theorem for amalgams (Serre, Trees, I.1 Thm 2)"));
  steps.push_back(trusted(
      "in an amalgam A *_C B, an element of A conjugate in G to an element of C is conjugate "
      "in A to an element of C",
      "structure theorem for amalgams (Serre, Trees, I.1 Thm 2)"));
  steps.push_back(trusted(
      "H_xy = <x, y> and H_zw = <z, w> are copies of BS(1,2) inside the Higman group",
      "vertex groups of an amalgam embed (Serre, Trees, I.1 Thm 1)"));
  steps.push_back(trusted(
      "combining the reductions, conjugates of H_xy meet H_zw trivially",
      "both amalgam decompositions H_xyz *_F(x,z) H_zwx and H_yzw *_F(y,w) H_wxy (Higman)"));
  steps.push_back(trusted("the presentation 2-complex of the Higman group is aspherical",
                          "Dyer-Vasquez; gives gd = chd = 2 and TC <= 4"));

  DisjointnessCertificate cert;
  cert.kind = CertificateKind::TrustedChain;
  cert.a_description = "H_xy = <x, y>";
  cert.b_description = "H_zw = <z, w>";
  cert.steps = steps;

  const GroupExpr g =
      GroupExpr::opaque({"Higman group", 2, 2, std::nullopt, std::nullopt,
                         "not free, with an aspherical presentation 2-complex (Dyer-Vasquez)"})
          .with_aspherical_2complex("presentation complex of <x,y,z,w | ...> (Dyer-Vasquez)");
  BoundReport r = tc_report(g, {{GroupExpr::bs12(), GroupExpr::bs12(), cert}});
  r.pipeline = std::move(steps);
  return r;
}

BoundReport borromean_case_study(const CaseOptions&) {
  std::vector<Step> steps;
  const Presentation g = borromean_presentation();
  const auto gen = [&](const char* n) { return Word::generator(3, *g.alphabet().find(n)); };

  const Alphabet fab({"alpha", "beta"});
  const FreeHom p(g, fab, {Word::generator(2, 1), Word::generator(2, 2), Word(2)});
  steps.push_back(verified("p: a -> alpha, b -> beta, c -> 1 is a homomorphism onto F(alpha, beta)",
                           "both relators reduce to 1 under p"));

  const Word beta = Word::generator(2, 2);
  for (long n = -5; n <= 5; ++n)
    if (apply_hom(p, gen("b").pow(n)) != beta.pow(n))
      throw VerificationError("p(b^n) != beta^n", std::to_string(n));
  steps.push_back(verified("p(b^n) = beta^n, so b lies in B = p^-1<beta>",
                           "checked for |n| <= 5"));

  DisjointnessCertificate cert = verify_split_extension_certificate(p, 1, beta);
  steps.insert(steps.end(), cert.steps.begin() + 1, cert.steps.end());

  const Word t = parse_word("[c^-1,a]", g.alphabet());
  if (!apply_hom(p, t).empty())
    throw VerificationError("[c^-1,a] is not in ker p", to_string(apply_hom(p, t), fab));
  const Alphabet fag({"alpha", "gamma"});
  const FreeHom q(g, fag, {Word::generator(2, 1), Word(2), Word::generator(2, 2)});
  const Word qt = apply_hom(q, t);
  if (qt.empty()) throw VerificationError("[c^-1,a] maps to 1 under b -> 1", "q");
  steps.push_back(verified(
      "t = [c^-1,a] lies in B and has infinite order",
      "p(t) = 1; q: a -> alpha, b -> 1, c -> gamma is a homomorphism with q(t) = " +
          to_string(qt, fag) + " != 1"));

  const Word bt = gen("b") * t * gen("b").inverse() * t.inverse();
  if (!g.has_relator_cyclically(bt))
    throw VerificationError("[b, t] is not a relator", to_string(bt, g.alphabet()));
  steps.push_back(verified("b and t commute: [b,[c^-1,a]] is a relator of G",
                           "relator match up to rotation and inversion"));
  steps.push_back(verified(
      "<b, t> is free abelian of rank 2: b^m = t^n forces m = 0 (apply p) and then n = 0 "
      "(apply q)",
      "p(b^m) = beta^m, p(t^n) = 1; q(t^n) = q(t)^n with q(t) nontrivial"));
  steps.push_back(trusted("B contains Z^2, so B is not free and chd(B) = 2",
                          "subgroups of free groups are free (Nielsen-Schreier); chd(B) <= "
                          "chd(G) = 2"));
  cert.steps.insert(cert.steps.end(), steps.end() - 4, steps.end());

  const GroupExpr gexpr =
      GroupExpr::opaque({"Borromean rings group", 2, 2, std::nullopt, std::nullopt,
                         "fundamental group of a hyperbolic link complement, not free"})
          .with_aspherical_2complex(
              "the link complement is a compact aspherical 3-manifold with nonempty boundary, "
              "so it collapses to a 2-complex");
  const GroupExpr b =
      GroupExpr::opaque({"B = p^-1<beta>", 2, 2, std::nullopt, std::nullopt,
                         "contains Z^2 = <b, [c^-1,a]> (machine-checked) and lies in G of chd 2"});
  BoundReport r = tc_report(gexpr, {{GroupExpr::free_abelian(1), b, cert}});
  r.pipeline = std::move(steps);
  return r;
}

BoundReport pure_braid_case_study(int n, const CaseOptions& opts) {
  const PureBraidBound pb = pb_tc_lower_bound(n, opts.seed, opts.braid_limits);
  const GroupExpr a = GroupExpr::free_abelian(n - 1);
  const GroupExpr b = n - 1 >= 2 ? GroupExpr::pure_braid(n - 1) : GroupExpr::trivial();
  BoundReport r = tc_report(GroupExpr::pure_braid(n), {{a, b, linking_certificate(pb.certificate)}});
  r.pipeline = pb.certificate.steps;
  r.annotations.push_back("known value TC(PB_" + std::to_string(n) + ") = " +
                          std::to_string(2 * n - 3) + " (Farber-Yuzvinsky)");
  return r;
}

BoundReport raag_case_study(const SimpleGraph& g, const CaseOptions& opts) {
  const ZResult z = z_number(g, opts.exec);
  const auto& d = z.disjoint_witness;
  const CliquePairBound cpb = clique_pair_bound(g, d.k1, d.k2);

  std::vector<std::string> names;
  for (int v : d.k2) names.push_back("x" + std::to_string(v));
  RetractionMap phi{Alphabet(names), true, cpb.retraction.images};
  std::vector<std::uint32_t> a_gens(d.k1.begin(), d.k1.end());
  std::vector<std::uint32_t> b_gens(d.k2.begin(), d.k2.end());
  const DisjointnessCertificate cert =
      verify_retraction_certificate(raag_presentation(g), a_gens, b_gens, phi);

  BoundReport r = tc_report(GroupExpr::raag(g),
                            {{GroupExpr::free_abelian(static_cast<int>(d.k1.size())),
                              GroupExpr::free_abelian(static_cast<int>(d.k2.size())), cert}});
  const auto set = [](const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  r.pipeline.push_back(verified("z = " + std::to_string(z.z),
                                "maximal clique pair " + set(z.witness.k1) + ", " +
                                    set(z.witness.k2) + "; disjoint form " + set(d.k1) + ", " +
                                    set(d.k2)));
  r.pipeline.insert(r.pipeline.end(), cert.steps.begin(), cert.steps.end());
  r.annotations.push_back("known value TC = z = " + std::to_string(z.z) + " (Cohen-Pruidze)");
  return r;
}

}  // namespace tcb
