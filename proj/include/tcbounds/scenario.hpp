#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcbounds/bounds.hpp"
#include "tcbounds/error.hpp"
#include "tcbounds/report.hpp"

namespace tcb {

/// Malformed input file. `where` is "line:column" for JSON syntax errors and
/// a JSON pointer such as "/edges/1" for schema and domain violations.
class ScenarioError : public DomainError {
 public:
  ScenarioError(const std::string& source, std::string where, const std::string& what)
      : DomainError(source + ":" + where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

enum class ScenarioKind { Raag, Braid, Presentation, Expr, CaseStudy };

const char* to_string(ScenarioKind k);

/// How the pair's certificate is produced; verification happens at run time
/// so a failing check exits with a witness rather than a parse error.
struct CertificateSpec {
  std::string type;  // retraction, split-extension, linking, complementary, semidirect, trusted-chain
  std::optional<Presentation> presentation;
  std::vector<std::uint32_t> a_generators;
  std::vector<std::uint32_t> b_generators;
  std::optional<Alphabet> target;
  bool abelian = false;
  std::vector<Word> images;
  Word beta;
  int n = 0;
  std::string a;
  std::string b;
  std::vector<Step> steps;  // trusted-chain, complementary and semidirect citations
};

struct PairSpec {
  GroupExpr a;
  GroupExpr b;
  CertificateSpec certificate;
};

struct HomSpec {
  Alphabet target;
  std::vector<Word> images;
};

/// A validated input file. Exactly the members matching `kind` are set.
///
///   raag          {"n": 5, "edges": [[1,2], ...]}
///   braid         {"strands": 4, "word": "s1 s2^-1", "other": "..."}
///   presentation  {"generators": [...], "relators": [...],
///                  "hom": {"target": [...], "images": [...]}}
///   expr          {"group": <expr>, "pairs": [{"a", "b", "certificate"}]}
///   case-study    {"case": "higman" | "borromean" | "pbn" | "raag", "n", "graph"}
///
/// A top-level "kind" member overrides detection from the keys.
struct Scenario {
  ScenarioKind kind = ScenarioKind::Raag;
  std::string source;
  std::optional<SimpleGraph> graph;
  std::optional<BraidWord> braid;
  std::optional<BraidWord> other_braid;
  std::optional<Presentation> presentation;
  std::optional<HomSpec> hom;
  std::optional<GroupExpr> group;
  std::vector<PairSpec> pairs;
  std::string case_name;
  int case_n = 0;
};

Scenario parse_scenario(std::string_view text, const std::string& source = "<input>");
/// Reads `path`, or standard input for "-".
Scenario parse_scenario_file(const std::string& path);

GroupExpr expr_from_json(const Json& j, const std::string& source = "<input>");
SimpleGraph graph_from_json(const Json& j, const std::string& source = "<input>");

/// Runs the checks of a certificate spec. Throws VerificationError on failure.
DisjointnessCertificate build_certificate(const CertificateSpec& spec, const CaseOptions& opts);

}  // namespace tcb
