#include "tcbounds/scenario.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>

#include "tcbounds/word_parser.hpp"

namespace tcb {

const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Raag: return "raag";
    case ScenarioKind::Braid: return "braid";
    case ScenarioKind::Presentation: return "presentation";
    case ScenarioKind::Expr: return "expr";
    case ScenarioKind::CaseStudy: return "case-study";
  }
  return "?";
}

namespace {

// Typed access to a parsed document; every failure names its JSON pointer.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw ScenarioError(source_, ptr.empty() ? "/" : ptr, msg);
  }

  const Json& member(const Json& obj, const std::string& ptr, const char* key) const {
    if (!obj.is_object()) fail(ptr, "expected an object");
    if (!obj.contains(key)) fail(ptr, std::string("missing member \"") + key + "\"");
    return obj[key];
  }
  std::string str(const Json& j, const std::string& ptr) const {
    if (!j.is_string()) fail(ptr, "expected a string");
    return j.get<std::string>();
  }
  int integer(const Json& j, const std::string& ptr) const {
    if (!j.is_number_integer()) fail(ptr, "expected an integer");
    const auto v = j.get<long long>();
    if (v < -1'000'000'000 || v > 1'000'000'000) fail(ptr, "integer out of range");
    return static_cast<int>(v);
  }
  std::vector<std::string> strings(const Json& j, const std::string& ptr) const {
    if (!j.is_array()) fail(ptr, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], ptr + "/" + std::to_string(i)));
    return out;
  }

  // Runs a domain constructor, rewrapping its DomainError with the location.
  template <class F>
  auto domain(const std::string& ptr, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const ScenarioError&) {
      throw;
    } catch (const DomainError& e) {
      fail(ptr, e.what());
    }
  }

  Alphabet alphabet(const Json& j, const std::string& ptr) const {
    const auto names = strings(j, ptr);
    return domain(ptr, [&] { return Alphabet(names); });
  }

  Word word(const Json& j, const std::string& ptr, const Alphabet& a) const {
    const std::string text = str(j, ptr);
    return domain(ptr, [&] { return parse_word(text, a); });
  }

  std::vector<Word> words(const Json& j, const std::string& ptr, const Alphabet& a) const {
    if (!j.is_array()) fail(ptr, "expected an array of words");
    std::vector<Word> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(word(j[i], ptr + "/" + std::to_string(i), a));
    return out;
  }

  Presentation presentation(const Json& j, const std::string& ptr) const {
    const auto gens = strings(member(j, ptr, "generators"), ptr + "/generators");
    const auto rels = j.contains("relators") ? strings(j["relators"], ptr + "/relators")
                                             : std::vector<std::string>{};
    const Alphabet a = domain(ptr + "/generators", [&] { return Alphabet(gens); });
    std::vector<Word> words;
    for (std::size_t i = 0; i < rels.size(); ++i)
      words.push_back(domain(ptr + "/relators/" + std::to_string(i),
                             [&] { return parse_word(rels[i], a); }));
    return Presentation(a, std::move(words));
  }

  std::vector<std::uint32_t> generators(const Json& j, const std::string& ptr,
                                        const Alphabet& a) const {
    std::vector<std::uint32_t> out;
    const auto names = strings(j, ptr);
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto g = a.find(names[i]);
      if (!g) fail(ptr + "/" + std::to_string(i), "unknown generator '" + names[i] + "'");
      out.push_back(*g);
    }
    return out;
  }

  SimpleGraph graph(const Json& j, const std::string& ptr) const {
    const int n = integer(member(j, ptr, "n"), ptr + "/n");
    if (n < 1 || n > static_cast<int>(SimpleGraph::kMaxVertices))
      fail(ptr + "/n", "vertex count must be in 1.." + std::to_string(SimpleGraph::kMaxVertices));
    SimpleGraph g(n);
    const Json& edges = member(j, ptr, "edges");
    if (!edges.is_array()) fail(ptr + "/edges", "expected an array of [u, v] pairs");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string e = ptr + "/edges/" + std::to_string(i);
      if (!edges[i].is_array() || edges[i].size() != 2) fail(e, "expected a pair [u, v]");
      const int u = integer(edges[i][0], e + "/0");
      const int v = integer(edges[i][1], e + "/1");
      domain(e, [&] {
        g.add_edge(u, v);
        return 0;
      });
    }
    return g;
  }

  GroupExpr expr(const Json& j, const std::string& ptr) const {
    const std::string type = str(member(j, ptr, "type"), ptr + "/type");
    const auto param = [&](const char* key) {
      return integer(member(j, ptr, key), ptr + "/" + key);
    };
    GroupExpr e = domain(ptr, [&]() -> GroupExpr {
      if (type == "trivial") return GroupExpr::trivial();
      if (type == "free") return GroupExpr::free(param("rank"));
      if (type == "free-abelian") return GroupExpr::free_abelian(param("rank"));
      if (type == "pure-braid") return GroupExpr::pure_braid(param("n"));
      if (type == "bs12") return GroupExpr::bs12();
      if (type == "surface") return GroupExpr::surface(param("genus"));
      if (type == "raag") return GroupExpr::raag(graph(member(j, ptr, "graph"), ptr + "/graph"));
      if (type == "product" || type == "free-product") {
        GroupExpr l = expr(member(j, ptr, "left"), ptr + "/left");
        GroupExpr r = expr(member(j, ptr, "right"), ptr + "/right");
        return type == "product" ? GroupExpr::product(l, r) : GroupExpr::free_product(l, r);
      }
      if (type == "opaque") {
        OpaqueFacts f;
        f.name = str(member(j, ptr, "name"), ptr + "/name");
        const Json& c = member(j, ptr, "chd");
        if (c.is_array() && c.size() == 2) {
          f.chd_lower = integer(c[0], ptr + "/chd/0");
          f.chd_upper = integer(c[1], ptr + "/chd/1");
        } else {
          f.chd_lower = f.chd_upper = integer(c, ptr + "/chd");
        }
        if (j.contains("duality")) f.duality = integer(j["duality"], ptr + "/duality");
        if (j.contains("orientable_pd"))
          f.orientable_pd = integer(j["orientable_pd"], ptr + "/orientable_pd");
        f.citation = str(member(j, ptr, "citation"), ptr + "/citation");
        return GroupExpr::opaque(std::move(f));
      }
      fail(ptr + "/type", "unknown group type '" + type + "'");
    });
    if (j.contains("aspherical_2complex")) {
      const std::string cite = str(j["aspherical_2complex"], ptr + "/aspherical_2complex");
      e = domain(ptr + "/aspherical_2complex", [&] { return e.with_aspherical_2complex(cite); });
    }
    return e;
  }

  std::vector<Step> trusted_steps(const Json& j, const std::string& ptr) const {
    if (!j.is_array() || j.empty()) fail(ptr, "expected a nonempty array of steps");
    std::vector<Step> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = ptr + "/" + std::to_string(i);
      const std::string claim = str(member(j[i], p, "claim"), p + "/claim");
      const std::string cite = str(member(j[i], p, "citation"), p + "/citation");
      if (cite.empty()) fail(p + "/citation", "trusted steps need a citation");
      out.push_back(trusted(claim, cite));
    }
    return out;
  }

  CertificateSpec certificate(const Json& j, const std::string& ptr) const {
    CertificateSpec c;
    c.type = str(member(j, ptr, "type"), ptr + "/type");
    const auto text = [&](const char* key) { return str(member(j, ptr, key), ptr + "/" + key); };
    if (c.type == "retraction" || c.type == "split-extension") {
      c.presentation = presentation(member(j, ptr, "presentation"), ptr + "/presentation");
      c.target = alphabet(member(j, ptr, "target"), ptr + "/target");
      c.images = words(member(j, ptr, "images"), ptr + "/images", *c.target);
      if (c.images.size() != c.presentation->rank())
        fail(ptr + "/images", "need one image per generator");
      const Alphabet& src = c.presentation->alphabet();
      if (c.type == "retraction") {
        c.a_generators = generators(member(j, ptr, "a_generators"), ptr + "/a_generators", src);
        c.b_generators = generators(member(j, ptr, "b_generators"), ptr + "/b_generators", src);
        if (j.contains("abelian")) {
          if (!j["abelian"].is_boolean()) fail(ptr + "/abelian", "expected a boolean");
          c.abelian = j["abelian"].get<bool>();
        }
      } else {
        c.a_generators = generators(Json::array({member(j, ptr, "a")}), ptr + "/a", src);
        c.beta = word(member(j, ptr, "beta"), ptr + "/beta", *c.target);
      }
    } else if (c.type == "linking") {
      c.n = integer(member(j, ptr, "n"), ptr + "/n");
      if (c.n < 2) fail(ptr + "/n", "needs at least 2 strands");
    } else if (c.type == "complementary") {
      c.a = text("a");
      c.b = text("b");
      c.steps = {trusted("A meets B trivially", text("intersection")),
                 trusted("AB = G", text("product"))};
      domain(ptr, [&] { return complementary_certificate(c.a, c.b, c.steps[0].evidence, c.steps[1].evidence); });
    } else if (c.type == "semidirect") {
      c.a = text("a");
      c.b = text("b");
      c.steps = {trusted("G = A x| B", text("citation"))};
      domain(ptr, [&] { return semidirect_certificate(c.a, c.b, c.steps[0].evidence); });
    } else if (c.type == "trusted-chain") {
      c.a = text("a");
      c.b = text("b");
      c.steps = trusted_steps(member(j, ptr, "steps"), ptr + "/steps");
    } else {
      fail(ptr + "/type", "unknown certificate type '" + c.type + "'");
    }
    return c;
  }

 private:
  std::string source_;
};

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

ScenarioKind detect(const Reader& r, const Json& j) {
  if (!j.is_object()) r.fail("", "expected a JSON object");
  if (j.contains("kind")) {
    const std::string k = r.str(j["kind"], "/kind");
    for (auto kind : {ScenarioKind::Raag, ScenarioKind::Braid, ScenarioKind::Presentation,
                      ScenarioKind::Expr, ScenarioKind::CaseStudy})
      if (k == to_string(kind)) return kind;
    r.fail("/kind", "unknown scenario kind '" + k + "'");
  }
  if (j.contains("case")) return ScenarioKind::CaseStudy;
  if (j.contains("edges")) return ScenarioKind::Raag;
  if (j.contains("strands")) return ScenarioKind::Braid;
  if (j.contains("generators")) return ScenarioKind::Presentation;
  if (j.contains("group")) return ScenarioKind::Expr;
  r.fail("", "cannot tell the scenario kind; expected one of the members case, edges, strands, "
             "generators, group");
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ScenarioError(source, line_col(text, e.byte), msg);
  }
  const Reader r(source);
  Scenario s;
  s.source = source;
  s.kind = detect(r, j);
  switch (s.kind) {
    case ScenarioKind::Raag:
      s.graph = r.graph(j, "");
      break;
    case ScenarioKind::Braid: {
      const int n = r.integer(r.member(j, "", "strands"), "/strands");
      const std::string w = r.str(r.member(j, "", "word"), "/word");
      s.braid = r.domain("/word", [&] { return BraidWord::parse(n, w); });
      if (j.contains("other")) {
        const std::string o = r.str(j["other"], "/other");
        s.other_braid = r.domain("/other", [&] { return BraidWord::parse(n, o); });
      }
      break;
    }
    case ScenarioKind::Presentation:
      s.presentation = r.presentation(j, "");
      if (j.contains("hom")) {
        const Json& h = j["hom"];
        Alphabet target = r.alphabet(r.member(h, "/hom", "target"), "/hom/target");
        auto images = r.words(r.member(h, "/hom", "images"), "/hom/images", target);
        if (images.size() != s.presentation->rank())
          r.fail("/hom/images", "need one image per generator");
        s.hom = HomSpec{std::move(target), std::move(images)};
      }
      break;
    case ScenarioKind::Expr: {
      s.group = r.expr(r.member(j, "", "group"), "/group");
      if (j.contains("pairs")) {
        const Json& ps = j["pairs"];
        if (!ps.is_array()) r.fail("/pairs", "expected an array");
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const std::string p = "/pairs/" + std::to_string(i);
          s.pairs.push_back({r.expr(r.member(ps[i], p, "a"), p + "/a"),
                             r.expr(r.member(ps[i], p, "b"), p + "/b"),
                             r.certificate(r.member(ps[i], p, "certificate"), p + "/certificate")});
        }
      }
      break;
    }
    case ScenarioKind::CaseStudy: {
      s.case_name = r.str(j["case"], "/case");
      static const std::set<std::string> known{"higman", "borromean", "pbn", "raag"};
      if (!known.count(s.case_name)) r.fail("/case", "unknown case '" + s.case_name + "'");
      if (s.case_name == "pbn") {
        s.case_n = r.integer(r.member(j, "", "n"), "/n");
        if (s.case_n < 2) r.fail("/n", "needs at least 2 strands");
      }
      if (s.case_name == "raag") s.graph = r.graph(r.member(j, "", "graph"), "/graph");
      break;
    }
  }
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_scenario(text, path == "-" ? "<stdin>" : path);
}

GroupExpr expr_from_json(const Json& j, const std::string& source) {
  return Reader(source).expr(j, "");
}

SimpleGraph graph_from_json(const Json& j, const std::string& source) {
  return Reader(source).graph(j, "");
}

DisjointnessCertificate build_certificate(const CertificateSpec& spec, const CaseOptions& opts) {
  if (spec.type == "retraction")
    return verify_retraction_certificate(*spec.presentation, spec.a_generators, spec.b_generators,
                                         {*spec.target, spec.abelian, spec.images});
  if (spec.type == "split-extension") {
    const HomCheck h = check_hom(*spec.presentation, *spec.target, spec.images);
    if (!h.ok)
      throw VerificationError(
          "p does not respect a relator",
          to_string(spec.presentation->relators()[*h.failing_relator], spec.presentation->alphabet()) +
              " -> " + to_string(h.failing_image, *spec.target));
    return verify_split_extension_certificate(FreeHom(*spec.presentation, *spec.target, spec.images),
                                              spec.a_generators.front(), spec.beta);
  }
  if (spec.type == "linking")
    return linking_certificate(pb_tc_lower_bound(spec.n, opts.seed, opts.braid_limits).certificate);
  if (spec.type == "complementary")
    return complementary_certificate(spec.a, spec.b, spec.steps[0].evidence, spec.steps[1].evidence);
  if (spec.type == "semidirect") return semidirect_certificate(spec.a, spec.b, spec.steps[0].evidence);
  DisjointnessCertificate c;
  c.kind = CertificateKind::TrustedChain;
  c.a_description = spec.a;
  c.b_description = spec.b;
  c.steps = spec.steps;
  return c;
}

}  // namespace tcb
