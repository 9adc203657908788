#include "tcbounds/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "tcbounds/scenario.hpp"
#include "tcbounds/tree_ball.hpp"

namespace tcb {

namespace {

struct Globals {
  bool json = false;
  bool serial = false;
  std::size_t max_ball = TreeBall::kDefaultMaxVertices;
  std::size_t max_word = BraidLimits{}.max_word;
  std::uint64_t seed = 1;

  Execution exec() const { return serial ? Execution::Serial : Execution::Parallel; }
  BraidLimits braid_limits() const {
    BraidLimits l;
    l.max_word = max_word;
    return l;
  }
  CaseOptions case_options() const {
    CaseOptions o;
    o.exec = exec();
    o.seed = seed;
    o.braid_limits = braid_limits();
    return o;
  }
};

Json set_json(const VertexSet& s) { return Json(s); }

Json graph_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Json gd_json(const GdResult& g) {
  return Json{{"lower", g.lower}, {"upper", g.upper}, {"caveats", g.caveats}};
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(); }

Json linking_json(const LinkingMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::string image_string(const AbelianImage& img) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : img.free) {
    out += (first ? "" : ", ") + v.str();
    first = false;
  }
  for (const auto& v : img.torsion) {
    out += (first ? "" : ", ") + v.str();
    first = false;
  }
  return out + ")";
}

Json abel_json(const Presentation& p) {
  const AbelianInvariants ab = abelianization(p);
  Json torsion = Json::array();
  for (const auto& d : ab.torsion) torsion.push_back(d.str());
  Json images = Json::array();
  for (std::uint32_t g = 1; g <= p.rank(); ++g) {
    const AbelianImage& img = ab.image(g);
    images.push_back({{"generator", p.alphabet().name(g)},
                      {"coordinates", image_string(img)},
                      {"order", img.is_zero() ? "trivial"
                                : img.has_infinite_order() ? "infinite"
                                                           : "finite"}});
  }
  return Json{{"free_rank", ab.free_rank},
              {"torsion", torsion},
              {"trivial", ab.is_trivial()},
              {"generator_images", images}};
}

std::vector<std::string> relator_strings(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators()) out.push_back(to_string(r, p.alphabet()));
  return out;
}

Scenario expect(const std::string& path, ScenarioKind kind) {
  Scenario s = parse_scenario_file(path);
  if (s.kind != kind)
    throw DomainError(path + ": expected a " + std::string(to_string(kind)) + " scenario, got " +
                      to_string(s.kind));
  return s;
}

FreeProduct product_from_flags(const std::string& left, const std::string& right, bool left_ab,
                               bool right_ab) {
  const auto names = [](const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv + ",") {
      if (c == ',') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    return out;
  };
  const auto factor = [&](const std::string& csv, bool ab) {
    return ab ? Factor::free_abelian(names(csv)) : Factor::free(names(csv));
  };
  return FreeProduct(factor(left, left_ab), factor(right, right_ab));
}

BoundReport case_report(const std::string& name, const std::vector<std::string>& args,
                        const Globals& g) {
  const CaseOptions o = g.case_options();
  const auto want = [&](std::size_t n) {
    if (args.size() != n + 1)
      throw DomainError("--case " + name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (name == "higman") {
    want(0);
    return higman_case_study(o);
  }
  if (name == "borromean") {
    want(0);
    return borromean_case_study(o);
  }
  if (name == "pbn") {
    want(1);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(args[1], &used);
      if (used != args[1].size()) throw std::invalid_argument(args[1]);
    } catch (const std::logic_error&) {
      throw DomainError("--case pbn expects an integer, got '" + args[1] + "'");
    }
    return pure_braid_case_study(n, o);
  }
  if (name == "raag") {
    want(1);
    return raag_case_study(*expect(args[1], ScenarioKind::Raag).graph, o);
  }
  throw DomainError("unknown case '" + name + "' (higman, borromean, pbn <n>, raag <file>)");
}

BoundReport scenario_report(const Scenario& s, const Globals& g) {
  if (s.kind == ScenarioKind::CaseStudy) {
    if (s.case_name == "raag") return raag_case_study(*s.graph, g.case_options());
    if (s.case_name == "pbn") return pure_braid_case_study(s.case_n, g.case_options());
    return case_report(s.case_name, {s.case_name}, g);
  }
  if (s.kind != ScenarioKind::Expr)
    throw DomainError(s.source + ": tc-report needs an expr or case-study scenario, got " +
                      to_string(s.kind));
  std::vector<CertifiedPair> pairs;
  for (const auto& p : s.pairs)
    pairs.push_back({p.a, p.b, build_certificate(p.certificate, g.case_options())});
  return tc_report(*s.group, pairs);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified lower and upper bounds for topological complexity of groups",
               "tcbounds"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit the JSON document instead of text");
  app.add_flag("--serial", g.serial, "Use the serial reference kernels");
  app.add_option("--max-ball", g.max_ball, "Vertex cap for Bass-Serre tree balls")
      ->capture_default_str();
  app.add_option("--max-word", g.max_word, "Letter cap for input braid words")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled property checks")->capture_default_str();

  Json doc;
  std::string raw;  // non-JSON output (DOT)

  // raag
  auto* raag = app.add_subcommand("raag", "Right-angled Artin groups")->require_subcommand(1);
  std::string graph_file;
  auto* raag_z = raag->add_subcommand("z", "z(G), witness pair and TC interval");
  raag_z->add_option("file", graph_file, "Graph JSON {\"n\": .., \"edges\": [[u, v], ..]}")
      ->required();
  raag_z->callback([&] {
    const SimpleGraph gr = *expect(graph_file, ScenarioKind::Raag).graph;
    const ZResult z = z_number(gr, g.exec());
    doc = envelope("raag z");
    doc["graph"] = graph_json(gr);
    doc["z"] = z.z;
    doc["clique_number"] = clique_number(gr);
    doc["witness"] = {{"k1", set_json(z.witness.k1)}, {"k2", set_json(z.witness.k2)}};
    doc["disjoint_witness"] = {{"k1", set_json(z.disjoint_witness.k1)},
                               {"k2", set_json(z.disjoint_witness.k2)}};
    doc["report"] = to_json(raag_case_study(gr, g.case_options()));
  });
  std::vector<int> k1, k2;
  auto* raag_bound = raag->add_subcommand("bound", "Certified bound |K1| + |K2| for disjoint cliques");
  raag_bound->add_option("file", graph_file, "Graph JSON")->required();
  raag_bound->add_option("--k1", k1, "First clique, e.g. 1,2")->delimiter(',');
  raag_bound->add_option("--k2", k2, "Second clique, e.g. 3,4")->delimiter(',')->required();
  raag_bound->callback([&] {
    const SimpleGraph gr = *expect(graph_file, ScenarioKind::Raag).graph;
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    const CliquePairBound b = clique_pair_bound(gr, k1, k2);
    std::vector<std::string> names;
    for (int v : k2) names.push_back("x" + std::to_string(v));
    const DisjointnessCertificate cert = verify_retraction_certificate(
        raag_presentation(gr), {k1.begin(), k1.end()}, {k2.begin(), k2.end()},
        {Alphabet(names), true, b.retraction.images});
    doc = envelope("raag bound");
    doc["graph"] = graph_json(gr);
    doc["k1"] = set_json(k1);
    doc["k2"] = set_json(k2);
    doc["bound"] = b.bound;
    doc["report"] = to_json(tc_report(
        GroupExpr::raag(gr), {{GroupExpr::free_abelian(static_cast<int>(k1.size())),
                               GroupExpr::free_abelian(static_cast<int>(k2.size())), cert}}));
  });

  // braid
  auto* braid = app.add_subcommand("braid", "Braid words and pure braid bounds")->require_subcommand(1);
  int strands = 0;
  std::string word, other, braid_file;
  const auto braid_input = [&](CLI::App* sub, bool two) {
    sub->add_option("--n", strands, "Number of strands");
    sub->add_option("--file", braid_file, "Braid scenario JSON");
    sub->add_option("word", word, "Braid word such as \"s1 s2^-1\"");
    if (two) sub->add_option("other", other, "Second braid word");
  };
  const auto load_braids = [&](bool two) {
    if (!braid_file.empty()) {
      Scenario s = expect(braid_file, ScenarioKind::Braid);
      if (two && !s.other_braid) throw DomainError(braid_file + ": missing \"other\" braid");
      return std::pair{*s.braid, two ? *s.other_braid : *s.braid};
    }
    if (strands == 0) throw DomainError("give --n <strands> or --file");
    BraidWord a = BraidWord::parse(strands, word);
    BraidWord b = two ? BraidWord::parse(strands, other) : a;
    return std::pair{a, b};
  };
  const auto check_length = [&](const BraidWord& b) {
    if (b.size() > g.max_word)
      throw ResourceError("braid word has " + std::to_string(b.size()) + " letters; --max-word is " +
                          std::to_string(g.max_word));
  };
  auto* perm = braid->add_subcommand("perm", "Induced permutation");
  braid_input(perm, false);
  perm->callback([&] {
    const BraidWord b = load_braids(false).first;
    check_length(b);
    const Permutation p = permutation(b);
    doc = envelope("braid perm");
    doc["strands"] = b.strands();
    doc["word"] = to_string(b);
    doc["permutation"] = p;
    doc["cycles"] = cycle_string(p);
    doc["pure"] = is_pure(b);
  });
  auto* lk = braid->add_subcommand("lk", "Pairwise linking numbers of a pure braid");
  braid_input(lk, false);
  lk->callback([&] {
    const BraidWord b = load_braids(false).first;
    check_length(b);
    doc = envelope("braid lk");
    doc["strands"] = b.strands();
    doc["word"] = to_string(b);
    doc["linking_matrix"] = linking_json(linking_matrix(b));
  });
  auto* eq = braid->add_subcommand("equal", "Equality in the braid group");
  braid_input(eq, true);
  eq->callback([&] {
    const auto [a, b] = load_braids(true);
    check_length(a);
    check_length(b);
    doc = envelope("braid equal");
    doc["strands"] = a.strands();
    doc["left"] = to_string(a);
    doc["right"] = to_string(b);
    doc["equal"] = braid_equal(a, b, g.braid_limits());
  });
  int tc_n = 0;
  auto* tcb = braid->add_subcommand("tc-bound", "Certified TC(PB_n) >= 2n - 3");
  tcb->add_option("--n", tc_n, "Number of strands")->required();
  tcb->callback([&] {
    const BoundReport r = pure_braid_case_study(tc_n, g.case_options());
    doc = envelope("braid tc-bound");
    doc["n"] = tc_n;
    doc["bound"] = r.lower;
    doc["report"] = to_json(r);
  });

  // pres
  auto* pres = app.add_subcommand("pres", "Finite presentations")->require_subcommand(1);
  std::string pres_file;
  auto* abel = pres->add_subcommand("abel", "Abelianization via Smith normal form");
  abel->add_option("file", pres_file, "Presentation JSON")->required();
  abel->callback([&] {
    const Presentation p = *expect(pres_file, ScenarioKind::Presentation).presentation;
    doc = envelope("pres abel");
    doc["generators"] = p.alphabet().names();
    doc["relators"] = relator_strings(p);
    doc["abelianization"] = abel_json(p);
  });
  auto* hom = pres->add_subcommand("hom-check", "Check a map to a free group is a homomorphism");
  hom->add_option("file", pres_file, "Presentation JSON with a \"hom\" member")->required();
  hom->callback([&] {
    const Scenario s = expect(pres_file, ScenarioKind::Presentation);
    if (!s.hom) throw DomainError(pres_file + ": missing \"hom\" member");
    const Presentation& p = *s.presentation;
    const HomCheck h = check_hom(p, s.hom->target, s.hom->images);
    doc = envelope("pres hom-check");
    doc["generators"] = p.alphabet().names();
    doc["target"] = s.hom->target.names();
    Json images = Json::array();
    for (const auto& w : s.hom->images) images.push_back(to_string(w, s.hom->target));
    doc["images"] = images;
    doc["homomorphism"] = h.ok;
    if (!h.ok) {
      doc["failing_relator"] = to_string(p.relators()[*h.failing_relator], p.alphabet());
      doc["failing_image"] = to_string(h.failing_image, s.hom->target);
    }
  });

  // chd
  std::string expr_file;
  auto* chd_cmd = app.add_subcommand("chd", "Cohomological and geometric dimension of a group expression");
  chd_cmd->add_option("file", expr_file, "Expression JSON {\"group\": {...}}")->required();
  chd_cmd->callback([&] {
    const GroupExpr e = *expect(expr_file, ScenarioKind::Expr).group;
    doc = envelope("chd");
    doc["group"] = e.label();
    doc["chd"] = to_json(chd(e));
    doc["gd"] = gd_json(geometric_dimension(e));
    doc["duality_dimension"] = optional_int(is_duality(e));
    doc["orientable_pd_dimension"] = optional_int(is_orientable_pd(e));
  });

  // tree
  auto* tree = app.add_subcommand("tree", "Bass-Serre tree of a free product")->require_subcommand(1);
  std::string left = "a", right = "b";
  bool left_ab = false, right_ab = false, dot = false;
  int ball_radius = 2, lemma_radius = 10, cap = 2, max_k = 4;
  const auto tree_flags = [&](CLI::App* sub, int& radius) {
    sub->add_option("--left", left, "Generators of the first factor, comma separated")
        ->capture_default_str();
    sub->add_option("--right", right, "Generators of the second factor")->capture_default_str();
    sub->add_flag("--left-abelian", left_ab, "First factor is free abelian");
    sub->add_flag("--right-abelian", right_ab, "Second factor is free abelian");
    sub->add_option("--radius", radius, "Ball radius around the base edge")->capture_default_str();
    sub->add_option("--cap", cap, "Syllable size cap")->capture_default_str();
  };
  auto* ball = tree->add_subcommand("ball", "Ball around the base edge");
  tree_flags(ball, ball_radius);
  ball->add_flag("--dot", dot, "Print the ball in DOT format");
  ball->callback([&] {
    const FreeProduct fp = product_from_flags(left, right, left_ab, right_ab);
    const TreeBall b = TreeBall::build(fp, ball_radius, cap, g.max_ball);
    if (dot) {
      raw = to_dot(b, fp);
      return;
    }
    doc = envelope("tree ball");
    doc["left"] = fp.factor(0).names().names();
    doc["right"] = fp.factor(1).names().names();
    doc["radius"] = ball_radius;
    doc["cap"] = cap;
    doc["vertices"] = b.size();
    doc["edges"] = b.edges().size();
    doc["is_tree"] = b.is_tree();
  });
  auto* lemma = tree->add_subcommand("verify-lemma", "Check d(gw, v) = 2k - 1 and d(gw, w) = 2k");
  tree_flags(lemma, lemma_radius);
  lemma->add_option("--k", max_k, "Largest k in g = a1 b1 ... ak bk")->capture_default_str();
  lemma->callback([&] {
    const FreeProduct fp = product_from_flags(left, right, left_ab, right_ab);
    if (2 * max_k > lemma_radius)
      throw DomainError("--radius must be at least 2k = " + std::to_string(2 * max_k));
    const TreeBall b = TreeBall::build(fp, lemma_radius, cap, g.max_ball);
    const DistanceLemmaReport r = verify_distance_lemma(fp, b, max_k, cap, g.exec());
    doc = envelope("tree verify-lemma");
    doc["left"] = fp.factor(0).names().names();
    doc["right"] = fp.factor(1).names().names();
    doc["radius"] = lemma_radius;
    doc["cap"] = cap;
    doc["max_k"] = max_k;
    doc["ball_vertices"] = b.size();
    doc["words_checked"] = r.words_checked;
    doc["outside_ball"] = r.outside_ball;
    doc["failures"] = r.failures;
    doc["ok"] = r.ok();
  });

  // tc-report
  auto* report = app.add_subcommand("tc-report", "Certified TC interval for a scenario or built-in case");
  std::vector<std::string> case_args;
  std::string scenario_file;
  report->add_option("--case", case_args, "higman | borromean | pbn <n> | raag <graph file>")
      ->expected(1, 2);
  report->add_option("file", scenario_file, "Scenario JSON");
  report->callback([&] {
    if (case_args.empty() == scenario_file.empty())
      throw DomainError("tc-report takes either --case or a scenario file");
    const BoundReport r = case_args.empty()
                              ? scenario_report(parse_scenario_file(scenario_file), g)
                              : case_report(case_args[0], case_args, g);
    doc = envelope("tc-report");
    doc["report"] = to_json(r);
  });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return kVerification;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (!raw.empty()) {
    out << raw;
    return kOk;
  }
  validate_report_json(doc);
  if (g.json)
    out << doc.dump(2) << "\n";
  else
    out << render_text(doc);

  if (doc.contains("homomorphism") && !doc["homomorphism"].get<bool>()) {
    err << "verification failed: relator not sent to 1\nwitness: "
        << doc["failing_relator"].get<std::string>() << " -> "
        << doc["failing_image"].get<std::string>() << "\n";
    return kVerification;
  }
  if (doc.contains("ok") && !doc["ok"].get<bool>()) {
    err << "verification failed: distance lemma check\n";
    if (!doc["failures"].empty()) err << "witness: " << doc["failures"][0].get<std::string>() << "\n";
    return kVerification;
  }
  return kOk;
}

}  // namespace tcb
