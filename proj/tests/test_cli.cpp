#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tcbounds/cli.hpp"
#include "tcbounds/scenario.hpp"

using namespace tcb;

namespace {

const std::string kData = TCB_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("scenario detection") {
  const Scenario b = parse_scenario_file(kData + "/borromean.json");
  CHECK(b.kind == ScenarioKind::Presentation);
  CHECK(b.presentation->rank() == 3);
  CHECK(b.presentation->relators().size() == 2);
  CHECK(b.hom.has_value());

  const Scenario e = parse_scenario(R"({"n":3,"edges":[]})");
  CHECK(e.kind == ScenarioKind::Raag);
  CHECK(e.graph->vertex_count() == 3);
  CHECK(e.graph->edge_count() == 0);

  const Scenario br = parse_scenario(R"({"strands":3,"word":"s1 s2","other":"s2 s1"})");
  CHECK(br.kind == ScenarioKind::Braid);
  CHECK(br.other_braid->size() == 2);

  CHECK(parse_scenario_file(kData + "/pb4_case.json").case_n == 4);
  CHECK(parse_scenario_file(kData + "/borromean_report.json").pairs.size() == 1);
  CHECK(parse_scenario(R"({"kind":"expr","group":{"type":"bs12"}})").kind == ScenarioKind::Expr);
}

TEST_CASE("scenario errors carry locations") {
  try {
    parse_scenario("{\"n\": 3,\n \"edges\": [[1,2],", "t.json");
    FAIL("accepted truncated input");
  } catch (const ScenarioError& e) {
    CHECK(e.where() == "2:18");  // just past the last character
  }
  const auto where = [](const std::string& text) {
    try {
      parse_scenario(text);
    } catch (const ScenarioError& e) {
      return e.where();
    }
    return std::string("accepted");
  };
  CHECK(where(R"({"n":3,"edges":[[1,2],[2,2]]})") == "/edges/1");
  CHECK(where(R"({"n":3,"edges":[[1,2],[2]]})") == "/edges/1");
  CHECK(where(R"({"n":3,"edges":[[1,"x"]]})") == "/edges/0/1");
  CHECK(where(R"({"n":0,"edges":[]})") == "/n");
  CHECK(where(R"({"generators":["a","a"],"relators":[]})") == "/generators");
  CHECK(where(R"({"generators":["a"],"relators":["a b"]})") == "/relators/0");
  CHECK(where(R"({"group":{"type":"product","left":{"type":"free"},"right":{"type":"bs12"}}})") ==
        "/group/left");
  CHECK(where(R"({"group":{"type":"klein"}})") == "/group/type");
  CHECK(where(R"({"group":{"type":"opaque","name":"X","chd":2,"citation":""}})") == "/group");
  CHECK(where(R"({"strands":3,"word":"s3"})") == "/word");
  CHECK(where(R"({"case":"nope"})") == "/case");
  CHECK(where(R"([1,2])") == "/");
  CHECK(where(R"({"x":1})") == "/");
}

TEST_CASE("run examples") {
  const Json hig = run_json({"tc-report", "--case", "higman"});
  CHECK(hig["report"]["lower"] == 4);
  CHECK(hig["report"]["upper"] == 4);

  const Json k5 = run_json({"raag", "z", kData + "/k5.json"});
  CHECK(k5["z"] == 5);
  CHECK(k5["report"]["lower"] == 5);

  const Json pb = run_json({"braid", "tc-bound", "--n", "5"});
  CHECK(pb["bound"] == 7);

  const Json bor = run_json({"tc-report", "--case", "borromean"});
  CHECK(bor["report"]["lower"] == 3);
  CHECK(bor["report"]["upper"] == 4);

  const Json file = run_json({"tc-report", kData + "/borromean_report.json"});
  CHECK(file["report"]["lower"] == 3);
  CHECK(file["report"]["upper"] == 4);

  const Json pb4 = run_json({"tc-report", kData + "/pb4_case.json"});
  CHECK(pb4["report"]["lower"] == 5);
  CHECK(pb4["report"]["upper"] == 6);

  const Json comp = run_json({"tc-report", kData + "/z2_complementary.json"});
  CHECK(comp["report"]["lower"] == 2);

  const Json chd = run_json({"chd", kData + "/bs_product.json"});
  CHECK(chd["chd"]["lower"] == 4);
  CHECK(chd["chd"]["exact"] == true);

  const Json ab = run_json({"pres", "abel", kData + "/higman.json"});
  CHECK(ab["abelianization"]["trivial"] == true);

  const Json hc = run_json({"pres", "hom-check", kData + "/borromean.json"});
  CHECK(hc["homomorphism"] == true);

  const Json perm = run_json({"braid", "perm", "--n", "3", "s1 s2"});
  CHECK(perm["cycles"] == "(1 2 3)");
  CHECK(perm["pure"] == false);

  const Json lk = run_json({"braid", "lk", "--n", "3", "s1^2"});
  CHECK(lk["linking_matrix"][0][1] == 1);

  const Json eq = run_json({"braid", "equal", "--n", "3", "s1 s2 s1", "s2 s1 s2"});
  CHECK(eq["equal"] == true);

  const Json bound = run_json({"raag", "bound", kData + "/path4.json", "--k1", "1,2", "--k2", "3,4"});
  CHECK(bound["bound"] == 4);
  CHECK(bound["report"]["lower"] == 4);

  const Json ball = run_json({"tree", "ball", "--radius", "2", "--cap", "1"});
  CHECK(ball["vertices"] == 14);
  CHECK(ball["is_tree"] == true);

  const Json lemma = run_json({"tree", "verify-lemma", "--k", "2", "--radius", "4"});
  CHECK(lemma["ok"] == true);
  CHECK(lemma["words_checked"] == 16 + 256);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kUsage);
  CHECK(run({"raag"}).code == kUsage);
  CHECK(run({"raag", "z", "/nonexistent.json"}).code == kUsage);
  CHECK(run({"braid", "lk", "--n", "3", "s1"}).code == kUsage);  // not pure
  CHECK(run({"tc-report", "--case", "pbn", "x"}).code == kUsage);
  CHECK(run({"tc-report"}).code == kUsage);
  CHECK(run({"raag", "bound", kData + "/path4.json", "--k1", "1,2", "--k2", "2,3"}).code == kUsage);
  CHECK(run({"--max-ball", "50", "tree", "ball", "--radius", "4"}).code == kResource);
  CHECK(run({"--max-word", "3", "braid", "perm", "--n", "3", "s1 s2 s1 s2"}).code == kResource);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("verification failures exit 2 with a witness") {
  const std::string dir = TCB_TEST_TMP;
  const std::string bad_hom = dir + "/bad_hom.json";
  {
    std::ofstream f(bad_hom);
    f << R"({"generators":["a","b"],"relators":["a b a^-1 b^-2"],
             "hom":{"target":["u"],"images":["1","u"]}})";
  }
  const Run r = run({"pres", "hom-check", bad_hom});
  CHECK(r.code == kVerification);
  CHECK(r.err.find("witness: a b a^-1 b^-2 -> u^-1") != std::string::npos);

  const std::string bad_split = dir + "/bad_split.json";
  {
    std::ofstream f(bad_split);
    f << R"({"group":{"type":"free","rank":2},
             "pairs":[{"a":{"type":"free","rank":1},"b":{"type":"free","rank":1},
               "certificate":{"type":"split-extension",
                 "presentation":{"generators":["a","b"],"relators":[]},
                 "target":["u","v"],"images":["u","v"],"a":"a","beta":"u^2"}}]})";
  }
  const Run s = run({"tc-report", bad_split});
  CHECK(s.code == kVerification);
  CHECK(s.err.find("witness:") != std::string::npos);
}

TEST_CASE("reports round trip and are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "tc-report", "--case", "pbn", "4"},
           {"--json", "tc-report", "--case", "raag", kData + "/k5.json"},
           {"--json", "tc-report", "--case", "borromean"},
           {"--json", "raag", "z", kData + "/path4.json"},
           {"--json", "chd", kData + "/bs_product.json"}}) {
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const Json doc = Json::parse(a.out);
    CHECK_NOTHROW(validate_report_json(doc));
    CHECK(doc.dump(2) + "\n" == a.out);

    // Text output is rendered from the same document.
    std::vector<std::string> text_args(args.begin() + 1, args.end());
    CHECK(run(text_args).out == render_text(doc));
  }
  // Serial and parallel kernels give byte-identical reports.
  CHECK(run({"--json", "raag", "z", kData + "/k5.json"}).out ==
        run({"--json", "--serial", "raag", "z", kData + "/k5.json"}).out);
}

TEST_CASE("schema validation rejects tampered reports") {
  const Json good = run_json({"tc-report", "--case", "borromean"});
  const auto rejects = [&](const std::string& ptr, const Json& value) {
    Json bad = good;
    bad[Json::json_pointer(ptr)] = value;
    CHECK_THROWS_AS(validate_report_json(bad), DomainError);
  };
  rejects("/schema", "tcbounds/0");
  rejects("/report/lower", 5);
  rejects("/report/exact", true);
  rejects("/report/upper", 3);
  rejects("/report/lower_provenance/0/anchor", "");
  rejects("/report/certificates/0/steps/0/status", "believed");
  rejects("/report/certificates/0/steps", Json::array());
  rejects("/report/caveats", Json::array({1}));
  Json missing = good;
  missing["report"].erase("upper_provenance");
  CHECK_THROWS_AS(validate_report_json(missing), DomainError);
}

TEST_SUITE_END();
