#include "tcbounds/report.hpp"

#include <algorithm>
#include <sstream>

#include "tcbounds/error.hpp"

namespace tcb {

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json to_json(const Step& s) {
  return Json{{"claim", s.claim}, {"status", to_string(s.status)}, {"evidence", s.evidence}};
}

Json to_json(const ChdResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"rule", t.rule},
                     {"anchor", t.anchor},
                     {"subject", t.subject},
                     {"lower", t.lower},
                     {"upper", t.upper}});
  return Json{{"lower", r.lower},
              {"upper", r.upper},
              {"exact", r.exact()},
              {"trace", trace},
              {"caveats", r.caveats}};
}

namespace {

Json steps_json(const std::vector<Step>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back(to_json(s));
  return out;
}

Json provenance_json(const std::vector<Provenance>& ps) {
  Json out = Json::array();
  for (const auto& p : ps)
    out.push_back({{"rule", p.rule}, {"anchor", p.anchor}, {"value", p.value}});
  return out;
}

}  // namespace

Json to_json(const DisjointnessCertificate& c) {
  return Json{{"kind", to_string(c.kind)},
              {"a", c.a_description},
              {"b", c.b_description},
              {"fully_machine_verified", c.fully_machine_verified()},
              {"steps", steps_json(c.steps)}};
}

Json to_json(const BoundReport& r) {
  Json certs = Json::array();
  for (const auto& e : r.certificates) {
    Json c = to_json(e.certificate);
    c["a_group"] = e.a_label;
    c["b_group"] = e.b_label;
    c["chd_a_x_b"] = to_json(e.product_chd);
    certs.push_back(std::move(c));
  }
  return Json{{"group", r.group},
              {"lower", r.lower},
              {"upper", r.upper},
              {"exact", r.exact()},
              {"lower_provenance", provenance_json(r.lower_provenance)},
              {"upper_provenance", provenance_json(r.upper_provenance)},
              {"caveats", r.caveats},
              {"annotations", r.annotations},
              {"pipeline", steps_json(r.pipeline)},
              {"certificates", certs}};
}

namespace {

class Checker {
 public:
  explicit Checker(const Json& root) : root_(root) {}

  const Json& at(const std::string& ptr) const {
    const Json::json_pointer p(ptr);
    if (!root_.contains(p)) fail(ptr, "missing");
    return root_.at(p);
  }
  const Json& object(const std::string& ptr) const { return typed(ptr, &Json::is_object, "object"); }
  const Json& array(const std::string& ptr) const { return typed(ptr, &Json::is_array, "array"); }
  const Json& string(const std::string& ptr) const { return typed(ptr, &Json::is_string, "string"); }
  const Json& integer(const std::string& ptr) const {
    return typed(ptr, &Json::is_number_integer, "integer");
  }
  const Json& boolean(const std::string& ptr) const {
    return typed(ptr, &Json::is_boolean, "boolean");
  }
  void nonempty(const std::string& ptr) const {
    if (string(ptr).get<std::string>().empty()) fail(ptr, "must not be empty");
  }
  void strings(const std::string& ptr) const {
    const Json& a = array(ptr);
    for (std::size_t i = 0; i < a.size(); ++i) string(ptr + "/" + std::to_string(i));
  }
  void steps(const std::string& ptr) const {
    const Json& a = array(ptr);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string s = ptr + "/" + std::to_string(i);
      nonempty(s + "/claim");
      nonempty(s + "/evidence");
      const auto status = string(s + "/status").get<std::string>();
      if (status != to_string(StepStatus::MachineVerified) &&
          status != to_string(StepStatus::Trusted))
        fail(s + "/status", "unknown status '" + status + "'");
    }
  }
  void interval(const std::string& ptr) const {
    const long lo = integer(ptr + "/lower").get<long>();
    const long hi = integer(ptr + "/upper").get<long>();
    if (lo < 0 || lo > hi) fail(ptr, "lower must satisfy 0 <= lower <= upper");
    if (boolean(ptr + "/exact").get<bool>() != (lo == hi)) fail(ptr + "/exact", "inconsistent");
  }
  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw DomainError("report schema: " + (ptr.empty() ? std::string("/") : ptr) + ": " + msg);
  }

 private:
  const Json& typed(const std::string& ptr, bool (Json::*pred)() const noexcept,
                    const char* what) const {
    const Json& j = at(ptr);
    if (!(j.*pred)()) fail(ptr, std::string("expected ") + what);
    return j;
  }
  const Json& root_;
};

}  // namespace

void validate_report_json(const Json& doc) {
  const Checker c(doc);
  if (!doc.is_object()) c.fail("", "expected object");
  if (c.string("/schema").get<std::string>() != kSchema) c.fail("/schema", "unsupported schema");
  c.nonempty("/command");
  if (!doc.contains("report")) return;

  c.object("/report");
  c.nonempty("/report/group");
  c.interval("/report");
  for (const char* side : {"/report/lower_provenance", "/report/upper_provenance"}) {
    const Json& ps = c.array(side);
    if (ps.empty()) c.fail(side, "needs at least one entry");
    long best = -1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string p = std::string(side) + "/" + std::to_string(i);
      c.nonempty(p + "/rule");
      c.nonempty(p + "/anchor");
      const long v = c.integer(p + "/value").get<long>();
      best = std::string(side) == "/report/lower_provenance" ? std::max(best, v)
                                                             : (best < 0 ? v : std::min(best, v));
    }
    const char* bound = std::string(side) == "/report/lower_provenance" ? "/report/lower"
                                                                          : "/report/upper";
    if (best != c.integer(bound).get<long>()) c.fail(bound, "does not match its provenance");
  }
  c.strings("/report/caveats");
  c.strings("/report/annotations");
  c.steps("/report/pipeline");
  const Json& certs = c.array("/report/certificates");
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const std::string p = "/report/certificates/" + std::to_string(i);
    c.nonempty(p + "/kind");
    c.string(p + "/a");
    c.string(p + "/b");
    c.nonempty(p + "/a_group");
    c.nonempty(p + "/b_group");
    c.boolean(p + "/fully_machine_verified");
    c.steps(p + "/steps");
    if (c.array(p + "/steps").empty()) c.fail(p + "/steps", "certificate without steps");
    c.interval(p + "/chd_a_x_b");
    c.strings(p + "/chd_a_x_b/caveats");
    const Json& trace = c.array(p + "/chd_a_x_b/trace");
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const std::string t = p + "/chd_a_x_b/trace/" + std::to_string(k);
      c.nonempty(t + "/rule");
      c.nonempty(t + "/anchor");
    }
  }
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), is_scalar);
}

bool numeric_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
}

void render(std::ostream& out, const Json& obj, int indent);

void render_value(std::ostream& out, const std::string& key, const Json& v, std::size_t width,
                  int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(v)) {
    out << pad << key << std::string(width - key.size() + 2, ' ') << scalar(v) << '\n';
  } else if (numeric_array(v) || (scalar_array(v) && v.size() <= 1)) {
    out << pad << key << std::string(width - key.size() + 2, ' ')
        << (v.empty() ? std::string("-") : v.size() == 1 ? scalar(v[0]) : v.dump()) << '\n';
  } else if (scalar_array(v)) {
    out << pad << key << ":\n";
    for (const auto& e : v) out << pad << "  - " << scalar(e) << '\n';
  } else if (v.is_array()) {
    out << pad << key << ":\n";
    for (const auto& e : v) {
      if (is_scalar(e) || e.is_array()) {
        out << pad << "  - " << e.dump() << '\n';
        continue;
      }
      std::ostringstream item;
      render(item, e, indent + 4);
      std::string text = item.str();
      text.replace(static_cast<std::size_t>(indent) + 2, 2, "- ");
      out << text;
    }
  } else {
    out << pad << key << ":\n";
    render(out, v, indent + 2);
  }
}

void render(std::ostream& out, const Json& obj, int indent) {
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items())
    if (is_scalar(v) || numeric_array(v) || (scalar_array(v) && v.size() <= 1)) width = std::max(width, k.size());
  for (const auto& [k, v] : obj.items()) render_value(out, k, v, width, indent);
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  if (doc.contains("report")) {
    const Json& r = doc["report"];
    out << "TC(" << scalar(r["group"]) << ") in [" << r["lower"] << ", " << r["upper"] << "]"
        << (r["exact"].get<bool>() ? " (exact)" : "") << "\n\n";
  }
  Json body = doc;
  body.erase("schema");
  render(out, body, 0);
  return out.str();
}

}  // namespace tcb
