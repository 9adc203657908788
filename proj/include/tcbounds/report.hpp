#pragma once

#include <string>

#include "json.hpp"
#include "tcbounds/bounds.hpp"

namespace tcb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tcbounds/1";

/// {"schema": "tcbounds/1", "command": command}; callers append fields.
Json envelope(const std::string& command);

Json to_json(const Step& s);
Json to_json(const ChdResult& r);
Json to_json(const DisjointnessCertificate& c);
Json to_json(const BoundReport& r);

/// Checks an emitted document against the published schema: the envelope,
/// and for documents with a "report" member every field of a bound report
/// (types, lower <= upper, exact flag, named rules and anchors, step
/// statuses). Throws DomainError naming the offending JSON pointer.
void validate_report_json(const Json& doc);

/// Human-readable rendering of any emitted document. Works from the JSON
/// alone so text and JSON output cannot disagree.
std::string render_text(const Json& doc);

}  // namespace tcb
