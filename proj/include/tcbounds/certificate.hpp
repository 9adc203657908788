#pragma once

#include <string>
#include <vector>

namespace tcb {

enum class StepStatus { MachineVerified, Trusted };

/// "machine-verified" or "trusted".
const char* to_string(StepStatus s);

/// One link in a justification. Machine-verified steps name the check that
/// ran; trusted steps carry a citation for the result they rely on.
struct Step {
  std::string claim;
  StepStatus status = StepStatus::MachineVerified;
  std::string evidence;

  friend bool operator==(const Step&, const Step&) = default;
};

inline Step verified(std::string claim, std::string evidence) {
  return {std::move(claim), StepStatus::MachineVerified, std::move(evidence)};
}

inline Step trusted(std::string claim, std::string citation) {
  return {std::move(claim), StepStatus::Trusted, std::move(citation)};
}

}  // namespace tcb
