#include "tcbounds/certificate.hpp"

namespace tcb {

const char* to_string(StepStatus s) {
  return s == StepStatus::MachineVerified ? "machine-verified" : "trusted";
}

}  // namespace tcb
