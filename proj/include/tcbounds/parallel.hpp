#pragma once

namespace tcb {

/// Selects between the OpenMP kernel and its serial reference. Both must
/// produce identical results; tests compare them directly.
enum class Execution { Serial, Parallel };

/// Worker threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace tcb
