#pragma once

namespace ske {

// Execution policy for the data-parallel kernels. Every kernel keeps a
// serial twin so results can be cross-checked and benchmarked; the parallel
// path is written so its output is byte-identical for any thread count
// (per-slot writes followed by a fixed-order reduction).
enum class Exec { serial, parallel };

// Caps the OpenMP thread pool. n <= 0 leaves the runtime default.
void set_threads(int n);

int max_threads();

} // namespace ske
