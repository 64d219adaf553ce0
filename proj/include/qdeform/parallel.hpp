#pragma once

namespace qdeform {

// Every exhaustive kernel (basis products, triple scans, candidate
// enumeration) ships in two forms: a plain serial loop kept as the
// reference, and an OpenMP version. Tests compare the two; the bench
// tool times them.
enum class ExecPolicy { Serial, Parallel };

}  // namespace qdeform
