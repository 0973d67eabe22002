#pragma once

#include "tools/config.hpp"
#include "tools/report.hpp"

namespace helimom::tool {

// Randomized polarization-basis suite over the full guarded domain plus the
// finite-difference connection suite over its calibrated direction band;
// one record per identity with the worst residual seen.
Report run_verify(const RunConfig& cfg);

// One k-space moment record per configured packet, with the structural
// checks (positivity, imaginary residual, uncertainty nonnegativity) and a
// rotated-gauge cross-check folded into the pass flag.
Report run_moments(const RunConfig& cfg);

// Brute-force real-space moments against the k-space values, one record per
// packet.
Report run_oracle(const RunConfig& cfg);

// Exact symbolic derivation of the mode-operator commutator table; one
// record per table entry. Takes no config — there is nothing to tune.
Report run_algebra();

Report run_all(const RunConfig& cfg);

}  // namespace helimom::tool
