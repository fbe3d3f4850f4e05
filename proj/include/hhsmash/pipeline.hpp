#pragma once

// Orchestration: strand cohomology in parallel behind a deterministic merge,
// the verification suites and the table run.

#include "hhsmash/cochain.hpp"
#include "hhsmash/cohomology.hpp"
#include "hhsmash/report.hpp"
#include "hhsmash/scenario.hpp"

#include <memory>
#include <vector>

namespace hhs {

struct RunOptions {
    unsigned threads = 1;
};

std::shared_ptr<const DGContext> make_context(const Scenario& s);

/// Full and invariant cohomology for every degree of one weight strand.
struct StrandCohomology {
    int w = 0;
    std::vector<CohomologyBasis> full;      // per m = 0..top−1
    std::vector<CohomologyBasis> invariant; // per m = 0..top−1
};

/// Weights w_min..w_max computed by `threads` workers; results are in weight order.
std::vector<StrandCohomology> compute_strands(const DGContext& ctx, int w_min, int w_max, unsigned threads);

/// dim of the centre of A#H in A-degree d, by solving [g, x] = 0 for the
/// generators u_i#1 and 1#b directly in A#H.
std::size_t center_dimension(const SmashProduct& smash, unsigned degree);

/// Validates, then computes dimensions, bases and the invariant cup table.
/// Throws ValidationError for an invalid scenario.
CohomologyReport run_compute(const Scenario& s, const RunOptions& opt);
/// Runs every property suite; failures are recorded in the report, never thrown.
CohomologyReport run_verify(const Scenario& s, const RunOptions& opt);
/// Cup tables in family labels with the diff against the expected laws.
/// Throws InvalidArgument unless the scenario is the Kac–Paljutkin plane.
CohomologyReport run_tables(const Scenario& s, const RunOptions& opt);

} // namespace hhs
