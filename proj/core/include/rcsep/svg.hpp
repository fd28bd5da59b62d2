#pragma once

#include "rcsep/harness.hpp"

#include <string>

namespace rcsep::svg {

// Static scatter plot of sample verdicts over the scenario's generators.
// Niemytzki scenes draw the half plane with effective circles; Sorgenfrey
// scenes project onto the first two coordinates (or a strip for d = 1).
// Pure view of the CSV rows: parsing failures are ignored, verdicts are
// never recomputed.
std::string render_scatter(const harness::Scenario& sc, const harness::SuiteReport& rep);

}  // namespace rcsep::svg
