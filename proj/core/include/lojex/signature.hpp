#pragma once

#include <string>
#include <vector>

#include "lojex/bipoly.hpp"
#include "lojex/wfilter.hpp"

namespace lojex {

struct CaseClassification {
    bool nondegenerate = false;
    // {d1p = 0} subset of {x_light = 0}, with axis 1 the heavy axis.
    bool containment_holds = false;
    bool homogeneous = false;  // w1 == w2
    // Axes were exchanged so the heavy variable is axis 1 internally.
    bool swapped = false;
    std::vector<std::string> diagnostics;
};

struct CheckResult {
    bool value = false;
    std::vector<std::string> diagnostics;
};

// True iff the only common real zero of the two partials is the origin.
// Exact decision: off-axis zeros are scaled onto the slices x2 = +-1 by
// the weighted action and detected by gcd + Sturm; axis zeros reduce to
// monomial restrictions. Requires validate_weights(p, ws).
CheckResult is_nondegenerate(const BiPoly& p, const WeightSystem& ws);

// The theorem's condition {d1p = 0} subset of {x2 = 0}, with axis 1
// carrying the larger weight. Inputs must already be oriented
// heavy-first.
CheckResult containment_condition(const BiPoly& p, const WeightSystem& ws);

// Orient heavy-first (recording the swap), then bundle nondegeneracy,
// containment and the homogeneous flag.
CaseClassification classify(const BiPoly& p, const WeightSystem& ws);

}  // namespace lojex
