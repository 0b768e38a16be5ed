#pragma once

#include <optional>

#include "reeskit/rational.hpp"

namespace reeskit {

// Exact feasibility of {x >= 0 : A x = b}. Returns a feasible point, or
// nothing when the system is infeasible. Phase-one simplex with Bland's
// rule, all arithmetic rational.
std::optional<RatVec> lp_feasible_point(std::vector<RatVec> A, RatVec b);

}  // namespace reeskit
