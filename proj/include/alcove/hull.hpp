#pragma once

#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Exact test p ∈ Conv(points) by a phase-one simplex with Bland's rule.
bool in_convex_hull(const std::vector<std::vector<Rational>>& points, const std::vector<Rational>& p);

}  // namespace alcove
