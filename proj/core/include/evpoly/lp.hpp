#pragma once

#include <optional>
#include <span>
#include <vector>

#include "evpoly/cyclotomic.hpp"

namespace evpoly {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// A point of {y >= 0 : a y = b}, found by the phase-one simplex method
/// with Bland's rule, or nullopt if the system is infeasible.
std::optional<std::vector<Rational>> feasible_point(const RationalMatrix& a, std::span<const Rational> b);

/// x lies in the convex hull of the points.
bool in_convex_hull(const std::vector<std::vector<Rational>>& points, std::span<const Rational> x);

}  // namespace evpoly
