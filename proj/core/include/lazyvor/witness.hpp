#ifndef LAZYVOR_WITNESS_HPP
#define LAZYVOR_WITNESS_HPP

#include "lazyvor/vec.hpp"

#include <optional>
#include <vector>

namespace lazyvor {

/// A small subset of source points certifying a hull membership claim.
/// With coefficients: x = sum(coeff_i * points[indices_i]), a convex
/// combination over at most dim+1 points. Without: x is interior to the hull
/// of at most 2*dim points.
struct Witness {
    std::vector<int> indices;
    std::optional<std::vector<Rational>> coefficients;
};

/// Convex-combination certificate for x in conv(points), support <= dim+1,
/// found by an LP basic solution plus affine-dependence support reduction.
/// nullopt when x is outside the hull. The reconstruction identity is
/// re-verified on every call.
std::optional<Witness> caratheodory_witness(const std::vector<Point>& points, const Point& x);

/// Subset S with |S| <= 2*dim and x interior to conv(S), or nullopt when x
/// is not interior to conv(points). Implemented as greedy reduction of
/// {p - x} to a minimal positively spanning set; minimality bounds the size
/// by 2*dim. Interiority of the result is re-verified on every call.
std::optional<Witness> steinitz_witness(const std::vector<Point>& points, const Point& x);

/// x lies in the interior of conv(points); the primal route shared with
/// classification (difference vectors positively span E^n).
bool interior_of_hull(const std::vector<Point>& points, const Point& x);

} // namespace lazyvor

#endif
