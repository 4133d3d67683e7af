#ifndef LAZYVOR_LP_HPP
#define LAZYVOR_LP_HPP

#include "lazyvor/linalg.hpp"
#include "lazyvor/polyhedron.hpp"

#include <optional>

namespace lazyvor {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective; // valid when Optimal
    Vec x;              // valid when Optimal
};

/// maximize <c,x> subject to A x <= b, x >= 0.
/// Exact rational two-phase simplex with Bland's anti-cycling rule.
LpSolution lp_max_nonneg(const Mat& a, const Vec& b, const Vec& c);

/// maximize <c,x> over the half-space system with free variables
/// (split x = u - w internally).
LpSolution lp_max_free(const HRep& rep, const Vec& c);

bool is_feasible(const HRep& rep);
std::optional<Point> feasible_point(const HRep& rep);

/// A point satisfying every inequality strictly, if one exists.
/// Decided exactly by maximizing a functional slack margin.
std::optional<Point> feasible_interior(const HRep& rep);

} // namespace lazyvor

#endif
