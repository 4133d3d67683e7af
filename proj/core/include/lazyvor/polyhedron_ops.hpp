#ifndef LAZYVOR_POLYHEDRON_OPS_HPP
#define LAZYVOR_POLYHEDRON_OPS_HPP

#include "lazyvor/dual_description.hpp"
#include "lazyvor/lp.hpp"
#include "lazyvor/polyhedron.hpp"

#include <utility>
#include <vector>

namespace lazyvor {

/// Indices of a minimal subset of rows denoting the same set: removing any
/// surviving row strictly enlarges it. One exact LP per row.
std::vector<int> irredundant_rows(const HRep& rep);

HRep remove_redundant(const HRep& rep);

/// The homogenized system. Throws DomainError when rep denotes the empty set
/// (the recession cone is undefined for it here).
HRep recession_cone(const HRep& rep);

/// Basis of { v : v and -v in the recession cone }; empty for line-free sets.
std::vector<Vec> lineality_space(const HRep& rep);

/// Polar of a polytope with the origin in its interior:
/// { x : <x, v> <= 1 for every vertex v }. Rejects other inputs.
HRep polar_polytope(const VRep& polytope);

/// Both representations of conv(points). Lower-dimensional hulls come back
/// with the affine hull fixed by opposite inequality pairs.
std::pair<HRep, VRep> convex_hull(const std::vector<Point>& points);

/// set(a) subseteq set(b), decided by one capped LP per row of b.
bool hrep_implies(const HRep& a, const HRep& b);
bool hrep_equal_sets(const HRep& a, const HRep& b);

/// Recession cone is {0}. Meaningful for nonempty sets.
bool is_bounded(const HRep& rep);

} // namespace lazyvor

#endif
