#ifndef LAZYVOR_CONE_HPP
#define LAZYVOR_CONE_HPP

#include "lazyvor/polyhedron.hpp"

#include <vector>

namespace lazyvor {

/// Finitely generated convex cone with apex 0, stored by generators.
/// No generator list is empty-normalized or minimized; equality is semantic.
/// An empty generator list denotes {0}.
struct FgCone {
    int dim = 0;
    std::vector<Vec> generators;

    FgCone() = default;
    explicit FgCone(int d) : dim(d) {}
    FgCone(int d, std::vector<Vec> gens);
};

/// v is a nonnegative combination of the generators (exact LP feasibility).
bool cone_contains(const FgCone& c, const Vec& v);

/// { y : <g, y> <= 0 for every generator g }. Empty cone polarizes to E^n.
HRep polar_cone(const FgCone& c);

/// Mutual containment of generators.
bool cone_equal(const FgCone& a, const FgCone& b);

/// The cone is all of E^n, decided on the polar system: its kernel and the
/// capped coordinate maxima must all vanish.
bool cone_is_fullspace(const FgCone& c);

/// cone(gens) = E^dim decided on the primal side, one membership LP per
/// +-coordinate direction. The route classification takes.
bool positively_spans(const std::vector<Vec>& gens, int dim);

} // namespace lazyvor

#endif
