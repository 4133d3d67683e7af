#ifndef LAZYVOR_DUAL_DESCRIPTION_HPP
#define LAZYVOR_DUAL_DESCRIPTION_HPP

#include "lazyvor/linalg.hpp"
#include "lazyvor/polyhedron.hpp"

namespace lazyvor {

/// Generators of a polyhedral cone.
struct ConeGenerators {
    std::vector<Vec> rays;
    std::vector<Vec> lines;
};

/// Generators of { y in E^dim : <row_i, y> <= 0 } by the incremental double
/// description method. Lineality is split off first; adjacency of rays in the
/// pointed part is decided by exact rank tests (no perturbation).
ConeGenerators cone_generators(const Mat& rows, int dim);

/// H -> V: all extreme points as vertices and, for line-free sets, all
/// extreme rays as rays. The empty set comes back with no vertices; E^n is a
/// vertex at the origin plus dim lines.
VRep dual_to_vrep(const HRep& rep);

/// V -> H: a valid (not necessarily minimal) inequality description.
HRep dual_to_hrep(const VRep& rep);

/// Scaled so the first nonzero coordinate is +-1 (positive scaling only).
Vec canonical_ray(const Vec& v);

/// Scaled so the first nonzero coordinate is +1 (sign-insensitive).
Vec canonical_line(const Vec& v);

} // namespace lazyvor

#endif
