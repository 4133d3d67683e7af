#ifndef LAZYVOR_POLYHEDRON_HPP
#define LAZYVOR_POLYHEDRON_HPP

#include "lazyvor/vec.hpp"

#include <vector>

namespace lazyvor {

/// Closed half-space { x : <normal, x> <= offset }. The normal is nonzero;
/// scale is not normalized, equality is tested up to positive scaling.
struct HalfSpace {
    Vec normal;
    Rational offset;

    HalfSpace() = default;
    HalfSpace(Vec n, Rational b);

    /// <normal, x> - offset; <= 0 inside, 0 on the bounding hyperplane.
    Rational eval(const Point& x) const { return dot(normal, x) - offset; }
    bool contains(const Point& x) const { return eval(x) <= 0; }
    bool strictly_contains(const Point& x) const { return eval(x) < 0; }

    /// Scaled so the first nonzero normal coordinate is +-1; representative
    /// of the positive-scaling equivalence class.
    HalfSpace canonical() const;
};

bool same_halfspace(const HalfSpace& a, const HalfSpace& b);

/// Intersection of finitely many half-spaces. No rows denotes all of E^n.
struct HRep {
    int dim = 0;
    std::vector<HalfSpace> halfspaces;

    HRep() = default;
    explicit HRep(int d) : dim(d) {}
    HRep(int d, std::vector<HalfSpace> hs) : dim(d), halfspaces(std::move(hs)) {}

    size_t size() const { return halfspaces.size(); }
    bool contains(const Point& x) const;
    bool strictly_contains(const Point& x) const;

    /// Same set with every offset replaced by 0 (the homogenized system).
    HRep homogenized() const;
};

/// conv(vertices) + cone(rays) + span(lines). Rays and lines are nonzero.
/// Empty vertex list denotes the empty set.
struct VRep {
    int dim = 0;
    std::vector<Point> vertices;
    std::vector<Vec> rays;
    std::vector<Vec> lines;

    VRep() = default;
    explicit VRep(int d) : dim(d) {}

    bool empty() const { return vertices.empty(); }
    bool is_polytope() const { return !vertices.empty() && rays.empty() && lines.empty(); }
};

/// Axis-aligned box [lo, hi] as an HRep (2*dim rows, x_i <= hi_i then
/// -x_i <= -lo_i per axis). Requires lo < hi componentwise.
HRep make_box(const Point& lo, const Point& hi);

/// Recovers (lo, hi) from an HRep consisting solely of axis-aligned rows
/// bounding every coordinate on both sides. Throws DomainError otherwise.
std::pair<Point, Point> box_bounds(const HRep& box);

/// Corners of an axis-aligned box.
std::vector<Point> box_corners(const Point& lo, const Point& hi);

} // namespace lazyvor

#endif
