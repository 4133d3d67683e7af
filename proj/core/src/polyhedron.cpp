#include "lazyvor/polyhedron.hpp"
#include "lazyvor/errors.hpp"

namespace lazyvor {

HalfSpace::HalfSpace(Vec n, Rational b) : normal(std::move(n)), offset(std::move(b)) {
    if (normal.is_zero()) {
        throw DomainError("half-space with zero normal");
    }
}

HalfSpace HalfSpace::canonical() const {
    Rational scale(0);
    for (int i = 0; i < normal.dim(); ++i) {
        if (normal[i] != 0) {
            scale = normal[i] < 0 ? Rational(-normal[i]) : normal[i];
            break;
        }
    }
    HalfSpace h = *this;
    const Rational inv = Rational(1) / scale;
    h.normal = h.normal * inv;
    h.offset *= inv;
    return h;
}

bool same_halfspace(const HalfSpace& a, const HalfSpace& b) {
    const HalfSpace ca = a.canonical();
    const HalfSpace cb = b.canonical();
    return ca.normal == cb.normal && ca.offset == cb.offset;
}

bool HRep::contains(const Point& x) const {
    for (const HalfSpace& h : halfspaces) {
        if (!h.contains(x)) {
            return false;
        }
    }
    return true;
}

bool HRep::strictly_contains(const Point& x) const {
    for (const HalfSpace& h : halfspaces) {
        if (!h.strictly_contains(x)) {
            return false;
        }
    }
    return true;
}

HRep HRep::homogenized() const {
    HRep h(dim);
    h.halfspaces.reserve(halfspaces.size());
    for (const HalfSpace& hs : halfspaces) {
        h.halfspaces.emplace_back(hs.normal, Rational(0));
    }
    return h;
}

HRep make_box(const Point& lo, const Point& hi) {
    const int n = lo.dim();
    if (hi.dim() != n) {
        throw DomainError("box bounds dimension mismatch");
    }
    HRep box(n);
    for (int i = 0; i < n; ++i) {
        if (!(lo[i] < hi[i])) {
            throw DomainError("box with empty interior: lo >= hi in coordinate " +
                              std::to_string(i));
        }
        box.halfspaces.emplace_back(unit_vec(n, i), hi[i]);
        box.halfspaces.emplace_back(-unit_vec(n, i), -lo[i]);
    }
    return box;
}

std::pair<Point, Point> box_bounds(const HRep& box) {
    const int n = box.dim;
    std::vector<bool> has_lo(static_cast<size_t>(n), false), has_hi(static_cast<size_t>(n), false);
    Point lo(n), hi(n);
    for (const HalfSpace& h : box.halfspaces) {
        int axis = -1;
        for (int i = 0; i < n; ++i) {
            if (h.normal[i] != 0) {
                if (axis >= 0) {
                    throw DomainError("not an axis-aligned box constraint");
                }
                axis = i;
            }
        }
        const Rational bound = h.offset / h.normal[axis];
        if (h.normal[axis] > 0) {
            if (!has_hi[static_cast<size_t>(axis)] || bound < hi[axis]) {
                hi[axis] = bound;
            }
            has_hi[static_cast<size_t>(axis)] = true;
        } else {
            if (!has_lo[static_cast<size_t>(axis)] || bound > lo[axis]) {
                lo[axis] = bound;
            }
            has_lo[static_cast<size_t>(axis)] = true;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!has_lo[static_cast<size_t>(i)] || !has_hi[static_cast<size_t>(i)]) {
            throw DomainError("box does not bound coordinate " + std::to_string(i) +
                              " on both sides");
        }
        if (!(lo[i] < hi[i])) {
            throw DomainError("box with empty interior");
        }
    }
    return {lo, hi};
}

std::vector<Point> box_corners(const Point& lo, const Point& hi) {
    const int n = lo.dim();
    std::vector<Point> corners;
    corners.reserve(static_cast<size_t>(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Point c(n);
        for (int i = 0; i < n; ++i) {
            c[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        }
        corners.push_back(std::move(c));
    }
    return corners;
}

} // namespace lazyvor
