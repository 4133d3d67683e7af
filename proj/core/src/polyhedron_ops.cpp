#include "lazyvor/polyhedron_ops.hpp"
#include "lazyvor/errors.hpp"

#include <algorithm>

namespace lazyvor {

namespace {

// Largest value of <normal, .> over rep, capped at `cap` to stay bounded.
// nullopt when rep is empty.
std::optional<Rational> capped_max(const HRep& rep, const Vec& normal, const Rational& cap) {
    HRep capped = rep;
    capped.halfspaces.emplace_back(normal, cap);
    const LpSolution sol = lp_max_free(capped, normal);
    if (sol.status != LpStatus::Optimal) {
        return std::nullopt;
    }
    return sol.objective;
}

} // namespace

std::vector<int> irredundant_rows(const HRep& rep) {
    const size_t m = rep.size();
    std::vector<bool> alive(m, true);
    for (size_t i = 0; i < m; ++i) {
        HRep others(rep.dim);
        for (size_t j = 0; j < m; ++j) {
            if (j != i && alive[j]) {
                others.halfspaces.push_back(rep.halfspaces[j]);
            }
        }
        const HalfSpace& h = rep.halfspaces[i];
        const auto best = capped_max(others, h.normal, h.offset + 1);
        // A row is redundant when no point of the relaxed system violates it.
        if (!best.has_value() || *best <= h.offset) {
            alive[i] = false;
        }
    }
    std::vector<int> kept;
    for (size_t i = 0; i < m; ++i) {
        if (alive[i]) {
            kept.push_back(static_cast<int>(i));
        }
    }
    return kept;
}

HRep remove_redundant(const HRep& rep) {
    HRep out(rep.dim);
    for (int i : irredundant_rows(rep)) {
        out.halfspaces.push_back(rep.halfspaces[static_cast<size_t>(i)]);
    }
    return out;
}

HRep recession_cone(const HRep& rep) {
    if (!is_feasible(rep)) {
        throw DomainError("recession cone of the empty set");
    }
    return rep.homogenized();
}

std::vector<Vec> lineality_space(const HRep& rep) {
    Mat normals;
    normals.reserve(rep.size());
    for (const HalfSpace& h : rep.halfspaces) {
        normals.push_back(h.normal);
    }
    if (normals.empty()) {
        std::vector<Vec> full;
        for (int i = 0; i < rep.dim; ++i) {
            full.push_back(unit_vec(rep.dim, i));
        }
        return full;
    }
    std::vector<Vec> basis = kernel_basis(normals, rep.dim);
    for (Vec& v : basis) {
        v = canonical_line(v);
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

HRep polar_polytope(const VRep& polytope) {
    if (polytope.vertices.empty() || !polytope.rays.empty() || !polytope.lines.empty()) {
        throw DomainError("polar_polytope requires a nonempty polytope (no rays or lines)");
    }
    // 0 interior <=> every valid inequality of the hull has positive offset.
    const HRep hull = dual_to_hrep(polytope);
    for (const HalfSpace& h : hull.halfspaces) {
        if (h.offset <= 0) {
            throw DomainError("polar_polytope requires the origin in the interior");
        }
    }
    HRep polar(polytope.dim);
    for (const Point& v : polytope.vertices) {
        polar.halfspaces.emplace_back(v, Rational(1));
    }
    return polar;
}

std::pair<HRep, VRep> convex_hull(const std::vector<Point>& points) {
    if (points.empty()) {
        throw DomainError("convex hull of an empty point list");
    }
    std::vector<Point> pts = points;
    sort_points_lex(pts);
    VRep generators(pts.front().dim());
    generators.vertices = std::move(pts);
    const HRep minimal = remove_redundant(dual_to_hrep(generators));
    return {minimal, dual_to_vrep(minimal)};
}

bool hrep_implies(const HRep& a, const HRep& b) {
    for (const HalfSpace& h : b.halfspaces) {
        const auto best = capped_max(a, h.normal, h.offset + 1);
        if (!best.has_value()) {
            return true; // a is empty
        }
        if (*best > h.offset) {
            return false;
        }
    }
    return true;
}

bool hrep_equal_sets(const HRep& a, const HRep& b) {
    return hrep_implies(a, b) && hrep_implies(b, a);
}

bool is_bounded(const HRep& rep) {
    Mat rows;
    rows.reserve(rep.size());
    for (const HalfSpace& h : rep.halfspaces) {
        rows.push_back(h.normal);
    }
    const ConeGenerators recession = cone_generators(rows, rep.dim);
    return recession.rays.empty() && recession.lines.empty();
}

} // namespace lazyvor
