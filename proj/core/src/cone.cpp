#include "lazyvor/cone.hpp"
#include "lazyvor/errors.hpp"
#include "lazyvor/linalg.hpp"
#include "lazyvor/lp.hpp"

namespace lazyvor {

FgCone::FgCone(int d, std::vector<Vec> gens) : dim(d), generators(std::move(gens)) {
    for (const Vec& g : generators) {
        if (g.dim() != dim) {
            throw DomainError("cone generator dimension mismatch");
        }
        if (g.is_zero()) {
            throw DomainError("cone generator must be nonzero");
        }
    }
}

bool cone_contains(const FgCone& c, const Vec& v) {
    if (v.dim() != c.dim) {
        throw DomainError("cone_contains: dimension mismatch");
    }
    if (v.is_zero()) {
        return true;
    }
    if (c.generators.empty()) {
        return false;
    }
    const int k = static_cast<int>(c.generators.size());
    // Feasibility of sum(lambda_j g_j) = v, lambda >= 0, equalities as pairs.
    Mat a;
    Vec b(2 * c.dim);
    for (int coord = 0; coord < c.dim; ++coord) {
        Vec row(k), neg(k);
        for (int j = 0; j < k; ++j) {
            row[j] = c.generators[static_cast<size_t>(j)][coord];
            neg[j] = -row[j];
        }
        a.push_back(std::move(row));
        a.push_back(std::move(neg));
        b[2 * coord] = v[coord];
        b[2 * coord + 1] = -v[coord];
    }
    return lp_max_nonneg(a, b, Vec(k)).status == LpStatus::Optimal;
}

HRep polar_cone(const FgCone& c) {
    HRep polar(c.dim);
    for (const Vec& g : c.generators) {
        polar.halfspaces.emplace_back(g, Rational(0));
    }
    return polar;
}

bool cone_equal(const FgCone& a, const FgCone& b) {
    if (a.dim != b.dim) {
        throw DomainError("cone_equal: dimension mismatch");
    }
    for (const Vec& g : a.generators) {
        if (!cone_contains(b, g)) {
            return false;
        }
    }
    for (const Vec& g : b.generators) {
        if (!cone_contains(a, g)) {
            return false;
        }
    }
    return true;
}

bool cone_is_fullspace(const FgCone& c) {
    if (c.generators.empty()) {
        return false;
    }
    Mat normals;
    normals.reserve(c.generators.size());
    for (const Vec& g : c.generators) {
        normals.push_back(g);
    }
    if (!kernel_basis(normals, c.dim).empty()) {
        return false; // polar contains a line
    }
    const HRep polar = polar_cone(c);
    for (int j = 0; j < c.dim; ++j) {
        for (int sign = 0; sign < 2; ++sign) {
            const Vec dir = sign ? -unit_vec(c.dim, j) : unit_vec(c.dim, j);
            HRep capped = polar;
            capped.halfspaces.emplace_back(dir, Rational(1));
            const LpSolution sol = lp_max_free(capped, dir);
            if (sol.status != LpStatus::Optimal || sol.objective > 0) {
                return false; // nonzero polar element
            }
        }
    }
    return true;
}

bool positively_spans(const std::vector<Vec>& gens, int dim) {
    FgCone c(dim, gens);
    for (int j = 0; j < dim; ++j) {
        if (!cone_contains(c, unit_vec(dim, j)) || !cone_contains(c, -unit_vec(dim, j))) {
            return false;
        }
    }
    return true;
}

} // namespace lazyvor
