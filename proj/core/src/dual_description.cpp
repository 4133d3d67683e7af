#include "lazyvor/dual_description.hpp"
#include "lazyvor/errors.hpp"

#include <algorithm>
#include <cassert>

namespace lazyvor {

Vec canonical_ray(const Vec& v) {
    Rational scale(0);
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] != 0) {
            scale = v[i] < 0 ? Rational(-v[i]) : v[i];
            break;
        }
    }
    if (scale == 0) {
        throw DomainError("zero vector is not a ray");
    }
    return v * (Rational(1) / scale);
}

Vec canonical_line(const Vec& v) {
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] != 0) {
            return v * (Rational(1) / v[i]);
        }
    }
    throw DomainError("zero vector is not a line");
}

namespace {

void sort_rays(std::vector<Vec>& rays) {
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

// Rays of the pointed cone { y : <row_i, y> <= 0 }, rows of full column rank.
std::vector<Vec> pointed_cone_rays(const Mat& rows, int dim) {
    const std::vector<int> basis_idx = independent_rows(rows);
    assert(static_cast<int>(basis_idx.size()) == dim);

    Mat basis;
    for (int i : basis_idx) {
        basis.push_back(rows[static_cast<size_t>(i)]);
    }
    const auto inv = inverse(basis);
    assert(inv.has_value());

    // Columns of -inverse generate { A_B y <= 0 }.
    std::vector<Vec> rays;
    for (int j = 0; j < dim; ++j) {
        Vec r(dim);
        for (int i = 0; i < dim; ++i) {
            r[i] = -(*inv)[static_cast<size_t>(i)][j];
        }
        rays.push_back(canonical_ray(r));
    }

    Mat processed = basis;
    std::vector<bool> used(rows.size(), false);
    for (int i : basis_idx) {
        used[static_cast<size_t>(i)] = true;
    }

    // Active-set adjacency: extreme rays u,v of a pointed cone are adjacent
    // iff the constraints tight at both have rank dim-2.
    auto adjacent = [&](const Vec& u, const Vec& v) {
        Mat tight;
        for (const Vec& row : processed) {
            if (dot(row, u) == 0 && dot(row, v) == 0) {
                tight.push_back(row);
            }
        }
        return rank(std::move(tight)) == dim - 2;
    };

    for (size_t k = 0; k < rows.size(); ++k) {
        if (used[k]) {
            continue;
        }
        const Vec& a = rows[k];
        std::vector<Vec> keep, plus, minus;
        std::vector<Rational> sig_plus, sig_minus;
        for (const Vec& r : rays) {
            const Rational s = dot(a, r);
            if (s > 0) {
                plus.push_back(r);
                sig_plus.push_back(s);
            } else {
                if (s < 0) {
                    minus.push_back(r);
                    sig_minus.push_back(s);
                }
                keep.push_back(r);
            }
        }
        if (!plus.empty()) {
            for (size_t p = 0; p < plus.size(); ++p) {
                for (size_t m = 0; m < minus.size(); ++m) {
                    if (!adjacent(plus[p], minus[m])) {
                        continue;
                    }
                    Vec combo = minus[m] * sig_plus[p] - plus[p] * sig_minus[m];
                    keep.push_back(canonical_ray(combo));
                }
            }
            rays = std::move(keep);
            sort_rays(rays);
        }
        processed.push_back(a);
    }
    return rays;
}

} // namespace

ConeGenerators cone_generators(const Mat& rows, int dim) {
    ConeGenerators out;
    if (rows.empty()) {
        for (int i = 0; i < dim; ++i) {
            out.lines.push_back(unit_vec(dim, i));
        }
        return out;
    }
    std::vector<Vec> lineality = kernel_basis(rows, dim);
    Mat pointed_rows = rows;
    for (const Vec& l : lineality) {
        pointed_rows.push_back(l);
        pointed_rows.push_back(-l);
    }
    out.rays = pointed_cone_rays(pointed_rows, dim);
    sort_rays(out.rays);
    for (const Vec& l : lineality) {
        out.lines.push_back(canonical_line(l));
    }
    std::sort(out.lines.begin(), out.lines.end(), lex_less);
    return out;
}

VRep dual_to_vrep(const HRep& rep) {
    const int n = rep.dim;
    Mat rows;
    rows.reserve(rep.size() + 1);
    for (const HalfSpace& h : rep.halfspaces) {
        Vec row(n + 1);
        for (int j = 0; j < n; ++j) {
            row[j] = h.normal[j];
        }
        row[n] = -h.offset;
        rows.push_back(std::move(row));
    }
    Vec t_row(n + 1);
    t_row[n] = -1; // t >= 0
    rows.push_back(std::move(t_row));

    const ConeGenerators gens = cone_generators(rows, n + 1);

    VRep v(n);
    for (const Vec& g : gens.rays) {
        Vec x(n);
        for (int j = 0; j < n; ++j) {
            x[j] = g[j];
        }
        if (g[n] > 0) {
            v.vertices.push_back(x * (Rational(1) / g[n]));
        } else if (!x.is_zero()) {
            v.rays.push_back(canonical_ray(x));
        }
    }
    for (const Vec& g : gens.lines) {
        assert(g[n] == 0);
        Vec x(n);
        for (int j = 0; j < n; ++j) {
            x[j] = g[j];
        }
        v.lines.push_back(canonical_line(x));
    }
    if (v.vertices.empty()) {
        return VRep(n); // empty set
    }
    sort_points_lex(v.vertices);
    sort_rays(v.rays);
    sort_rays(v.lines);
    return v;
}

HRep dual_to_hrep(const VRep& rep) {
    const int n = rep.dim;
    if (rep.vertices.empty()) {
        // Canonical infeasible system.
        HRep h(n);
        h.halfspaces.emplace_back(unit_vec(n, 0), Rational(0));
        h.halfspaces.emplace_back(-unit_vec(n, 0), Rational(-1));
        return h;
    }
    Mat rows;
    auto push = [&](const Vec& x, const Rational& t, bool both_signs) {
        Vec row(n + 1);
        for (int j = 0; j < n; ++j) {
            row[j] = x[j];
        }
        row[n] = t;
        rows.push_back(row);
        if (both_signs) {
            rows.push_back(-row);
        }
    };
    for (const Point& p : rep.vertices) {
        push(p, Rational(1), false);
    }
    for (const Vec& r : rep.rays) {
        if (r.is_zero()) {
            throw DomainError("VRep ray must be nonzero");
        }
        push(r, Rational(0), false);
    }
    for (const Vec& l : rep.lines) {
        if (l.is_zero()) {
            throw DomainError("VRep line must be nonzero");
        }
        push(l, Rational(0), true);
    }

    const ConeGenerators polar = cone_generators(rows, n + 1);

    HRep h(n);
    auto add_row = [&](const Vec& z, bool both_signs) {
        Vec a(n);
        for (int j = 0; j < n; ++j) {
            a[j] = z[j];
        }
        const Rational beta = z[n];
        if (a.is_zero()) {
            // 0 <= -beta holds for every generator set containing a vertex.
            assert(beta <= 0);
            return;
        }
        h.halfspaces.emplace_back(a, -beta);
        if (both_signs) {
            h.halfspaces.emplace_back(-a, beta);
        }
    };
    for (const Vec& z : polar.rays) {
        add_row(z, false);
    }
    for (const Vec& z : polar.lines) {
        add_row(z, true);
    }
    return h;
}

} // namespace lazyvor
