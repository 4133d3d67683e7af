#include "lazyvor/witness.hpp"
#include "lazyvor/cone.hpp"
#include "lazyvor/dual_description.hpp"
#include "lazyvor/errors.hpp"
#include "lazyvor/linalg.hpp"
#include "lazyvor/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lazyvor {

namespace {

struct Gen {
    Vec direction; // point - x, nonzero
    int index;     // position in the input list
};

std::vector<Gen> difference_generators(const std::vector<Point>& points, const Point& x) {
    std::vector<Gen> gens;
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].dim() != x.dim()) {
            throw DomainError("witness: point dimension mismatch");
        }
        Vec d = points[i] - x;
        if (d.is_zero()) {
            continue;
        }
        // Keep the first occurrence of a repeated direction vector.
        const bool seen = std::any_of(gens.begin(), gens.end(),
                                      [&](const Gen& g) { return g.direction == d; });
        if (!seen) {
            gens.push_back({std::move(d), static_cast<int>(i)});
        }
    }
    return gens;
}

std::vector<Vec> directions(const std::vector<Gen>& gens) {
    std::vector<Vec> d;
    d.reserve(gens.size());
    for (const Gen& g : gens) {
        d.push_back(g.direction);
    }
    return d;
}

} // namespace

bool interior_of_hull(const std::vector<Point>& points, const Point& x) {
    if (points.empty()) {
        return false;
    }
    return positively_spans(directions(difference_generators(points, x)), x.dim());
}

std::optional<Witness> caratheodory_witness(const std::vector<Point>& points, const Point& x) {
    const int n = x.dim();
    const int k = static_cast<int>(points.size());
    if (k == 0) {
        return std::nullopt;
    }
    // Feasibility of sum(l_i p_i) = x, sum(l_i) = 1, l >= 0.
    Mat a;
    Vec b(2 * (n + 1));
    for (int coord = 0; coord <= n; ++coord) {
        Vec row(k);
        for (int j = 0; j < k; ++j) {
            row[j] = coord < n ? points[static_cast<size_t>(j)][coord] : Rational(1);
        }
        const Rational rhs = coord < n ? x[coord] : Rational(1);
        a.push_back(-row);
        a.push_back(std::move(row));
        b[2 * coord] = -rhs;
        b[2 * coord + 1] = rhs;
    }
    const LpSolution sol = lp_max_nonneg(a, b, Vec(k));
    if (sol.status != LpStatus::Optimal) {
        return std::nullopt;
    }

    std::vector<int> support;
    std::vector<Rational> lambda;
    for (int j = 0; j < k; ++j) {
        if (sol.x[j] != 0) {
            support.push_back(j);
            lambda.push_back(sol.x[j]);
        }
    }

    // Affine-dependence elimination until the support is at most n+1.
    while (static_cast<int>(support.size()) > n + 1) {
        Mat m;
        for (int coord = 0; coord <= n; ++coord) {
            Vec row(static_cast<int>(support.size()));
            for (size_t j = 0; j < support.size(); ++j) {
                row[static_cast<int>(j)] =
                    coord < n ? points[static_cast<size_t>(support[j])][coord] : Rational(1);
            }
            m.push_back(std::move(row));
        }
        const std::vector<Vec> kernel = kernel_basis(m, static_cast<int>(support.size()));
        if (kernel.empty()) {
            throw std::logic_error("support exceeds dim+1 but points are affinely independent");
        }
        Vec mu = kernel.front();
        bool has_positive = false;
        for (int j = 0; j < mu.dim(); ++j) {
            if (mu[j] > 0) {
                has_positive = true;
                break;
            }
        }
        if (!has_positive) {
            mu = -mu;
        }
        int drop = -1;
        Rational theta;
        for (size_t j = 0; j < support.size(); ++j) {
            if (mu[static_cast<int>(j)] <= 0) {
                continue;
            }
            const Rational t = lambda[j] / mu[static_cast<int>(j)];
            if (drop < 0 || t < theta) {
                theta = t;
                drop = static_cast<int>(j);
            }
        }
        std::vector<int> next_support;
        std::vector<Rational> next_lambda;
        for (size_t j = 0; j < support.size(); ++j) {
            const Rational v = lambda[j] - theta * mu[static_cast<int>(j)];
            if (v != 0) {
                next_support.push_back(support[j]);
                next_lambda.push_back(v);
            }
        }
        support = std::move(next_support);
        lambda = std::move(next_lambda);
    }

    // Verify the reconstruction exactly.
    Vec rebuilt(n);
    Rational total(0);
    for (size_t j = 0; j < support.size(); ++j) {
        if (lambda[j] < 0) {
            throw std::logic_error("negative coefficient in convex combination");
        }
        rebuilt += points[static_cast<size_t>(support[j])] * lambda[j];
        total += lambda[j];
    }
    if (!(rebuilt == x) || total != 1 || static_cast<int>(support.size()) > n + 1) {
        throw std::logic_error("convex combination certificate failed verification");
    }
    return Witness{std::move(support), std::move(lambda)};
}

std::optional<Witness> steinitz_witness(const std::vector<Point>& points, const Point& x) {
    const int n = x.dim();
    std::vector<Gen> gens = difference_generators(points, x);
    if (!positively_spans(directions(gens), n)) {
        return std::nullopt;
    }

    // Deterministic order: nearest first, lexicographic ties. The shortest
    // positively spanning prefix keeps the eventual witness local to x.
    std::sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) {
        const Rational na = norm_sq(a.direction), nb = norm_sq(b.direction);
        if (na != nb) {
            return na < nb;
        }
        return lex_less(a.direction, b.direction);
    });
    size_t lo = 1, hi = gens.size();
    while (lo < hi) {
        const size_t mid = (lo + hi) / 2;
        std::vector<Vec> prefix;
        for (size_t i = 0; i < mid; ++i) {
            prefix.push_back(gens[i].direction);
        }
        if (positively_spans(prefix, n)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    gens.resize(lo);

    // Greedy removal, farthest first. The result is a minimal positively
    // spanning set, and minimal ones never exceed 2n elements.
    for (size_t pos = gens.size(); pos-- > 0;) {
        std::vector<Vec> rest;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (i != pos) {
                rest.push_back(gens[i].direction);
            }
        }
        if (positively_spans(rest, n)) {
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pos));
        }
    }
    if (static_cast<int>(gens.size()) > 2 * n) {
        throw std::logic_error("minimal positively spanning set exceeded 2n elements");
    }

    // Independent re-verification: x interior to the hull of the chosen
    // subset, via the hull's inequality description.
    VRep shifted(n);
    for (const Gen& g : gens) {
        shifted.vertices.push_back(g.direction);
    }
    const HRep hull = dual_to_hrep(shifted);
    for (const HalfSpace& h : hull.halfspaces) {
        if (h.offset <= 0) {
            throw std::logic_error("witness hull does not contain x in its interior");
        }
    }

    Witness w;
    for (const Gen& g : gens) {
        w.indices.push_back(g.index);
    }
    std::sort(w.indices.begin(), w.indices.end());
    return w;
}

} // namespace lazyvor
