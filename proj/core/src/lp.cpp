#include "lazyvor/lp.hpp"
#include "lazyvor/errors.hpp"

#include <cassert>

namespace lazyvor {

namespace {

// Dense full-tableau simplex. Column layout: structural vars, slacks, then
// (during phase one) a single artificial column; the last column is the rhs.
// Bland's rule on variable indices in both phases.
class Tableau {
public:
    Tableau(const Mat& a, const Vec& b, const Vec& c)
        : m_(static_cast<int>(a.size())), n_(c.dim()) {
        rows_.reserve(static_cast<size_t>(m_));
        basic_.resize(static_cast<size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            std::vector<Rational> row(static_cast<size_t>(n_ + m_ + 2));
            for (int j = 0; j < n_; ++j) {
                row[static_cast<size_t>(j)] = a[static_cast<size_t>(i)][j];
            }
            row[static_cast<size_t>(n_ + i)] = 1; // slack
            row[static_cast<size_t>(n_ + m_)] = -1; // artificial
            row.back() = b[i];
            rows_.push_back(std::move(row));
            basic_[static_cast<size_t>(i)] = n_ + i;
        }
        objective_ = c;
    }

    LpSolution solve() {
        if (!phase_one()) {
            return {LpStatus::Infeasible, Rational(0), Vec()};
        }
        install_objective();
        if (!iterate(n_ + m_)) {
            return {LpStatus::Unbounded, Rational(0), Vec()};
        }
        Vec x(n_);
        for (int i = 0; i < m_; ++i) {
            if (basic_[static_cast<size_t>(i)] < n_) {
                x[basic_[static_cast<size_t>(i)]] = rhs(i);
            }
        }
        return {LpStatus::Optimal, obj_val_, std::move(x)};
    }

private:
    int m_, n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> basic_;
    Vec objective_;                 // original cost vector
    std::vector<Rational> obj_;     // current reduced costs over all columns
    Rational obj_val_{0};

    Rational& at(int i, int j) { return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    Rational& rhs(int i) { return rows_[static_cast<size_t>(i)].back(); }

    void pivot(int row, int col) {
        const Rational inv = Rational(1) / at(row, col);
        for (auto& v : rows_[static_cast<size_t>(row)]) {
            v *= inv;
        }
        for (int i = 0; i < m_; ++i) {
            if (i == row || at(i, col) == 0) {
                continue;
            }
            const Rational f = at(i, col);
            for (size_t j = 0; j < rows_[static_cast<size_t>(i)].size(); ++j) {
                rows_[static_cast<size_t>(i)][j] -= f * rows_[static_cast<size_t>(row)][j];
            }
        }
        if (!obj_.empty() && obj_[static_cast<size_t>(col)] != 0) {
            const Rational f = obj_[static_cast<size_t>(col)];
            for (size_t j = 0; j + 1 < rows_[static_cast<size_t>(row)].size(); ++j) {
                obj_[j] -= f * rows_[static_cast<size_t>(row)][j];
            }
            obj_val_ += f * rhs(row);
        }
        basic_[static_cast<size_t>(row)] = col;
    }

    // Bland iteration until optimal (true) or unbounded (false).
    // Columns [0, limit) are eligible.
    bool iterate(int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j) {
                if (obj_[static_cast<size_t>(j)] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) {
                return true;
            }
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (at(i, enter) <= 0) {
                    continue;
                }
                const Rational ratio = rhs(i) / at(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best &&
                     basic_[static_cast<size_t>(i)] < basic_[static_cast<size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) {
                return false;
            }
            pivot(leave, enter);
        }
    }

    // Feasibility via a single artificial variable: maximize -x0 subject to
    // A x - x0 <= b. Returns false when the system is infeasible.
    bool phase_one() {
        const int art = n_ + m_;
        int worst = -1;
        for (int i = 0; i < m_; ++i) {
            if (rhs(i) < 0 && (worst < 0 || rhs(i) < rhs(worst))) {
                worst = i;
            }
        }
        obj_.assign(static_cast<size_t>(n_ + m_ + 1), Rational(0));
        obj_val_ = 0;
        if (worst < 0) {
            strip_artificial();
            return true;
        }
        obj_[static_cast<size_t>(art)] = -1;
        pivot(worst, art);
        const bool ok = iterate(art + 1);
        assert(ok); // -x0 is bounded above by 0
        (void)ok;
        if (obj_val_ < 0) {
            return false;
        }
        // x0 may linger in the basis at value zero.
        for (int i = 0; i < m_; ++i) {
            if (basic_[static_cast<size_t>(i)] != art) {
                continue;
            }
            int col = -1;
            for (int j = 0; j < art; ++j) {
                if (at(i, j) != 0) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                pivot(i, col);
            } else {
                rows_.erase(rows_.begin() + i);
                basic_.erase(basic_.begin() + i);
                --m_;
                --i;
            }
        }
        strip_artificial();
        return true;
    }

    void strip_artificial() {
        for (auto& row : rows_) {
            row.erase(row.end() - 2);
        }
    }

    void install_objective() {
        obj_.assign(static_cast<size_t>(n_ + m_), Rational(0));
        obj_val_ = 0;
        for (int j = 0; j < n_; ++j) {
            obj_[static_cast<size_t>(j)] = objective_[j];
        }
        for (int i = 0; i < m_; ++i) {
            const int bj = basic_[static_cast<size_t>(i)];
            if (obj_[static_cast<size_t>(bj)] == 0) {
                continue;
            }
            const Rational f = obj_[static_cast<size_t>(bj)];
            for (size_t j = 0; j + 1 < rows_[static_cast<size_t>(i)].size(); ++j) {
                obj_[j] -= f * rows_[static_cast<size_t>(i)][j];
            }
            obj_val_ += f * rhs(i);
        }
    }
};

} // namespace

LpSolution lp_max_nonneg(const Mat& a, const Vec& b, const Vec& c) {
    assert(a.size() == static_cast<size_t>(b.dim()));
    return Tableau(a, b, c).solve();
}

LpSolution lp_max_free(const HRep& rep, const Vec& c) {
    const int n = rep.dim;
    assert(c.dim() == n);
    Mat a;
    Vec b(static_cast<int>(rep.size()));
    a.reserve(rep.size());
    for (size_t i = 0; i < rep.size(); ++i) {
        const HalfSpace& h = rep.halfspaces[i];
        Vec row(2 * n);
        for (int j = 0; j < n; ++j) {
            row[j] = h.normal[j];
            row[n + j] = -h.normal[j];
        }
        a.push_back(std::move(row));
        b[static_cast<int>(i)] = h.offset;
    }
    Vec split_c(2 * n);
    for (int j = 0; j < n; ++j) {
        split_c[j] = c[j];
        split_c[n + j] = -c[j];
    }
    LpSolution sol = lp_max_nonneg(a, b, split_c);
    if (sol.status == LpStatus::Optimal) {
        Vec x(n);
        for (int j = 0; j < n; ++j) {
            x[j] = sol.x[j] - sol.x[n + j];
        }
        sol.x = std::move(x);
    }
    return sol;
}

namespace {

// Shared slack construction: maximize t subject to <a_i,x> + t <= b_i, t <= 1.
LpSolution max_margin(const HRep& rep) {
    const int n = rep.dim;
    HRep aug(n + 1);
    for (const HalfSpace& h : rep.halfspaces) {
        Vec normal(n + 1);
        for (int j = 0; j < n; ++j) {
            normal[j] = h.normal[j];
        }
        normal[n] = 1;
        aug.halfspaces.emplace_back(std::move(normal), h.offset);
    }
    aug.halfspaces.emplace_back(unit_vec(n + 1, n), Rational(1));
    return lp_max_free(aug, unit_vec(n + 1, n));
}

Point strip_margin(const Vec& x, int n) {
    Point p(n);
    for (int j = 0; j < n; ++j) {
        p[j] = x[j];
    }
    return p;
}

} // namespace

bool is_feasible(const HRep& rep) {
    const LpSolution sol = max_margin(rep);
    return sol.status == LpStatus::Optimal && sol.objective >= 0;
}

std::optional<Point> feasible_point(const HRep& rep) {
    const LpSolution sol = max_margin(rep);
    if (sol.status != LpStatus::Optimal || sol.objective < 0) {
        return std::nullopt;
    }
    return strip_margin(sol.x, rep.dim);
}

std::optional<Point> feasible_interior(const HRep& rep) {
    const LpSolution sol = max_margin(rep);
    if (sol.status != LpStatus::Optimal || sol.objective <= 0) {
        return std::nullopt;
    }
    return strip_margin(sol.x, rep.dim);
}

} // namespace lazyvor
