#include "lazyvor/linalg.hpp"
#include "lazyvor/errors.hpp"

#include <cassert>

namespace lazyvor {

namespace {

// Row-reduces in place; returns the pivot column of each pivot row.
std::vector<int> row_echelon(Mat& m, int cols) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(m[row], m[pivot]);
        const Rational inv = Rational(1) / m[row][col];
        for (int c = col; c < cols; ++c) {
            m[row][c] *= inv;
        }
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r != row && m[r][col] != 0) {
                const Rational f = m[r][col];
                for (int c = col; c < cols; ++c) {
                    m[r][c] -= f * m[row][c];
                }
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

int rank(Mat m) {
    if (m.empty()) {
        return 0;
    }
    return static_cast<int>(row_echelon(m, m.front().dim()).size());
}

std::vector<Vec> kernel_basis(const Mat& a, int cols) {
    Mat m = a;
    const std::vector<int> pivot_cols = row_echelon(m, cols);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) {
        is_pivot[static_cast<size_t>(c)] = true;
    }
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) {
            continue;
        }
        Vec v(cols);
        v[free] = 1;
        for (size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b, int cols) {
    assert(a.size() == static_cast<size_t>(b.dim()));
    Mat aug;
    aug.reserve(a.size());
    for (size_t r = 0; r < a.size(); ++r) {
        Vec row(cols + 1);
        for (int c = 0; c < cols; ++c) {
            row[c] = a[r][c];
        }
        row[cols] = b[static_cast<int>(r)];
        aug.push_back(std::move(row));
    }
    const std::vector<int> pivot_cols = row_echelon(aug, cols + 1);
    for (int c : pivot_cols) {
        if (c == cols) {
            return std::nullopt; // 0 = nonzero row
        }
    }
    Vec x(cols);
    for (size_t r = 0; r < pivot_cols.size(); ++r) {
        x[pivot_cols[r]] = aug[r][cols];
    }
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    const int n = static_cast<int>(a.size());
    Mat aug;
    aug.reserve(a.size());
    for (int r = 0; r < n; ++r) {
        assert(a[static_cast<size_t>(r)].dim() == n);
        Vec row(2 * n);
        for (int c = 0; c < n; ++c) {
            row[c] = a[static_cast<size_t>(r)][c];
        }
        row[n + r] = 1;
        aug.push_back(std::move(row));
    }
    const std::vector<int> pivots = row_echelon(aug, 2 * n);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] != n - 1) {
        return std::nullopt;
    }
    Mat inv;
    inv.reserve(a.size());
    for (int r = 0; r < n; ++r) {
        Vec row(n);
        for (int c = 0; c < n; ++c) {
            row[c] = aug[static_cast<size_t>(r)][n + c];
        }
        inv.push_back(std::move(row));
    }
    return inv;
}

std::vector<int> independent_rows(const Mat& a) {
    std::vector<int> picked;
    Mat sofar;
    for (size_t r = 0; r < a.size(); ++r) {
        sofar.push_back(a[r]);
        if (rank(sofar) == static_cast<int>(sofar.size())) {
            picked.push_back(static_cast<int>(r));
        } else {
            sofar.pop_back();
        }
    }
    return picked;
}

std::vector<Vec> orthogonal_basis(const std::vector<Vec>& vectors) {
    std::vector<Vec> basis;
    for (const Vec& v : vectors) {
        Vec w = v;
        for (const Vec& b : basis) {
            w -= b * (dot(v, b) / norm_sq(b));
        }
        if (!w.is_zero()) {
            basis.push_back(std::move(w));
        }
    }
    return basis;
}

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vectors, int dim) {
    Mat m;
    for (const Vec& v : vectors) {
        if (v.dim() != dim) {
            throw DomainError("orthogonal_complement: dimension mismatch");
        }
        m.push_back(v);
    }
    if (m.empty()) {
        std::vector<Vec> full;
        for (int i = 0; i < dim; ++i) {
            full.push_back(unit_vec(dim, i));
        }
        return full;
    }
    return orthogonal_basis(kernel_basis(m, dim));
}

} // namespace lazyvor
