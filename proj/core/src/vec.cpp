#include "lazyvor/vec.hpp"
#include "lazyvor/errors.hpp"

#include <algorithm>
#include <cassert>

namespace lazyvor {

bool Vec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational& c) { return c == 0; });
}

Vec Vec::operator+(const Vec& o) const {
    Vec r = *this;
    r += o;
    return r;
}

Vec Vec::operator-(const Vec& o) const {
    Vec r = *this;
    r -= o;
    return r;
}

Vec Vec::operator-() const {
    Vec r = *this;
    for (auto& c : r.coords_) {
        c = -c;
    }
    return r;
}

Vec Vec::operator*(const Rational& s) const {
    Vec r = *this;
    for (auto& c : r.coords_) {
        c *= s;
    }
    return r;
}

Vec& Vec::operator+=(const Vec& o) {
    assert(dim() == o.dim());
    for (size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += o.coords_[i];
    }
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    assert(dim() == o.dim());
    for (size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= o.coords_[i];
    }
    return *this;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("dot: dimension mismatch");
    }
    Rational s(0);
    for (int i = 0; i < a.dim(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Rational norm_sq(const Vec& v) {
    return dot(v, v);
}

Rational dist_sq(const Point& a, const Point& b) {
    return norm_sq(a - b);
}

Rational max_norm(const Vec& v) {
    Rational m(0);
    for (int i = 0; i < v.dim(); ++i) {
        Rational a = v[i] < 0 ? Rational(-v[i]) : v[i];
        if (a > m) {
            m = a;
        }
    }
    return m;
}

bool lex_less(const Vec& a, const Vec& b) {
    const int n = std::min(a.dim(), b.dim());
    for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return a.dim() < b.dim();
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (int i = 0; i < v.dim(); ++i) {
        if (i) {
            s += ", ";
        }
        s += to_string(v[i]);
    }
    s += ")";
    return s;
}

Vec unit_vec(int dim, int i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

void sort_points_lex(std::vector<Point>& points) {
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

} // namespace lazyvor
