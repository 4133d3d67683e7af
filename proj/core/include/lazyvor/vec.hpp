#ifndef LAZYVOR_VEC_HPP
#define LAZYVOR_VEC_HPP

#include "lazyvor/rational.hpp"

#include <compare>
#include <initializer_list>
#include <vector>

namespace lazyvor {

/// Exact rational vector in a fixed ambient dimension. Doubles as a point;
/// Euclidean norms are never materialized, only squared norms.
class Vec {
public:
    Vec() = default;
    explicit Vec(int dim) : coords_(static_cast<size_t>(dim)) {}
    explicit Vec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Vec(std::initializer_list<Rational> coords) : coords_(coords) {}

    int dim() const { return static_cast<int>(coords_.size()); }
    const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec operator*(const Rational& s) const;
    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);

    bool operator==(const Vec& o) const { return coords_ == o.coords_; }

private:
    std::vector<Rational> coords_;
};

using Point = Vec;

Rational dot(const Vec& a, const Vec& b);
Rational norm_sq(const Vec& v);
Rational dist_sq(const Point& a, const Point& b);

/// max_i |v_i|, the max-coordinate norm used by growth bounds.
Rational max_norm(const Vec& v);

/// Lexicographic order; the tie-breaking order used everywhere determinism
/// matters.
bool lex_less(const Vec& a, const Vec& b);

std::string to_string(const Vec& v);

/// Unit basis vector e_i of the given dimension.
Vec unit_vec(int dim, int i);

void sort_points_lex(std::vector<Point>& points);

} // namespace lazyvor

#endif
