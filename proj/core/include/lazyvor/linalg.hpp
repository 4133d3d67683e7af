#ifndef LAZYVOR_LINALG_HPP
#define LAZYVOR_LINALG_HPP

#include "lazyvor/vec.hpp"

#include <optional>
#include <vector>

namespace lazyvor {

/// Dense rational matrix stored as rows. Small and exact; everything here is
/// plain fraction-free-enough Gaussian elimination at desk scale.
using Mat = std::vector<Vec>;

int rank(Mat m);

/// Basis of { x : A x = 0 }.
std::vector<Vec> kernel_basis(const Mat& a, int cols);

/// Solves A x = b exactly. Returns nullopt if inconsistent; if the system is
/// underdetermined, returns one particular solution (free variables at 0).
std::optional<Vec> solve_linear(const Mat& a, const Vec& b, int cols);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

/// Indices of a maximal linearly independent subset of the rows, greedily
/// from the front.
std::vector<int> independent_rows(const Mat& a);

/// Pairwise-orthogonal (not normalized) basis of span(vectors), by
/// Gram-Schmidt over the rationals.
std::vector<Vec> orthogonal_basis(const std::vector<Vec>& vectors);

/// Orthogonal basis of the orthogonal complement of span(vectors) in E^dim.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vectors, int dim);

} // namespace lazyvor

#endif
