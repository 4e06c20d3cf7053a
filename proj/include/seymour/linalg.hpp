#ifndef SEYMOUR_LINALG_HPP
#define SEYMOUR_LINALG_HPP

#include <cstddef>

#include "seymour/matrix.hpp"

namespace seymour {

/// Exact determinant by fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix. The empty matrix has determinant 1.
Rat det(const RatMatrix& m);

/// Rank over the rationals, by exact elimination.
std::size_t rank(const RatMatrix& m);
/// Rank over GF(2), by bit-packed elimination.
std::size_t rank(const BinMatrix& m);

/// Which canonical invertible form a 2x2 GF(2) matrix matches after
/// permuting rows/columns: the identity grid [[1,0],[0,1]] or the
/// triangular grid [[1,1],[0,1]].
struct Gf2TwoByTwoClass {
    enum class Form { IdentityLike, TriangularLike, Singular };
    Form form = Form::Singular;
    bool row_swap = false;
    bool col_swap = false;
};

Gf2TwoByTwoClass classify_invertible_2x2_gf2(const BinMatrix& d0);

/// Inverse of an invertible 2x2 GF(2) matrix. Row labels of the result are
/// the input's column labels and vice versa, so label-aligned products
/// d0 * inverse and inverse * d0 are identities.
BinMatrix gf2_inverse_2x2(const BinMatrix& d0);

/// Label-aligned products: columns of `a` and rows of `b` must carry the
/// same label set (any order).
BinMatrix gf2_mul(const BinMatrix& a, const BinMatrix& b);
RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);

/// Exact inverse of a 2x2 rational matrix, with row/column labels swapped
/// so label-aligned products with the input give identities.
RatMatrix rat_inverse_2x2(const RatMatrix& m);

} // namespace seymour

#endif
