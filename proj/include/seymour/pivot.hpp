#ifndef SEYMOUR_PIVOT_HPP
#define SEYMOUR_PIVOT_HPP

#include "seymour/matrix.hpp"

namespace seymour {

/// Pivot position; the entry at (row, col) must be nonzero.
struct PivotSpec {
    Label row;
    Label col;
};

/// Long tableau pivot: the pivot row is divided by the pivot entry and every
/// other row i is replaced by a(i,j) - a(i,col)*a(row,j)/a(row,col). Labels
/// are unchanged.
RatMatrix long_tableau_pivot(const RatMatrix& a, const PivotSpec& p);

/// Short tableau pivot via the four-case closed form. The pivot exchanges
/// the roles of its row and column: in the result the row label `p.row`
/// is replaced by `p.col` and vice versa.
RatMatrix short_tableau_pivot(const RatMatrix& a, const PivotSpec& p);

/// Short tableau pivot built from first principles: adjoin an identity
/// block, long-pivot, swap the two columns, drop the adjoined block. Kept
/// as an independent cross-check for the closed form.
RatMatrix short_tableau_pivot_constructive(const RatMatrix& a, const PivotSpec& p);

/// Fault-injection switch for the verification harness: flips the sign of
/// the Schur-update term in the closed-form short pivot. Never enabled in
/// normal operation.
void set_pivot_sign_mutation(bool enabled);
bool pivot_sign_mutation_enabled();

} // namespace seymour

#endif
