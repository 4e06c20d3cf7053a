#ifndef SEYMOUR_SUMS_HPP
#define SEYMOUR_SUMS_HPP

#include <string>

#include "seymour/linalg.hpp"
#include "seymour/matroid.hpp"

namespace seymour {

/// 1-sum: block diagonal of two standard representations on pairwise
/// disjoint label sets.
StandardReprB sum1(const StandardReprB& l, const StandardReprB& r);
StandardReprQ sum1(const StandardReprQ& l, const StandardReprQ& r);

/// 2-sum: left loses row x, right loses column y, and the lower-left block
/// is the outer product of the right's y-column with the left's x-row.
StandardReprB sum2(const StandardReprB& l, const StandardReprB& r, const Label& x,
                   const Label& y);
StandardReprQ sum2(const StandardReprQ& l, const StandardReprQ& r, const Label& x,
                   const Label& y);

/// The six distinguished labels of a 3-sum and the four remaining blocks of
/// row/column labels. The primed lists may be derived from the matrices.
struct Sum3Frame {
    Label x0, x1, x2;
    Label y0, y1, y2;
    std::vector<Label> xl_prime, xr_prime, yl_prime, yr_prime;
};

/// Validated 3-sum inputs with extracted blocks. `canonical_frame` swaps
/// x0/x1 and/or y0/y1 of `frame` so that D0, read with rows (x0, x1) and
/// columns (y0, y1), is exactly one of the two canonical invertible grids.
struct Sum3Blocks {
    Sum3Frame frame;
    Sum3Frame canonical_frame;
    Gf2TwoByTwoClass::Form d0_form = Gf2TwoByTwoClass::Form::Singular;
    bool swapped_rows = false;
    bool swapped_cols = false;

    BinMatrix bl, br;
    BinMatrix al; // rows Xl' + x2, cols Yl' + (y0 y1); includes the 1,1 border
    BinMatrix ar; // rows (x1 x0) + Xr', cols y2 + Yr'; includes the 1,1 border
    BinMatrix dl; // rows (x1 x0), cols Yl'
    BinMatrix dr; // rows Xr', cols (y0 y1)
    BinMatrix d0; // rows (x0 x1), cols (y0 y1)
};

/// Check every border and shape condition of the 3-sum definition, in the
/// fixed order: frame consistency, D0 invertibility, D0 agreement, x2-row
/// patterns, y2-column patterns. Throws PatternViolationError naming the
/// first failed condition.
Sum3Blocks validate_sum3(const StandardReprB& bl, const StandardReprB& br,
                         const Sum3Frame& frame);

/// Assemble the 3-sum over GF(2): rows Xl', x2, x1, x0, Xr'; columns Yl',
/// y0, y1, y2, Yr'; lower-left block [[Dl, D0], [Dlr, Dr]] with
/// Dlr = Dr * D0^-1 * Dl.
StandardReprB sum3(const Sum3Blocks& blocks);

/// Canonical signing of a canonical 2x2 GF(2) grid: [[1,0],[0,1]] maps to
/// [[1,0],[0,-1]] and [[1,1],[0,1]] to itself. Labels preserved.
RatMatrix canonical_signing_2x2(const BinMatrix& d0);

/// Same at the bordered 3x3 level: rows (x2, x0, x1), columns (y0, y1, y2),
/// first row (1,1,0), last column (0,1,1), bottom-left 2x2 canonical.
RatMatrix canonical_signing_3x3(const BinMatrix& s);

/// Canonical re-signing: multiply rows and columns by the +-1 factors read
/// off the six distinguished positions, so that the 3x3 corner of a TU
/// signing of an S-patterned matrix becomes the canonical S'. Entries used
/// as factors must be nonzero.
RatMatrix canonical_resign(const RatMatrix& q, const Label& x2, const Label& x1,
                           const Label& x0, const Label& y0, const Label& y1, const Label& y2);

struct Sum3CanonicalSigning {
    RatMatrix b;        // the assembled signing of the GF(2) 3-sum
    RatMatrix bl, br;   // canonically re-signed summands
    Sum3Blocks blocks;  // validated GF(2) side
};

/// The full canonical-signing pipeline: validate the GF(2) patterns of the
/// supports, canonically re-sign both TU signings, extract the rational
/// blocks, compute Dlr over the rationals, and assemble B''.
Sum3CanonicalSigning canonical_signing_sum3(const RatMatrix& bl_signed,
                                            const RatMatrix& br_signed,
                                            const Sum3Frame& frame);

/// Parameters of the structured matrix family used by the 3-sum TU proof:
/// a partition into [[Al, 0], [D, Ar]] plus two designated rows x0, x1 and
/// column vectors c0, c1 on the lower row block.
struct Mls3Class {
    std::vector<Label> xl, yl; // upper-left row/column blocks
    std::vector<Label> xr, yr; // lower-right blocks, x0/x1 excluded from xr
    Label x0, x1;
    RatMatrix c0, c1; // single-column matrices on rows xr + {x1, x0}
};

struct Mls3Report {
    bool shape = false;        // partition and zero upper-right block
    bool left_tu = false;      // [Al; D] is TU
    bool d_columns = false;    // D columns on xr lie in {0, +-c0, +-c1, +-(c0-c1)}
    bool bottom_tu = false;    // [c0 c1 c0-c1 Ar] is TU
    bool aux_tu = false;       // bordered [Al 0; D(x0,yl) 1; D(x1,yl) 1] is TU
    bool c0_endpoints = false; // c0(x0) = 1, c0(x1) = 0
    bool c1_endpoints = false; // c1 endpoints match one of the two allowed pairs
    std::string first_failure;
    bool all() const {
        return shape && left_tu && d_columns && bottom_tu && aux_tu && c0_endpoints &&
               c1_endpoints;
    }
};

Mls3Report in_mls3_class(const RatMatrix& c, const Mls3Class& cls, const TuOptions& opts = {});

/// The class parameters the canonical signing of a valid 3-sum belongs to.
Mls3Class mls3_class_of(const Sum3CanonicalSigning& cs);

} // namespace seymour

#endif
