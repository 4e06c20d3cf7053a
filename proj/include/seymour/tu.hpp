#ifndef SEYMOUR_TU_HPP
#define SEYMOUR_TU_HPP

#include <map>
#include <optional>

#include "seymour/matrix.hpp"

namespace seymour {

/// A square submatrix whose determinant falls outside {0, +-1}. Rows and
/// columns are listed in ascending label order.
struct TuViolation {
    std::vector<Label> rows;
    std::vector<Label> cols;
    Rat det;
};

struct TuReport {
    bool is_tu = false;
    std::optional<TuViolation> witness; // present iff !is_tu
    std::size_t minors_checked = 0;
};

struct TuOptions {
    /// Exhaustive enumeration budget; exceeding it raises SizeLimitError.
    std::size_t max_minors = 20'000'000;
};

/// Exhaustive total-unimodularity check. Enumerates injective square
/// submatrices by increasing order, rows and columns in ascending label
/// order, and stops at the first violation, so the witness is the
/// lexicographically first one in (k, rows, cols) order.
TuReport is_tu(const RatMatrix& a, const TuOptions& opts = {});

/// k-partial unimodularity: every k x k selection, including non-injective
/// ones, has determinant in {0, +-1}. Selections that repeat a row or column
/// have zero determinant and are skipped analytically.
TuReport is_k_pu(const RatMatrix& a, std::size_t k, const TuOptions& opts = {});

/// Entrywise row scaling by {0, +-1} factors; `factors` must cover every row
/// label. scale_cols is the column analogue.
RatMatrix scale_rows(const RatMatrix& a, const std::map<Label, int>& factors);
RatMatrix scale_cols(const RatMatrix& a, const std::map<Label, int>& factors);

/// |q(i,j)| = b(i,j) for all entries; label sets must agree.
bool is_signing_of(const RatMatrix& q, const BinMatrix& b);

/// A rational {0,+-1} matrix that is TU and whose support is `of`.
struct Signing {
    RatMatrix signed_matrix;
    BinMatrix of;
};

struct SigningOptions {
    /// Nonzero-count cap for the exhaustive fallback search.
    std::size_t fallback_nonzero_limit = 25;
    /// Node budget for the backtracking search.
    std::size_t max_search_nodes = 2'000'000;
    TuOptions tu;
};

/// Search for a TU signing of a GF(2) matrix. The forced candidate (spanning
/// forest fixed to +1, remaining signs propagated through all-nonzero 2x2
/// submatrices) is tried first; if it fails the TU check, an exhaustive
/// backtracking search with incremental 2x2 pruning either finds a signing
/// or proves none exists. Deterministic for fixed input.
std::optional<Signing> find_tu_signing(const BinMatrix& b, const SigningOptions& opts = {});

} // namespace seymour

#endif
