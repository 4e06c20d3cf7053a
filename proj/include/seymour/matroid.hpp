#ifndef SEYMOUR_MATROID_HPP
#define SEYMOUR_MATROID_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "seymour/matrix.hpp"
#include "seymour/tu.hpp"

namespace seymour {

/// Finite matroid as an independence oracle over a fixed ground ordering.
/// Subsets are bitmasks over ground positions, which caps the ground size at
/// 32 elements; exhaustive operations impose tighter limits of their own.
class Matroid {
public:
    Matroid(std::vector<Label> ground, std::function<bool(std::uint32_t)> indep,
            std::string provenance);

    const std::vector<Label>& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    const std::string& provenance() const { return provenance_; }

    bool indep_mask(std::uint32_t mask) const { return indep_(mask); }
    bool indep(const std::vector<Label>& subset) const { return indep_(mask_of(subset)); }

    std::uint32_t mask_of(const std::vector<Label>& subset) const;
    std::vector<Label> labels_of(std::uint32_t mask) const;

    /// Matroid rank, by greedy extension over the ground ordering.
    std::size_t rank() const;

private:
    std::vector<Label> ground_;
    std::unordered_map<Label, std::size_t> pos_;
    std::function<bool(std::uint32_t)> indep_;
    std::string provenance_;
};

/// Column matroid: a set of columns is independent when they are linearly
/// independent over the matrix's field.
Matroid vector_matroid(const RatMatrix& a);
Matroid vector_matroid(const BinMatrix& a);

/// Matrix B with disjoint row set X and column set Y, denoting the vector
/// matroid of [1 | B] on ground X then Y.
struct StandardReprQ {
    explicit StandardReprQ(RatMatrix m);
    const std::vector<Label>& x() const { return b.row_labels(); }
    const std::vector<Label>& y() const { return b.col_labels(); }
    RatMatrix b;
};

struct StandardReprB {
    explicit StandardReprB(BinMatrix m);
    const std::vector<Label>& x() const { return b.row_labels(); }
    const std::vector<Label>& y() const { return b.col_labels(); }
    BinMatrix b;
};

/// The identity-adjoined matrix [1 | B] with columns X then Y.
RatMatrix identity_adjoined(const StandardReprQ& s);
BinMatrix identity_adjoined(const StandardReprB& s);

Matroid standard_repr_matroid(const StandardReprQ& s);
Matroid standard_repr_matroid(const StandardReprB& s);

bool is_base(const Matroid& m, const std::vector<Label>& subset);
/// Greedy base in ascending label order.
std::vector<Label> find_base(const Matroid& m);

/// Pivot a TU matrix into standard form at the given base: base columns
/// become an identity (rows relabeled by the base column they carry), zero
/// rows are dropped, and the returned B consists of the non-base columns.
StandardReprQ standardize(const RatMatrix& a, const std::vector<Label>& base,
                          const TuOptions& opts = {});

/// Dual standard representation: rows and columns swap roles and the matrix
/// becomes -B^T (over GF(2) simply B^T).
StandardReprQ dual_repr(const StandardReprQ& s);
StandardReprB dual_repr(const StandardReprB& s);

/// Dual matroid built from the base-complement definition: a set is
/// independent in the dual iff it avoids some base of `m`. Deliberately
/// independent of dual_repr so the two can cross-check each other.
Matroid dual_matroid(const Matroid& m);

/// Oracle equality over every subset; grounds must be equal as sets.
bool matroids_equal(const Matroid& m1, const Matroid& m2);

/// Over GF(2) a standard representation equals its own support, so two
/// representations with the same X and Y agree iff the matrices are equal.
bool same_support_check(const StandardReprB& s1, const StandardReprB& s2);

/// Exhaustive verification of the finite matroid axioms: the empty set is
/// independent, independence is downward closed, and every non-maximal
/// independent set extends by an element of any maximal one.
struct MatroidAxiomReport {
    bool empty_independent = false;
    bool downward_closed = false;
    bool exchange = false;
    bool all() const { return empty_independent && downward_closed && exchange; }
};
MatroidAxiomReport check_matroid_axioms(const Matroid& m);

} // namespace seymour

#endif
