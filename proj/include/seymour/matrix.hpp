#ifndef SEYMOUR_MATRIX_HPP
#define SEYMOUR_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "seymour/rat.hpp"

namespace seymour {

/// Row/column identifier. Whitespace-free, nonempty, totally ordered by the
/// usual string order.
using Label = std::string;

/// Ordered list of labels with constant-time position lookup. Labels are
/// pairwise distinct unless the permissive flag is set (multiset submatrix
/// extraction is the only producer of duplicates).
class LabelIndex {
public:
    LabelIndex() = default;
    explicit LabelIndex(std::vector<Label> labels, bool allow_duplicates = false);

    std::size_t size() const { return order_.size(); }
    const Label& at(std::size_t i) const { return order_[i]; }
    const std::vector<Label>& labels() const { return order_; }

    std::size_t pos(const Label& l) const;
    std::optional<std::size_t> find(const Label& l) const;
    bool contains(const Label& l) const { return map_.count(l) != 0; }
    bool has_duplicates() const { return dups_; }

    bool operator==(const LabelIndex& o) const { return order_ == o.order_; }

private:
    std::vector<Label> order_;
    std::unordered_map<Label, std::size_t> map_; // first occurrence wins
    bool dups_ = false;
};

/// Dense matrix over the rationals with labeled rows and columns. Lookups and
/// all structural operations (submatrices, sums, pivots) are label-driven;
/// positions are an implementation detail of the storage.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels);
    RatMatrix(LabelIndex rows, LabelIndex cols);

    static RatMatrix identity(std::vector<Label> labels);
    static RatMatrix from_rows(std::vector<Label> row_labels, std::vector<Label> col_labels,
                               const std::vector<std::vector<Rat>>& entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_.size(); }
    const LabelIndex& row_index() const { return rows_; }
    const LabelIndex& col_index() const { return cols_; }
    const std::vector<Label>& row_labels() const { return rows_.labels(); }
    const std::vector<Label>& col_labels() const { return cols_.labels(); }

    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols() + j]; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols() + j]; }
    const Rat& get(const Label& r, const Label& c) const { return at(rows_.pos(r), cols_.pos(c)); }
    void set(const Label& r, const Label& c, Rat v) { at(rows_.pos(r), cols_.pos(c)) = std::move(v); }

    RatMatrix submatrix(const std::vector<Label>& rs, const std::vector<Label>& cs) const;
    /// Multiset mode: repeated labels permitted; the result carries the
    /// duplicates and supports no further label lookup beyond first-match.
    RatMatrix submatrix_multiset(const std::vector<Label>& rs, const std::vector<Label>& cs) const;

    RatMatrix transpose() const;
    bool is_square() const { return rows() == cols(); }
    bool entries_in_unit_range() const; // all entries in {0, +-1}

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    LabelIndex rows_, cols_;
    std::vector<Rat> e_;
};

/// Dense GF(2) matrix with labeled rows and columns; rows are bit-packed.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels);
    BinMatrix(LabelIndex rows, LabelIndex cols);

    static BinMatrix identity(std::vector<Label> labels);
    static BinMatrix from_rows(std::vector<Label> row_labels, std::vector<Label> col_labels,
                               const std::vector<std::vector<int>>& entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_.size(); }
    const LabelIndex& row_index() const { return rows_; }
    const LabelIndex& col_index() const { return cols_; }
    const std::vector<Label>& row_labels() const { return rows_.labels(); }
    const std::vector<Label>& col_labels() const { return cols_.labels(); }

    int at(std::size_t i, std::size_t j) const {
        return static_cast<int>((w_[i * wpr_ + j / 64] >> (j % 64)) & 1u);
    }
    void set(std::size_t i, std::size_t j, int v) {
        auto& word = w_[i * wpr_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        if (v & 1) word |= bit; else word &= ~bit;
    }
    int get(const Label& r, const Label& c) const { return at(rows_.pos(r), cols_.pos(c)); }
    void set(const Label& r, const Label& c, int v) { set(rows_.pos(r), cols_.pos(c), v); }

    /// XOR row `src` into row `dst` (in-place row reduction step).
    void add_row_into(std::size_t src, std::size_t dst);

    BinMatrix submatrix(const std::vector<Label>& rs, const std::vector<Label>& cs) const;
    BinMatrix submatrix_multiset(const std::vector<Label>& rs, const std::vector<Label>& cs) const;
    BinMatrix transpose() const;
    std::size_t count_nonzero() const;

    bool operator==(const BinMatrix& o) const;

private:
    LabelIndex rows_, cols_;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Entrywise zero/nonzero indicator, labels preserved.
BinMatrix support(const RatMatrix& m);
/// A GF(2) matrix is its own support.
BinMatrix support(const BinMatrix& m);
/// 0/1 embedding of a GF(2) matrix into the rationals.
RatMatrix to_rat(const BinMatrix& m);

} // namespace seymour

#endif
