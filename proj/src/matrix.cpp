#include "seymour/matrix.hpp"

#include <algorithm>

#include "seymour/errors.hpp"

namespace seymour {

namespace {

void check_label(const Label& l) {
    if (l.empty()) throw BadLabelError("empty label");
    for (char c : l)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            throw BadLabelError("label contains whitespace: '" + l + "'");
}

} // namespace

LabelIndex::LabelIndex(std::vector<Label> labels, bool allow_duplicates)
    : order_(std::move(labels)) {
    map_.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        check_label(order_[i]);
        auto [it, inserted] = map_.emplace(order_[i], i);
        if (!inserted) {
            if (!allow_duplicates)
                throw DuplicateLabelError("duplicate label: '" + order_[i] + "'");
            dups_ = true;
        }
    }
}

std::size_t LabelIndex::pos(const Label& l) const {
    auto it = map_.find(l);
    if (it == map_.end()) throw UnknownLabelError("unknown label: '" + l + "'");
    return it->second;
}

std::optional<std::size_t> LabelIndex::find(const Label& l) const {
    auto it = map_.find(l);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

RatMatrix::RatMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels)
    : rows_(std::move(row_labels)), cols_(std::move(col_labels)),
      e_(rows_.size() * cols_.size()) {}

RatMatrix::RatMatrix(LabelIndex rows, LabelIndex cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), e_(rows_.size() * cols_.size()) {}

RatMatrix RatMatrix::identity(std::vector<Label> labels) {
    RatMatrix m(labels, labels);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::from_rows(std::vector<Label> row_labels, std::vector<Label> col_labels,
                               const std::vector<std::vector<Rat>>& entries) {
    RatMatrix m(std::move(row_labels), std::move(col_labels));
    if (entries.size() != m.rows()) throw Error("row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (entries[i].size() != m.cols()) throw Error("column count mismatch");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entries[i][j];
    }
    return m;
}

namespace {

void put(RatMatrix& m, std::size_t i, std::size_t j, const Rat& v) { m.at(i, j) = v; }
void put(BinMatrix& m, std::size_t i, std::size_t j, int v) { m.set(i, j, v); }

template <class M>
M extract(const M& src, const std::vector<Label>& rs, const std::vector<Label>& cs,
          bool multiset) {
    std::vector<std::size_t> ri, ci;
    ri.reserve(rs.size());
    ci.reserve(cs.size());
    for (const auto& l : rs) ri.push_back(src.row_index().pos(l));
    for (const auto& l : cs) ci.push_back(src.col_index().pos(l));
    M out(LabelIndex(rs, multiset), LabelIndex(cs, multiset));
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j)
            put(out, i, j, src.at(ri[i], ci[j]));
    return out;
}

} // namespace

RatMatrix RatMatrix::submatrix(const std::vector<Label>& rs, const std::vector<Label>& cs) const {
    return extract(*this, rs, cs, false);
}

RatMatrix RatMatrix::submatrix_multiset(const std::vector<Label>& rs,
                                        const std::vector<Label>& cs) const {
    return extract(*this, rs, cs, true);
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::entries_in_unit_range() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& r) { return r.is_unit_or_zero(); });
}

BinMatrix::BinMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels)
    : BinMatrix(LabelIndex(std::move(row_labels)), LabelIndex(std::move(col_labels))) {}

BinMatrix::BinMatrix(LabelIndex rows, LabelIndex cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
    wpr_ = (cols_.size() + 63) / 64;
    w_.assign(rows_.size() * wpr_, 0);
}

BinMatrix BinMatrix::identity(std::vector<Label> labels) {
    BinMatrix m(labels, labels);
    for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, i, 1);
    return m;
}

BinMatrix BinMatrix::from_rows(std::vector<Label> row_labels, std::vector<Label> col_labels,
                               const std::vector<std::vector<int>>& entries) {
    BinMatrix m(std::move(row_labels), std::move(col_labels));
    if (entries.size() != m.rows()) throw Error("row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (entries[i].size() != m.cols()) throw Error("column count mismatch");
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, entries[i][j]);
    }
    return m;
}

void BinMatrix::add_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t k = 0; k < wpr_; ++k) w_[dst * wpr_ + k] ^= w_[src * wpr_ + k];
}

BinMatrix BinMatrix::submatrix(const std::vector<Label>& rs, const std::vector<Label>& cs) const {
    return extract(*this, rs, cs, false);
}

BinMatrix BinMatrix::submatrix_multiset(const std::vector<Label>& rs,
                                        const std::vector<Label>& cs) const {
    return extract(*this, rs, cs, true);
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) t.set(j, i, at(i, j));
    return t;
}

std::size_t BinMatrix::count_nonzero() const {
    std::size_t n = 0;
    for (auto word : w_) n += static_cast<std::size_t>(__builtin_popcountll(word));
    return n;
}

bool BinMatrix::operator==(const BinMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
}

BinMatrix support(const RatMatrix& m) {
    BinMatrix s(m.row_index(), m.col_index());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) s.set(i, j, 1);
    return s;
}

BinMatrix support(const BinMatrix& m) { return m; }

RatMatrix to_rat(const BinMatrix& m) {
    RatMatrix q(m.row_index(), m.col_index());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) q.at(i, j) = Rat(1);
    return q;
}

} // namespace seymour
