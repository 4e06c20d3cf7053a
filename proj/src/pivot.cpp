#include "seymour/pivot.hpp"

#include <atomic>

#include "seymour/errors.hpp"

namespace seymour {

namespace {

std::atomic<bool> g_mutate_pivot_sign{false};

struct PivotPos {
    std::size_t r;
    std::size_t c;
};

PivotPos locate(const RatMatrix& a, const PivotSpec& p) {
    const std::size_t r = a.row_index().pos(p.row);
    const std::size_t c = a.col_index().pos(p.col);
    if (a.at(r, c).is_zero())
        throw ZeroPivotError("pivot entry (" + p.row + ", " + p.col + ") is zero");
    return {r, c};
}

std::vector<Label> with_replaced(const std::vector<Label>& ls, std::size_t pos, Label l) {
    std::vector<Label> out = ls;
    out[pos] = std::move(l);
    return out;
}

} // namespace

void set_pivot_sign_mutation(bool enabled) { g_mutate_pivot_sign = enabled; }
bool pivot_sign_mutation_enabled() { return g_mutate_pivot_sign; }

RatMatrix long_tableau_pivot(const RatMatrix& a, const PivotSpec& p) {
    const auto [r, c] = locate(a, p);
    const Rat& pv = a.at(r, c);
    RatMatrix out(a.row_index(), a.col_index());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i == r)
                out.at(i, j) = a.at(i, j) / pv;
            else
                out.at(i, j) = a.at(i, j) - a.at(i, c) * a.at(r, j) / pv;
        }
    return out;
}

RatMatrix short_tableau_pivot(const RatMatrix& a, const PivotSpec& p) {
    const auto [r, c] = locate(a, p);
    const Rat& pv = a.at(r, c);
    const Rat schur_sign = g_mutate_pivot_sign ? Rat(-1) : Rat(1);
    RatMatrix out(LabelIndex(with_replaced(a.row_labels(), r, p.col)),
                  LabelIndex(with_replaced(a.col_labels(), c, p.row)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i == r && j == c)
                out.at(i, j) = Rat(1) / pv;
            else if (i == r)
                out.at(i, j) = a.at(i, j) / pv;
            else if (j == c)
                out.at(i, j) = -(a.at(i, j) / pv);
            else
                out.at(i, j) = a.at(i, j) - schur_sign * (a.at(i, c) * a.at(r, j) / pv);
        }
    return out;
}

RatMatrix short_tableau_pivot_constructive(const RatMatrix& a, const PivotSpec& p) {
    const auto [r, c] = locate(a, p);
    const std::size_t n = a.rows(), m = a.cols();

    // Work positionally on [1 | a]; the adjoined columns use tagged indices
    // so no label bookkeeping is needed until the end.
    std::vector<Rat> b(n * (n + m));
    for (std::size_t i = 0; i < n; ++i) {
        b[i * (n + m) + i] = Rat(1);
        for (std::size_t j = 0; j < m; ++j) b[i * (n + m) + n + j] = a.at(i, j);
    }

    const std::size_t pc = n + c; // pivot column inside [1 | a]
    const Rat pv = b[r * (n + m) + pc];
    std::vector<Rat> piv(n * (n + m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n + m; ++j) {
            if (i == r)
                piv[i * (n + m) + j] = b[i * (n + m) + j] / pv;
            else
                piv[i * (n + m) + j] =
                    b[i * (n + m) + j] - b[i * (n + m) + pc] * b[r * (n + m) + j] / pv;
        }

    // Swap columns r (identity side) and n+c, then drop the identity side.
    for (std::size_t i = 0; i < n; ++i) std::swap(piv[i * (n + m) + r], piv[i * (n + m) + pc]);

    RatMatrix out(LabelIndex(with_replaced(a.row_labels(), r, p.col)),
                  LabelIndex(with_replaced(a.col_labels(), c, p.row)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = piv[i * (n + m) + n + j];
    return out;
}

} // namespace seymour
