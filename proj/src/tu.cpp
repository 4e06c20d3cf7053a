#include "seymour/tu.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "seymour/errors.hpp"
#include "seymour/linalg.hpp"

namespace seymour {

namespace {

std::vector<std::size_t> positions_sorted_by_label(const LabelIndex& idx) {
    std::vector<std::size_t> p(idx.size());
    std::iota(p.begin(), p.end(), 0);
    std::sort(p.begin(), p.end(),
              [&](std::size_t a, std::size_t b) { return idx.at(a) < idx.at(b); });
    return p;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Fraction-free determinant of a selection from a {0,+-1} grid. Intermediate
// values are minors of the selection, bounded by Hadamard's inequality, so
// int64 is exact far beyond the sizes the enumeration budget allows.
std::int64_t det_unit_selection(const std::vector<int>& grid, std::size_t stride,
                                const std::vector<std::size_t>& rs,
                                const std::vector<std::size_t>& cs) {
    const std::size_t k = rs.size();
    std::int64_t a[20 * 20];
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i * k + j] = grid[rs[i] * stride + cs[j]];

    std::int64_t sign = 1, prev = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a[p * k + p] == 0) {
            std::size_t q = p + 1;
            while (q < k && a[q * k + p] == 0) ++q;
            if (q == k) return 0;
            for (std::size_t j = p; j < k; ++j) std::swap(a[p * k + j], a[q * k + j]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j)
                a[i * k + j] = (a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j]) / prev;
            a[i * k + p] = 0;
        }
        prev = a[p * k + p];
    }
    return sign * a[(k - 1) * k + (k - 1)];
}

struct Enumerator {
    const RatMatrix& m;
    const TuOptions& opts;
    std::vector<std::size_t> sr, sc; // positions in ascending label order
    std::vector<int> grid;           // entries in sorted order, valid after scan
    TuReport report;

    Enumerator(const RatMatrix& a, const TuOptions& o)
        : m(a), opts(o), sr(positions_sorted_by_label(a.row_index())),
          sc(positions_sorted_by_label(a.col_index())) {}

    void charge() {
        if (++report.minors_checked > opts.max_minors)
            throw SizeLimitError("minor enumeration budget exceeded");
    }

    // Order 1: the entries themselves. Also fills the integer grid used by
    // the higher orders; any non-unit entry is the first witness.
    bool scan_entries() {
        grid.assign(sr.size() * sc.size(), 0);
        for (std::size_t i = 0; i < sr.size(); ++i)
            for (std::size_t j = 0; j < sc.size(); ++j) {
                charge();
                const Rat& v = m.at(sr[i], sc[j]);
                if (!v.is_unit_or_zero()) {
                    report.witness = TuViolation{{m.row_index().at(sr[i])},
                                                 {m.col_index().at(sc[j])},
                                                 v};
                    return false;
                }
                grid[i * sc.size() + j] = v.sign();
            }
        return true;
    }

    // Orders >= 2 assume scan_entries passed, so the grid is exact.
    bool scan_order(std::size_t k) {
        std::vector<std::size_t> rc(k), cc(k);
        std::iota(rc.begin(), rc.end(), 0);
        do {
            std::iota(cc.begin(), cc.end(), 0);
            do {
                charge();
                const std::int64_t d = det_unit_selection(grid, sc.size(), rc, cc);
                if (d < -1 || d > 1) {
                    TuViolation w;
                    for (auto i : rc) w.rows.push_back(m.row_index().at(sr[i]));
                    for (auto j : cc) w.cols.push_back(m.col_index().at(sc[j]));
                    w.det = Rat(d);
                    report.witness = std::move(w);
                    return false;
                }
            } while (next_combination(cc, sc.size()));
        } while (next_combination(rc, sr.size()));
        return true;
    }
};

} // namespace

TuReport is_tu(const RatMatrix& a, const TuOptions& opts) {
    Enumerator e(a, opts);
    if (!e.scan_entries()) {
        e.report.is_tu = false;
        return e.report;
    }
    const std::size_t kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 2; k <= kmax; ++k)
        if (!e.scan_order(k)) {
            e.report.is_tu = false;
            return e.report;
        }
    e.report.is_tu = true;
    return e.report;
}

TuReport is_k_pu(const RatMatrix& a, std::size_t k, const TuOptions& opts) {
    TuReport out;
    if (k == 0 || k > std::min(a.rows(), a.cols())) {
        // Every selection repeats a row or column (or is empty), so all
        // determinants vanish.
        out.is_tu = true;
        return out;
    }
    if (a.entries_in_unit_range()) {
        Enumerator e(a, opts);
        if (!e.scan_entries()) {
            out = e.report;
            out.is_tu = false;
            return out;
        }
        if (k == 1) {
            e.report.is_tu = true;
            return e.report;
        }
        e.report.minors_checked = 0;
        e.report.is_tu = e.scan_order(k);
        return e.report;
    }

    // General rational entries: enumerate injective selections with the
    // exact determinant.
    const auto sr = positions_sorted_by_label(a.row_index());
    const auto sc = positions_sorted_by_label(a.col_index());
    std::vector<std::size_t> rc(k), cc(k);
    std::iota(rc.begin(), rc.end(), 0);
    do {
        std::iota(cc.begin(), cc.end(), 0);
        do {
            if (++out.minors_checked > opts.max_minors)
                throw SizeLimitError("minor enumeration budget exceeded");
            std::vector<Label> rl, cl;
            for (auto i : rc) rl.push_back(a.row_index().at(sr[i]));
            for (auto j : cc) cl.push_back(a.col_index().at(sc[j]));
            const Rat d = det(a.submatrix(rl, cl));
            if (!d.is_unit_or_zero()) {
                out.witness = TuViolation{std::move(rl), std::move(cl), d};
                out.is_tu = false;
                return out;
            }
        } while (next_combination(cc, sc.size()));
    } while (next_combination(rc, sr.size()));
    out.is_tu = true;
    return out;
}

namespace {

RatMatrix scale_axis(const RatMatrix& a, const std::map<Label, int>& factors, bool rows) {
    const LabelIndex& idx = rows ? a.row_index() : a.col_index();
    for (const auto& [l, f] : factors) {
        if (!idx.contains(l)) throw UnknownLabelError("factor for unknown label: '" + l + "'");
        if (f < -1 || f > 1) throw BadFactorError("factor must be in {0, +-1}");
    }
    std::vector<int> f(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto it = factors.find(idx.at(i));
        if (it == factors.end())
            throw BadFactorError("no factor given for label: '" + idx.at(i) + "'");
        f[i] = it->second;
    }
    RatMatrix out(a.row_index(), a.col_index());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) * Rat(rows ? f[i] : f[j]);
    return out;
}

} // namespace

RatMatrix scale_rows(const RatMatrix& a, const std::map<Label, int>& factors) {
    return scale_axis(a, factors, true);
}

RatMatrix scale_cols(const RatMatrix& a, const std::map<Label, int>& factors) {
    return scale_axis(a, factors, false);
}

bool is_signing_of(const RatMatrix& q, const BinMatrix& b) {
    auto same_set = [](const std::vector<Label>& x, const std::vector<Label>& y) {
        auto xs = x, ys = y;
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        return xs == ys;
    };
    if (!same_set(q.row_labels(), b.row_labels()) || !same_set(q.col_labels(), b.col_labels()))
        throw LabelMismatchError("signing comparison needs equal label sets");
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            const Rat& v = q.at(i, j);
            const int bit = b.get(q.row_labels()[i], q.col_labels()[j]);
            if (v.is_zero() ? bit != 0 : (!v.is_unit_or_zero() || bit != 1)) return false;
        }
    return true;
}

namespace {

struct Nonzero {
    std::size_t r, c;
};

// Sign propagation: inside a TU matrix every all-nonzero 2x2 submatrix has
// determinant 0, which fixes the fourth sign once three are known.
void propagate_forced(const BinMatrix& b, std::vector<int>& sign, std::size_t cols) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b.at(i, j) || sign[i * cols + j] != 0) continue;
                for (std::size_t i2 = 0; i2 < b.rows() && sign[i * cols + j] == 0; ++i2) {
                    if (i2 == i || !b.at(i2, j) || sign[i2 * cols + j] == 0) continue;
                    for (std::size_t j2 = 0; j2 < cols; ++j2) {
                        if (j2 == j || !b.at(i, j2) || !b.at(i2, j2)) continue;
                        const int s1 = sign[i * cols + j2];
                        const int s2 = sign[i2 * cols + j2];
                        if (s1 == 0 || s2 == 0) continue;
                        sign[i * cols + j] = s1 * s2 * sign[i2 * cols + j];
                        changed = true;
                        break;
                    }
                }
            }
    }
}

std::vector<int> forced_candidate(const BinMatrix& b) {
    const std::size_t R = b.rows(), C = b.cols();
    std::vector<int> sign(R * C, 0);

    // Spanning forest of the bipartite nonzero graph, explored in ascending
    // label order; forest entries are pinned to +1.
    const auto sr = positions_sorted_by_label(b.row_index());
    const auto sc = positions_sorted_by_label(b.col_index());
    std::vector<char> seen_row(R, 0), seen_col(C, 0);
    std::vector<std::pair<char, std::size_t>> queue; // ('r', i) or ('c', j)

    auto visit_from = [&](char kind, std::size_t start) {
        queue.clear();
        queue.push_back({kind, start});
        (kind == 'r' ? seen_row[start] : seen_col[start]) = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto [k, v] = queue[head];
            if (k == 'r') {
                for (auto j : sc)
                    if (b.at(v, j) && !seen_col[j]) {
                        seen_col[j] = 1;
                        sign[v * C + j] = 1;
                        queue.push_back({'c', j});
                    }
            } else {
                for (auto i : sr)
                    if (b.at(i, v) && !seen_row[i]) {
                        seen_row[i] = 1;
                        sign[i * C + v] = 1;
                        queue.push_back({'r', i});
                    }
            }
        }
    };
    for (auto i : sr)
        if (!seen_row[i]) visit_from('r', i);
    for (auto j : sc)
        if (!seen_col[j]) visit_from('c', j);

    propagate_forced(b, sign, C);

    // Sparse 4-cycle structure can leave entries undetermined; pin the first
    // one and resume until everything is signed.
    for (;;) {
        bool open = false;
        for (auto i : sr) {
            for (auto j : sc)
                if (b.at(i, j) && sign[i * C + j] == 0) {
                    sign[i * C + j] = 1;
                    open = true;
                    break;
                }
            if (open) break;
        }
        if (!open) break;
        propagate_forced(b, sign, C);
    }
    return sign;
}

RatMatrix signs_to_matrix(const BinMatrix& b, const std::vector<int>& sign) {
    RatMatrix q(b.row_index(), b.col_index());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.at(i, j)) q.at(i, j) = Rat(sign[i * b.cols() + j]);
    return q;
}

struct Backtracker {
    const BinMatrix& b;
    const SigningOptions& opts;
    std::vector<Nonzero> order; // ascending (row label, col label)
    std::vector<int> sg;        // current partial assignment
    std::size_t nodes = 0;

    Backtracker(const BinMatrix& m, const SigningOptions& o) : b(m), opts(o) {
        const auto sr = positions_sorted_by_label(b.row_index());
        const auto sc = positions_sorted_by_label(b.col_index());
        for (auto i : sr)
            for (auto j : sc)
                if (b.at(i, j)) order.push_back({i, j});
        sg.assign(b.rows() * b.cols(), 0);
    }

    bool two_by_two_ok(std::size_t r, std::size_t c) const {
        const std::size_t C = b.cols();
        for (std::size_t r2 = 0; r2 < b.rows(); ++r2) {
            if (r2 == r || sg[r2 * C + c] == 0) continue;
            for (std::size_t c2 = 0; c2 < C; ++c2) {
                if (c2 == c || sg[r * C + c2] == 0 || sg[r2 * C + c2] == 0) continue;
                if (sg[r * C + c] * sg[r2 * C + c2] != sg[r * C + c2] * sg[r2 * C + c])
                    return false;
            }
        }
        return true;
    }

    std::optional<RatMatrix> search(std::size_t t) {
        if (++nodes > opts.max_search_nodes)
            throw SizeLimitError("signing search node budget exceeded");
        if (t == order.size()) {
            RatMatrix q = signs_to_matrix(b, sg);
            if (is_tu(q, opts.tu).is_tu) return q;
            return std::nullopt;
        }
        const auto [r, c] = order[t];
        for (int s : {1, -1}) {
            sg[r * b.cols() + c] = s;
            if (two_by_two_ok(r, c))
                if (auto q = search(t + 1)) return q;
        }
        sg[r * b.cols() + c] = 0;
        return std::nullopt;
    }
};

} // namespace

std::optional<Signing> find_tu_signing(const BinMatrix& b, const SigningOptions& opts) {
    RatMatrix candidate = signs_to_matrix(b, forced_candidate(b));
    if (is_tu(candidate, opts.tu).is_tu) return Signing{std::move(candidate), b};

    if (b.count_nonzero() > opts.fallback_nonzero_limit)
        throw SizeLimitError("matrix too dense for the exhaustive signing fallback");
    Backtracker bt(b, opts);
    if (auto q = bt.search(0)) return Signing{std::move(*q), b};
    return std::nullopt;
}

} // namespace seymour
