#include "seymour/matroid.hpp"

#include <algorithm>
#include <bit>

#include "seymour/errors.hpp"
#include "seymour/linalg.hpp"
#include "seymour/pivot.hpp"

namespace seymour {

namespace {

constexpr std::size_t kMaskLimit = 32;
constexpr std::size_t kExhaustiveLimit = 20;
constexpr std::size_t kAxiomLimit = 12;

std::vector<Label> sorted(std::vector<Label> ls) {
    std::sort(ls.begin(), ls.end());
    return ls;
}

} // namespace

Matroid::Matroid(std::vector<Label> ground, std::function<bool(std::uint32_t)> indep,
                 std::string provenance)
    : ground_(std::move(ground)), indep_(std::move(indep)), provenance_(std::move(provenance)) {
    if (ground_.size() > kMaskLimit)
        throw SizeLimitError("matroid ground set exceeds " + std::to_string(kMaskLimit));
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (!pos_.emplace(ground_[i], i).second)
            throw DuplicateLabelError("duplicate ground element: '" + ground_[i] + "'");
    }
}

std::uint32_t Matroid::mask_of(const std::vector<Label>& subset) const {
    std::uint32_t mask = 0;
    for (const auto& l : subset) {
        auto it = pos_.find(l);
        if (it == pos_.end()) throw UnknownLabelError("not a ground element: '" + l + "'");
        mask |= std::uint32_t{1} << it->second;
    }
    return mask;
}

std::vector<Label> Matroid::labels_of(std::uint32_t mask) const {
    std::vector<Label> out;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (mask >> i & 1u) out.push_back(ground_[i]);
    return out;
}

std::size_t Matroid::rank() const {
    std::vector<std::size_t> order(ground_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ground_[a] < ground_[b]; });
    std::uint32_t cur = 0;
    for (auto i : order) {
        const std::uint32_t ext = cur | (std::uint32_t{1} << i);
        if (indep_(ext)) cur = ext;
    }
    return static_cast<std::size_t>(std::popcount(cur));
}

namespace {

template <class M>
Matroid make_vector_matroid(const M& a, const char* tag) {
    const std::vector<Label> ground = a.col_labels();
    auto oracle = [a](std::uint32_t mask) {
        std::vector<Label> cols;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (mask >> j & 1u) cols.push_back(a.col_labels()[j]);
        return rank(a.submatrix(a.row_labels(), cols)) == cols.size();
    };
    return Matroid(ground, oracle, tag);
}

void check_disjoint_xy(const std::vector<Label>& x, const std::vector<Label>& y) {
    for (const auto& l : x)
        if (std::find(y.begin(), y.end(), l) != y.end())
            throw LabelOverlapError("standard representation needs X and Y disjoint; '" + l +
                                    "' is in both");
}

} // namespace

Matroid vector_matroid(const RatMatrix& a) { return make_vector_matroid(a, "vector/Q"); }
Matroid vector_matroid(const BinMatrix& a) { return make_vector_matroid(a, "vector/GF2"); }

StandardReprQ::StandardReprQ(RatMatrix m) : b(std::move(m)) {
    check_disjoint_xy(b.row_labels(), b.col_labels());
}

StandardReprB::StandardReprB(BinMatrix m) : b(std::move(m)) {
    check_disjoint_xy(b.row_labels(), b.col_labels());
}

RatMatrix identity_adjoined(const StandardReprQ& s) {
    std::vector<Label> cols = s.x();
    cols.insert(cols.end(), s.y().begin(), s.y().end());
    RatMatrix a(s.x(), cols);
    for (std::size_t i = 0; i < s.b.rows(); ++i) {
        a.at(i, i) = Rat(1);
        for (std::size_t j = 0; j < s.b.cols(); ++j) a.at(i, s.x().size() + j) = s.b.at(i, j);
    }
    return a;
}

BinMatrix identity_adjoined(const StandardReprB& s) {
    std::vector<Label> cols = s.x();
    cols.insert(cols.end(), s.y().begin(), s.y().end());
    BinMatrix a(s.x(), cols);
    for (std::size_t i = 0; i < s.b.rows(); ++i) {
        a.set(i, i, 1);
        for (std::size_t j = 0; j < s.b.cols(); ++j) a.set(i, s.x().size() + j, s.b.at(i, j));
    }
    return a;
}

Matroid standard_repr_matroid(const StandardReprQ& s) {
    Matroid m = vector_matroid(identity_adjoined(s));
    return Matroid(m.ground(), [m](std::uint32_t mask) { return m.indep_mask(mask); },
                   "standard/Q");
}

Matroid standard_repr_matroid(const StandardReprB& s) {
    Matroid m = vector_matroid(identity_adjoined(s));
    return Matroid(m.ground(), [m](std::uint32_t mask) { return m.indep_mask(mask); },
                   "standard/GF2");
}

bool is_base(const Matroid& m, const std::vector<Label>& subset) {
    const std::uint32_t mask = m.mask_of(subset);
    if (!m.indep_mask(mask)) return false;
    // Maximal <=> no single-element extension stays independent; downward
    // closure makes this sufficient.
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (mask >> i & 1u) continue;
        if (m.indep_mask(mask | (std::uint32_t{1} << i))) return false;
    }
    return true;
}

std::vector<Label> find_base(const Matroid& m) {
    std::vector<Label> order = sorted(m.ground());
    std::uint32_t cur = 0;
    for (const auto& l : order) {
        const std::uint32_t ext = cur | m.mask_of({l});
        if (m.indep_mask(ext)) cur = ext;
    }
    return m.labels_of(cur);
}

StandardReprQ standardize(const RatMatrix& a, const std::vector<Label>& base,
                          const TuOptions& opts) {
    if (!is_tu(a, opts).is_tu) throw NotTuError("standardize requires a TU matrix");

    // Base validity, checked directly by rank so huge column counts are not
    // forced through the mask-bounded oracle.
    std::vector<Label> base_cols;
    for (const auto& l : base) {
        if (!a.col_index().contains(l)) throw NotABaseError("not a column label: '" + l + "'");
        if (std::find(base_cols.begin(), base_cols.end(), l) != base_cols.end())
            throw NotABaseError("repeated base element: '" + l + "'");
        base_cols.push_back(l);
    }
    if (rank(a.submatrix(a.row_labels(), base_cols)) != base_cols.size() ||
        rank(a) != base_cols.size())
        throw NotABaseError("given set is not a base of the column matroid");

    // Pivot each base column to a unit column; earlier unit columns are
    // untouched because their pivot-row entries are zero.
    RatMatrix m = a;
    std::vector<char> used(a.rows(), 0);
    std::vector<std::pair<Label, std::size_t>> pivot_of; // base col -> row position
    std::vector<Label> base_in_col_order;
    for (const auto& c : a.col_labels())
        if (std::find(base_cols.begin(), base_cols.end(), c) != base_cols.end())
            base_in_col_order.push_back(c);
    for (const auto& c : base_in_col_order) {
        const std::size_t cj = m.col_index().pos(c);
        std::size_t pr = m.rows();
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!used[i] && !m.at(i, cj).is_zero()) {
                pr = i;
                break;
            }
        if (pr == m.rows()) throw NotABaseError("basis column cannot be pivoted");
        used[pr] = 1;
        m = long_tableau_pivot(m, {m.row_labels()[pr], c});
        pivot_of.emplace_back(c, pr);
    }

    std::vector<Label> ycols;
    for (const auto& c : a.col_labels())
        if (std::find(base_cols.begin(), base_cols.end(), c) == base_cols.end())
            ycols.push_back(c);

    RatMatrix b(base_in_col_order, ycols);
    for (std::size_t bi = 0; bi < pivot_of.size(); ++bi)
        for (std::size_t j = 0; j < ycols.size(); ++j)
            b.at(bi, j) = m.get(m.row_labels()[pivot_of[bi].second], ycols[j]);
    return StandardReprQ(std::move(b));
}

StandardReprQ dual_repr(const StandardReprQ& s) {
    RatMatrix t = s.b.transpose();
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) t.at(i, j) = -t.at(i, j);
    return StandardReprQ(std::move(t));
}

StandardReprB dual_repr(const StandardReprB& s) {
    return StandardReprB(s.b.transpose()); // -1 = 1 over GF(2)
}

Matroid dual_matroid(const Matroid& m) {
    if (m.size() > kExhaustiveLimit)
        throw SizeLimitError("dual_matroid enumerates bases; ground too large");
    const std::size_t r = m.rank();
    std::vector<std::uint32_t> bases;
    const std::uint32_t full = (m.size() == 32) ? ~std::uint32_t{0}
                                                : ((std::uint32_t{1} << m.size()) - 1);
    for (std::uint32_t mask = 0;; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) == r && m.indep_mask(mask))
            bases.push_back(mask);
        if (mask == full) break;
    }
    auto oracle = [bases](std::uint32_t mask) {
        return std::any_of(bases.begin(), bases.end(),
                           [mask](std::uint32_t b) { return (mask & b) == 0; });
    };
    return Matroid(m.ground(), oracle, "dual[" + m.provenance() + "]");
}

bool matroids_equal(const Matroid& m1, const Matroid& m2) {
    if (sorted(m1.ground()) != sorted(m2.ground()))
        throw GroundMismatchError("matroids live on different ground sets");
    if (m1.size() > kExhaustiveLimit)
        throw SizeLimitError("matroids_equal enumerates all subsets; ground too large");

    std::vector<std::size_t> to2(m1.size());
    for (std::size_t i = 0; i < m1.size(); ++i) to2[i] = m2.mask_of({m1.ground()[i]});
    const std::uint32_t full = (m1.size() == 32) ? ~std::uint32_t{0}
                                                 : ((std::uint32_t{1} << m1.size()) - 1);
    for (std::uint32_t mask = 0;; ++mask) {
        std::uint32_t mask2 = 0;
        for (std::size_t i = 0; i < m1.size(); ++i)
            if (mask >> i & 1u) mask2 |= to2[i];
        if (m1.indep_mask(mask) != m2.indep_mask(mask2)) return false;
        if (mask == full) break;
    }
    return true;
}

bool same_support_check(const StandardReprB& s1, const StandardReprB& s2) {
    if (sorted(s1.x()) != sorted(s2.x()) || sorted(s1.y()) != sorted(s2.y()))
        throw LabelMismatchError("support comparison needs the same X and Y");
    for (const auto& r : s1.x())
        for (const auto& c : s1.y())
            if (s1.b.get(r, c) != s2.b.get(r, c)) return false;
    return true;
}

MatroidAxiomReport check_matroid_axioms(const Matroid& m) {
    if (m.size() > kAxiomLimit)
        throw SizeLimitError("axiom check is exhaustive; ground too large");
    MatroidAxiomReport rep;
    const std::uint32_t count = std::uint32_t{1} << m.size();

    std::vector<char> indep(count);
    for (std::uint32_t s = 0; s < count; ++s) indep[s] = m.indep_mask(s) ? 1 : 0;
    rep.empty_independent = indep[0] != 0;

    rep.downward_closed = true;
    for (std::uint32_t s = 0; s < count && rep.downward_closed; ++s) {
        if (!indep[s]) continue;
        for (std::size_t i = 0; i < m.size(); ++i)
            if ((s >> i & 1u) && !indep[s & ~(std::uint32_t{1} << i)]) {
                rep.downward_closed = false;
                break;
            }
    }

    // Maximal independent sets, then the stated exchange property: any
    // non-maximal independent I grows by some element of each maximal B.
    std::vector<std::uint32_t> maximal;
    auto is_maximal = [&](std::uint32_t s) {
        if (!indep[s]) return false;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!(s >> i & 1u) && indep[s | (std::uint32_t{1} << i)]) return false;
        return true;
    };
    for (std::uint32_t s = 0; s < count; ++s)
        if (is_maximal(s)) maximal.push_back(s);

    rep.exchange = true;
    for (std::uint32_t s = 0; s < count && rep.exchange; ++s) {
        if (!indep[s] || is_maximal(s)) continue;
        for (std::uint32_t b : maximal) {
            bool found = false;
            std::uint32_t candidates = b & ~s;
            while (candidates) {
                const std::uint32_t bit = candidates & (~candidates + 1);
                if (indep[s | bit]) {
                    found = true;
                    break;
                }
                candidates &= candidates - 1;
            }
            if (!found) {
                rep.exchange = false;
                break;
            }
        }
    }
    return rep;
}

} // namespace seymour
