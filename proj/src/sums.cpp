#include "seymour/sums.hpp"

#include <algorithm>

#include "seymour/errors.hpp"

namespace seymour {

namespace {

std::vector<Label> cat(std::vector<Label> a, const std::vector<Label>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool contains(const std::vector<Label>& v, const Label& l) {
    return std::find(v.begin(), v.end(), l) != v.end();
}

std::vector<Label> intersect(const std::vector<Label>& a, const std::vector<Label>& b) {
    std::vector<Label> out;
    for (const auto& l : a)
        if (contains(b, l)) out.push_back(l);
    return out;
}

std::vector<Label> minus(const std::vector<Label>& a, const std::vector<Label>& b) {
    std::vector<Label> out;
    for (const auto& l : a)
        if (!contains(b, l)) out.push_back(l);
    return out;
}

bool same_set(std::vector<Label> a, std::vector<Label> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

void require_disjoint(const std::vector<Label>& a, const std::vector<Label>& b,
                      const char* what) {
    auto common = intersect(a, b);
    if (!common.empty())
        throw LabelOverlapError(std::string(what) + " share label '" + common.front() + "'");
}

void put(RatMatrix& m, std::size_t i, std::size_t j, const Rat& v) { m.at(i, j) = v; }
void put(BinMatrix& m, std::size_t i, std::size_t j, int v) { m.set(i, j, v); }
Rat mul_entry(const Rat& a, const Rat& b) { return a * b; }
int mul_entry(int a, int b) { return a & b; }
bool is_zero_entry(const Rat& v) { return v.is_zero(); }
bool is_zero_entry(int v) { return v == 0; }

template <class SR>
SR sum1_impl(const SR& l, const SR& r) {
    require_disjoint(l.x(), r.x(), "row sets");
    require_disjoint(l.x(), r.y(), "left rows and right columns");
    require_disjoint(l.y(), r.x(), "left columns and right rows");
    require_disjoint(l.y(), r.y(), "column sets");

    using M = decltype(l.b);
    M out(cat(l.x(), r.x()), cat(l.y(), r.y()));
    const std::size_t ro = l.b.rows(), co = l.b.cols();
    for (std::size_t i = 0; i < l.b.rows(); ++i)
        for (std::size_t j = 0; j < l.b.cols(); ++j) put(out, i, j, l.b.at(i, j));
    for (std::size_t i = 0; i < r.b.rows(); ++i)
        for (std::size_t j = 0; j < r.b.cols(); ++j) put(out, ro + i, co + j, r.b.at(i, j));
    return SR(std::move(out));
}

template <class SR>
SR sum2_impl(const SR& l, const SR& r, const Label& x, const Label& y) {
    if (!same_set(intersect(l.x(), r.x()), {x}))
        throw LabelOverlapError("row sets must intersect in exactly {" + x + "}");
    if (!same_set(intersect(l.y(), r.y()), {y}))
        throw LabelOverlapError("column sets must intersect in exactly {" + y + "}");
    require_disjoint(l.x(), r.y(), "left rows and right columns");
    require_disjoint(r.x(), l.y(), "right rows and left columns");

    const std::size_t xr = l.b.row_index().pos(x);
    const std::size_t yc = r.b.col_index().pos(y);
    bool row_zero = true, col_zero = true;
    for (std::size_t j = 0; j < l.b.cols() && row_zero; ++j)
        if (!is_zero_entry(l.b.at(xr, j))) row_zero = false;
    for (std::size_t i = 0; i < r.b.rows() && col_zero; ++i)
        if (!is_zero_entry(r.b.at(i, yc))) col_zero = false;
    if (row_zero) throw ZeroRowError("row '" + x + "' of the left summand is zero");
    if (col_zero) throw ZeroColError("column '" + y + "' of the right summand is zero");

    const std::vector<Label> top_rows = minus(l.x(), {x});
    const std::vector<Label> right_cols = minus(r.y(), {y});

    using M = decltype(l.b);
    M out(cat(top_rows, r.x()), cat(l.y(), right_cols));
    // top-left: left summand minus row x
    for (std::size_t i = 0; i < top_rows.size(); ++i) {
        const std::size_t si = l.b.row_index().pos(top_rows[i]);
        for (std::size_t j = 0; j < l.b.cols(); ++j) put(out, i, j, l.b.at(si, j));
    }
    const std::size_t ro = top_rows.size(), co = l.b.cols();
    // bottom-left: outer product of the right's y-column with the left's x-row
    for (std::size_t i = 0; i < r.b.rows(); ++i)
        for (std::size_t j = 0; j < l.b.cols(); ++j)
            put(out, ro + i, j, mul_entry(r.b.at(i, yc), l.b.at(xr, j)));
    // bottom-right: right summand minus column y
    for (std::size_t j = 0; j < right_cols.size(); ++j) {
        const std::size_t sj = r.b.col_index().pos(right_cols[j]);
        for (std::size_t i = 0; i < r.b.rows(); ++i) put(out, ro + i, co + j, r.b.at(i, sj));
    }
    return SR(std::move(out));
}

} // namespace

StandardReprB sum1(const StandardReprB& l, const StandardReprB& r) { return sum1_impl(l, r); }
StandardReprQ sum1(const StandardReprQ& l, const StandardReprQ& r) { return sum1_impl(l, r); }

StandardReprB sum2(const StandardReprB& l, const StandardReprB& r, const Label& x,
                   const Label& y) {
    return sum2_impl(l, r, x, y);
}
StandardReprQ sum2(const StandardReprQ& l, const StandardReprQ& r, const Label& x,
                   const Label& y) {
    return sum2_impl(l, r, x, y);
}

namespace {

void frame_fail(const std::string& what) { throw PatternViolationError("frame: " + what); }

void border_fail(const std::string& what) { throw PatternViolationError(what); }

} // namespace

Sum3Blocks validate_sum3(const StandardReprB& bl, const StandardReprB& br,
                         const Sum3Frame& frame) {
    Sum3Blocks out;
    out.frame = frame;
    Sum3Frame& f = out.frame;

    // Stage 1: frame consistency.
    const std::vector<Label> xs{f.x0, f.x1, f.x2}, ys{f.y0, f.y1, f.y2};
    if (f.x0 == f.x1 || f.x0 == f.x2 || f.x1 == f.x2) frame_fail("x0, x1, x2 must be distinct");
    if (f.y0 == f.y1 || f.y0 == f.y2 || f.y1 == f.y2) frame_fail("y0, y1, y2 must be distinct");
    for (const auto& l : xs) {
        if (!bl.b.row_index().contains(l)) frame_fail("'" + l + "' is not a row of the left summand");
        if (!br.b.row_index().contains(l)) frame_fail("'" + l + "' is not a row of the right summand");
    }
    for (const auto& l : ys) {
        if (!bl.b.col_index().contains(l)) frame_fail("'" + l + "' is not a column of the left summand");
        if (!br.b.col_index().contains(l)) frame_fail("'" + l + "' is not a column of the right summand");
    }

    const std::vector<Label> xl_derived = minus(bl.x(), xs);
    const std::vector<Label> xr_derived = minus(br.x(), xs);
    const std::vector<Label> yl_derived = minus(bl.y(), ys);
    const std::vector<Label> yr_derived = minus(br.y(), ys);
    if (!f.xl_prime.empty() && !same_set(f.xl_prime, xl_derived))
        frame_fail("declared Xl' does not match the left summand's rows");
    if (!f.xr_prime.empty() && !same_set(f.xr_prime, xr_derived))
        frame_fail("declared Xr' does not match the right summand's rows");
    if (!f.yl_prime.empty() && !same_set(f.yl_prime, yl_derived))
        frame_fail("declared Yl' does not match the left summand's columns");
    if (!f.yr_prime.empty() && !same_set(f.yr_prime, yr_derived))
        frame_fail("declared Yr' does not match the right summand's columns");
    f.xl_prime = xl_derived;
    f.xr_prime = xr_derived;
    f.yl_prime = yl_derived;
    f.yr_prime = yr_derived;

    if (!intersect(f.xl_prime, f.xr_prime).empty())
        frame_fail("row sets must intersect in exactly {x2, x1, x0}");
    if (!intersect(f.yl_prime, f.yr_prime).empty())
        frame_fail("column sets must intersect in exactly {y0, y1, y2}");
    if (!intersect(bl.x(), br.y()).empty())
        frame_fail("left rows must be disjoint from right columns");
    if (!intersect(bl.y(), br.x()).empty())
        frame_fail("left columns must be disjoint from right rows");

    // Stage 2: D0 invertibility. Read with rows (x0, x1) and columns
    // (y0, y1); the classification records how to reach a canonical grid.
    out.d0 = bl.b.submatrix({f.x0, f.x1}, {f.y0, f.y1});
    const auto cls = classify_invertible_2x2_gf2(out.d0);
    if (cls.form == Gf2TwoByTwoClass::Form::Singular) border_fail("D0 is singular");
    out.d0_form = cls.form;
    out.swapped_rows = cls.row_swap;
    out.swapped_cols = cls.col_swap;
    out.canonical_frame = f;
    if (cls.row_swap) std::swap(out.canonical_frame.x0, out.canonical_frame.x1);
    if (cls.col_swap) std::swap(out.canonical_frame.y0, out.canonical_frame.y1);

    // Stage 3: D0 agreement between the summands.
    for (const auto& i : {f.x0, f.x1})
        for (const auto& j : {f.y0, f.y1})
            if (bl.b.get(i, j) != br.b.get(i, j))
                border_fail("D0 differs between the summands at (" + i + ", " + j + ")");

    // Stage 4: x2-row patterns.
    if (bl.b.get(f.x2, f.y0) != 1) border_fail("left (x2, y0) must be 1");
    if (bl.b.get(f.x2, f.y1) != 1) border_fail("left (x2, y1) must be 1");
    if (bl.b.get(f.x2, f.y2) != 0) border_fail("left (x2, y2) must be 0");
    if (br.b.get(f.x2, f.y0) != 1) border_fail("right (x2, y0) must be 1");
    if (br.b.get(f.x2, f.y1) != 1) border_fail("right (x2, y1) must be 1");
    if (br.b.get(f.x2, f.y2) != 0) border_fail("right (x2, y2) must be 0");
    for (const auto& j : f.yr_prime)
        if (br.b.get(f.x2, j) != 0) border_fail("right (x2, " + j + ") must be 0");

    // Stage 5: y2-column patterns.
    if (bl.b.get(f.x1, f.y2) != 1) border_fail("left (x1, y2) must be 1");
    if (bl.b.get(f.x0, f.y2) != 1) border_fail("left (x0, y2) must be 1");
    for (const auto& i : f.xl_prime)
        if (bl.b.get(i, f.y2) != 0) border_fail("left (" + i + ", y2) must be 0");
    if (br.b.get(f.x1, f.y2) != 1) border_fail("right (x1, y2) must be 1");
    if (br.b.get(f.x0, f.y2) != 1) border_fail("right (x0, y2) must be 1");

    out.bl = bl.b;
    out.br = br.b;
    out.al = bl.b.submatrix(cat(f.xl_prime, {f.x2}), cat(f.yl_prime, {f.y0, f.y1}));
    out.ar = br.b.submatrix(cat({f.x1, f.x0}, f.xr_prime), cat({f.y2}, f.yr_prime));
    out.dl = bl.b.submatrix({f.x1, f.x0}, f.yl_prime);
    out.dr = br.b.submatrix(f.xr_prime, {f.y0, f.y1});
    return out;
}

StandardReprB sum3(const Sum3Blocks& blocks) {
    const Sum3Frame& f = blocks.frame;
    const std::vector<Label> rows = cat(cat(blocks.al.row_labels(), {f.x1, f.x0}), f.xr_prime);
    const std::vector<Label> cols = cat(cat(blocks.al.col_labels(), {f.y2}), f.yr_prime);

    const BinMatrix dlr =
        gf2_mul(gf2_mul(blocks.dr, gf2_inverse_2x2(blocks.d0)), blocks.dl);

    BinMatrix b(rows, cols);
    auto copy_in = [&b](const BinMatrix& src) {
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j)
                if (src.at(i, j)) b.set(src.row_labels()[i], src.col_labels()[j], 1);
    };
    copy_in(blocks.al);
    copy_in(blocks.ar);
    copy_in(blocks.dl);
    copy_in(blocks.dr);
    copy_in(dlr);
    copy_in(blocks.d0);
    return StandardReprB(std::move(b));
}

RatMatrix canonical_signing_2x2(const BinMatrix& d0) {
    if (d0.rows() != 2 || d0.cols() != 2)
        throw NotCanonicalFormError("canonical signing needs a 2x2 matrix");
    const bool identity = d0.at(0, 0) == 1 && d0.at(0, 1) == 0 && d0.at(1, 0) == 0 &&
                          d0.at(1, 1) == 1;
    const bool triangular = d0.at(0, 0) == 1 && d0.at(0, 1) == 1 && d0.at(1, 0) == 0 &&
                            d0.at(1, 1) == 1;
    if (!identity && !triangular)
        throw NotCanonicalFormError("matrix is not one of the two canonical 2x2 grids");
    RatMatrix out(d0.row_index(), d0.col_index());
    out.at(0, 0) = Rat(1);
    out.at(1, 1) = identity ? Rat(-1) : Rat(1);
    if (triangular) out.at(0, 1) = Rat(1);
    return out;
}

RatMatrix canonical_signing_3x3(const BinMatrix& s) {
    if (s.rows() != 3 || s.cols() != 3)
        throw NotCanonicalFormError("bordered canonical signing needs a 3x3 matrix");
    const int want_first_row[3] = {1, 1, 0};
    for (int j = 0; j < 3; ++j)
        if (s.at(0, j) != want_first_row[j])
            throw NotCanonicalFormError("first row must be (1, 1, 0)");
    if (s.at(1, 2) != 1 || s.at(2, 2) != 1)
        throw NotCanonicalFormError("last column must be (0, 1, 1)");
    const BinMatrix d0 = s.submatrix({s.row_labels()[1], s.row_labels()[2]},
                                     {s.col_labels()[0], s.col_labels()[1]});
    const RatMatrix d0s = canonical_signing_2x2(d0);
    RatMatrix out = to_rat(s);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.at(1 + i, j) = d0s.at(i, j);
    return out;
}

RatMatrix canonical_resign(const RatMatrix& q, const Label& x2, const Label& x1,
                           const Label& x0, const Label& y0, const Label& y1,
                           const Label& y2) {
    const Rat a20 = q.get(x2, y0);
    const Rat a00 = q.get(x0, y0);
    const Rat a02 = q.get(x0, y2);
    const Rat a12 = q.get(x1, y2);
    const Rat a21 = q.get(x2, y1);
    for (const Rat* r : {&a20, &a00, &a02, &a12, &a21})
        if (r->is_zero())
            throw ZeroFactorError("re-signing factor reads a zero entry; the matrix does not "
                                  "carry the bordered pattern");

    const std::size_t n = q.rows(), m = q.cols();
    std::vector<Rat> u(n, Rat(1)), v(m, Rat(1));
    u[q.row_index().pos(x0)] = a20 * a00;
    u[q.row_index().pos(x1)] = a20 * a00 * a02 * a12;
    v[q.col_index().pos(y0)] = a20;
    v[q.col_index().pos(y1)] = a21;
    v[q.col_index().pos(y2)] = a20 * a00 * a02;

    RatMatrix out(q.row_index(), q.col_index());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = q.at(i, j) * u[i] * v[j];
    return out;
}

Sum3CanonicalSigning canonical_signing_sum3(const RatMatrix& bl_signed,
                                            const RatMatrix& br_signed,
                                            const Sum3Frame& frame) {
    if (!bl_signed.entries_in_unit_range() || !br_signed.entries_in_unit_range())
        throw Error("summand signings must have {0, +-1} entries");

    Sum3CanonicalSigning out{
        RatMatrix{}, RatMatrix{}, RatMatrix{},
        validate_sum3(StandardReprB(support(bl_signed)), StandardReprB(support(br_signed)),
                      frame)};
    const Sum3Frame& f = out.blocks.frame;
    const Sum3Frame& cf = out.blocks.canonical_frame;

    out.bl = canonical_resign(bl_signed, cf.x2, cf.x1, cf.x0, cf.y0, cf.y1, cf.y2);
    out.br = canonical_resign(br_signed, cf.x2, cf.x1, cf.x0, cf.y0, cf.y1, cf.y2);

    // For TU signings of the bordered pattern the re-signed corners both
    // collapse to the canonical S'; anything else means the preconditions
    // were violated.
    const RatMatrix d0l = out.bl.submatrix({cf.x0, cf.x1}, {cf.y0, cf.y1});
    const RatMatrix d0r = out.br.submatrix({cf.x0, cf.x1}, {cf.y0, cf.y1});
    const RatMatrix d0_expect = canonical_signing_2x2(
        out.blocks.bl.submatrix({cf.x0, cf.x1}, {cf.y0, cf.y1}));
    if (!(d0l == d0_expect) || !(d0r == d0_expect))
        throw Error("canonical re-signing did not normalize D0; the summands are not TU "
                    "signings of the bordered pattern");

    const RatMatrix al = out.bl.submatrix(cat(f.xl_prime, {f.x2}), cat(f.yl_prime, {f.y0, f.y1}));
    const RatMatrix ar = out.br.submatrix(cat({f.x1, f.x0}, f.xr_prime), cat({f.y2}, f.yr_prime));
    const RatMatrix dl = out.bl.submatrix({f.x1, f.x0}, f.yl_prime);
    const RatMatrix dr = out.br.submatrix(f.xr_prime, {f.y0, f.y1});
    const RatMatrix d0 = out.bl.submatrix({f.x0, f.x1}, {f.y0, f.y1});
    const RatMatrix dlr = rat_mul(rat_mul(dr, rat_inverse_2x2(d0)), dl);

    const std::vector<Label> rows = cat(cat(al.row_labels(), {f.x1, f.x0}), f.xr_prime);
    const std::vector<Label> cols = cat(cat(al.col_labels(), {f.y2}), f.yr_prime);
    RatMatrix b(rows, cols);
    auto copy_in = [&b](const RatMatrix& src) {
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j)
                if (!src.at(i, j).is_zero())
                    b.set(src.row_labels()[i], src.col_labels()[j], src.at(i, j));
    };
    copy_in(al);
    copy_in(ar);
    copy_in(dl);
    copy_in(dr);
    copy_in(dlr);
    copy_in(d0);
    out.b = std::move(b);
    return out;
}

namespace {

Label fresh_label(const std::vector<Label>& taken, const std::string& base) {
    Label l = base;
    while (contains(taken, l)) l += "_";
    return l;
}

// Single-column views used for the c-vector comparisons.
std::vector<Rat> column_of(const RatMatrix& m, const std::vector<Label>& rows,
                           const Label& col) {
    std::vector<Rat> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(m.get(r, col));
    return out;
}

std::vector<Rat> column_of(const RatMatrix& single_col, const std::vector<Label>& rows) {
    std::vector<Rat> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(single_col.get(r, single_col.col_labels()[0]));
    return out;
}

bool vec_eq(const std::vector<Rat>& a, const std::vector<Rat>& b, int sign) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i] * Rat(sign))) return false;
    return true;
}

bool vec_zero(const std::vector<Rat>& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& r) { return r.is_zero(); });
}

} // namespace

Mls3Report in_mls3_class(const RatMatrix& c, const Mls3Class& cls, const TuOptions& opts) {
    Mls3Report rep;
    const std::vector<Label> d_rows = cls.c0.row_labels();

    if (!same_set(cls.c0.row_labels(), cls.c1.row_labels()) ||
        !same_set(d_rows, cat(cls.xr, {cls.x0, cls.x1})))
        throw PartitionMismatchError("c0/c1 rows must be Xr' plus {x0, x1}");
    if (!same_set(c.row_labels(), cat(cls.xl, d_rows)))
        throw PartitionMismatchError("rows do not partition into Xl' and Xr' + {x0, x1}");
    if (!same_set(c.col_labels(), cat(cls.yl, cls.yr)))
        throw PartitionMismatchError("columns do not partition into Yl' and Yr'");

    auto fail = [&rep](const std::string& what) {
        if (rep.first_failure.empty()) rep.first_failure = what;
        return false;
    };

    // 1: upper-right block is zero.
    rep.shape = true;
    for (const auto& i : cls.xl)
        for (const auto& j : cls.yr)
            if (!c.get(i, j).is_zero()) {
                rep.shape = fail("upper-right block has a nonzero at (" + i + ", " + j + ")");
                break;
            }

    // 2: [Al; D] is TU.
    rep.left_tu = is_tu(c.submatrix(cat(cls.xl, d_rows), cls.yl), opts).is_tu;
    if (!rep.left_tu) fail("[Al; D] is not TU");

    // 3: D columns restricted to Xr' lie in {0, +-c0, +-c1, +-(c0 - c1)}.
    {
        const auto c0 = column_of(cls.c0, cls.xr);
        const auto c1 = column_of(cls.c1, cls.xr);
        std::vector<Rat> c2(c0.size());
        for (std::size_t i = 0; i < c0.size(); ++i) c2[i] = c0[i] - c1[i];
        rep.d_columns = true;
        for (const auto& j : cls.yl) {
            const auto dj = column_of(c, cls.xr, j);
            const bool ok = vec_zero(dj) || vec_eq(dj, c0, 1) || vec_eq(dj, c0, -1) ||
                            vec_eq(dj, c1, 1) || vec_eq(dj, c1, -1) || vec_eq(dj, c2, 1) ||
                            vec_eq(dj, c2, -1);
            if (!ok) {
                rep.d_columns = fail("column '" + j + "' of D is not in the allowed span set");
                break;
            }
        }
    }

    // 4: [c0 c1 c0-c1 Ar] is TU.
    {
        const Label l0 = fresh_label(c.col_labels(), "#c0");
        const Label l1 = fresh_label(c.col_labels(), "#c1");
        const Label l2 = fresh_label(c.col_labels(), "#c2");
        RatMatrix m(d_rows, cat({l0, l1, l2}, cls.yr));
        for (std::size_t i = 0; i < d_rows.size(); ++i) {
            const Rat v0 = cls.c0.get(d_rows[i], cls.c0.col_labels()[0]);
            const Rat v1 = cls.c1.get(d_rows[i], cls.c1.col_labels()[0]);
            m.at(i, 0) = v0;
            m.at(i, 1) = v1;
            m.at(i, 2) = v0 - v1;
            for (std::size_t j = 0; j < cls.yr.size(); ++j)
                m.at(i, 3 + j) = c.get(d_rows[i], cls.yr[j]);
        }
        rep.bottom_tu = is_tu(m, opts).is_tu;
        if (!rep.bottom_tu) fail("[c0 c1 c0-c1 Ar] is not TU");
    }

    // 5: bordered [Al 0; D(x0, Yl') 1; D(x1, Yl') 1] is TU.
    {
        const Label bcol = fresh_label(c.col_labels(), "#b");
        RatMatrix m(cat(cls.xl, {cls.x0, cls.x1}), cat(cls.yl, {bcol}));
        for (std::size_t i = 0; i < cls.xl.size(); ++i)
            for (std::size_t j = 0; j < cls.yl.size(); ++j)
                m.at(i, j) = c.get(cls.xl[i], cls.yl[j]);
        for (std::size_t j = 0; j < cls.yl.size(); ++j) {
            m.at(cls.xl.size(), j) = c.get(cls.x0, cls.yl[j]);
            m.at(cls.xl.size() + 1, j) = c.get(cls.x1, cls.yl[j]);
        }
        m.at(cls.xl.size(), cls.yl.size()) = Rat(1);
        m.at(cls.xl.size() + 1, cls.yl.size()) = Rat(1);
        rep.aux_tu = is_tu(m, opts).is_tu;
        if (!rep.aux_tu) fail("bordered [Al 0; D(x0) 1; D(x1) 1] is not TU");
    }

    // 6 and 7: endpoint values of c0 and c1.
    {
        const Rat c0x0 = cls.c0.get(cls.x0, cls.c0.col_labels()[0]);
        const Rat c0x1 = cls.c0.get(cls.x1, cls.c0.col_labels()[0]);
        rep.c0_endpoints = c0x0 == Rat(1) && c0x1 == Rat(0);
        if (!rep.c0_endpoints) fail("property 6: c0 endpoints must be (1, 0)");

        const Rat c1x0 = cls.c1.get(cls.x0, cls.c1.col_labels()[0]);
        const Rat c1x1 = cls.c1.get(cls.x1, cls.c1.col_labels()[0]);
        rep.c1_endpoints = (c1x0 == Rat(0) && c1x1 == Rat(-1)) ||
                           (c1x0 == Rat(1) && c1x1 == Rat(1));
        if (!rep.c1_endpoints) fail("property 7: c1 endpoints must be (0, -1) or (1, 1)");
    }
    return rep;
}

Mls3Class mls3_class_of(const Sum3CanonicalSigning& cs) {
    const Sum3Frame& f = cs.blocks.frame;
    const Sum3Frame& cf = cs.blocks.canonical_frame;
    Mls3Class cls;
    cls.xl = cat(f.xl_prime, {f.x2});
    cls.yl = cat(f.yl_prime, {f.y0, f.y1});
    cls.xr = f.xr_prime;
    cls.yr = cat({f.y2}, f.yr_prime);
    cls.x0 = cf.x0;
    cls.x1 = cf.x1;

    const std::vector<Label> d_rows = cat({f.x1, f.x0}, f.xr_prime);
    RatMatrix c0(d_rows, {fresh_label(cs.b.col_labels(), "#c0")});
    RatMatrix c1(d_rows, {fresh_label(cs.b.col_labels(), "#c1")});
    for (std::size_t i = 0; i < d_rows.size(); ++i) {
        c0.at(i, 0) = cs.b.get(d_rows[i], cf.y0);
        c1.at(i, 0) = cs.b.get(d_rows[i], cf.y1);
    }
    cls.c0 = std::move(c0);
    cls.c1 = std::move(c1);
    return cls;
}

} // namespace seymour
