#include "seymour/linalg.hpp"

#include <gmpxx.h>

#include <vector>

#include "seymour/errors.hpp"

namespace seymour {

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw NonSquareError("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);

    // Clear denominators row by row; det(m) = det(integer matrix) / scale.
    std::vector<mpz_class> a(n * n);
    mpz_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& r = m.at(i, j);
            a[i * n + j] = r.num() * (l / r.den());
        }
        scale *= l;
    }

    // Bareiss: divisions are exact; the final pivot is the determinant.
    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return Rat(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    mpq_class q(a[(n - 1) * n + (n - 1)] * sign);
    q /= mpq_class(scale);
    return Rat(std::move(q));
}

std::size_t rank(const RatMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<mpq_class> a(nr * nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i * nc + j] = m.at(i, j).raw();

    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a[p * nc + c] == 0) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = c; j < nc; ++j) std::swap(a[r * nc + j], a[p * nc + j]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (a[i * nc + c] == 0) continue;
            mpq_class f = a[i * nc + c] / a[r * nc + c];
            for (std::size_t j = c; j < nc; ++j) a[i * nc + j] -= f * a[r * nc + j];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const BinMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    BinMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a.at(p, c) == 0) ++p;
        if (p == nr) continue;
        if (p != r) {
            // swap via three xors
            a.add_row_into(p, r);
            a.add_row_into(r, p);
            a.add_row_into(p, r);
        }
        for (std::size_t i = r + 1; i < nr; ++i)
            if (a.at(i, c)) a.add_row_into(r, i);
        ++r;
    }
    return r;
}

namespace {

bool matches_grid(const BinMatrix& d0, bool rs, bool cs, const int want[2][2]) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const std::size_t ri = rs ? 1 - i : i;
            const std::size_t ci = cs ? 1 - j : j;
            if (d0.at(ri, ci) != want[i][j]) return false;
        }
    return true;
}

} // namespace

Gf2TwoByTwoClass classify_invertible_2x2_gf2(const BinMatrix& d0) {
    if (d0.rows() != 2 || d0.cols() != 2) throw NonSquareError("classification needs a 2x2 matrix");
    static const int kIdentity[2][2] = {{1, 0}, {0, 1}};
    static const int kTriangular[2][2] = {{1, 1}, {0, 1}};
    Gf2TwoByTwoClass out;
    for (bool rs : {false, true})
        for (bool cs : {false, true}) {
            if (matches_grid(d0, rs, cs, kIdentity)) {
                out.form = Gf2TwoByTwoClass::Form::IdentityLike;
                out.row_swap = rs;
                out.col_swap = cs;
                return out;
            }
            if (matches_grid(d0, rs, cs, kTriangular)) {
                out.form = Gf2TwoByTwoClass::Form::TriangularLike;
                out.row_swap = rs;
                out.col_swap = cs;
                return out;
            }
        }
    return out; // singular
}

BinMatrix gf2_inverse_2x2(const BinMatrix& d0) {
    if (d0.rows() != 2 || d0.cols() != 2) throw NonSquareError("inverse needs a 2x2 matrix");
    const int a = d0.at(0, 0), b = d0.at(0, 1), c = d0.at(1, 0), d = d0.at(1, 1);
    if (((a & d) ^ (b & c)) == 0) throw SingularMatrixError("2x2 GF(2) matrix is singular");
    // Adjugate; over GF(2) negation is identity.
    BinMatrix inv(d0.col_index(), d0.row_index());
    inv.set(0, 0, d);
    inv.set(0, 1, b);
    inv.set(1, 0, c);
    inv.set(1, 1, a);
    return inv;
}

namespace {

// Inner dimensions align by label, not by position.
std::vector<std::size_t> inner_map(const LabelIndex& acols, const LabelIndex& brows) {
    if (acols.size() != brows.size())
        throw LabelMismatchError("product needs matching inner labels");
    std::vector<std::size_t> map(acols.size());
    for (std::size_t k = 0; k < acols.size(); ++k) {
        auto p = brows.find(acols.at(k));
        if (!p) throw LabelMismatchError("product needs matching inner labels");
        map[k] = *p;
    }
    return map;
}

} // namespace

RatMatrix rat_inverse_2x2(const RatMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw NonSquareError("inverse needs a 2x2 matrix");
    const Rat d = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (d.is_zero()) throw SingularMatrixError("2x2 rational matrix is singular");
    RatMatrix inv(m.col_index(), m.row_index());
    inv.at(0, 0) = m.at(1, 1) / d;
    inv.at(0, 1) = -(m.at(0, 1) / d);
    inv.at(1, 0) = -(m.at(1, 0) / d);
    inv.at(1, 1) = m.at(0, 0) / d;
    return inv;
}

BinMatrix gf2_mul(const BinMatrix& a, const BinMatrix& b) {
    const auto map = inner_map(a.col_index(), b.row_index());
    BinMatrix out(a.row_index(), b.col_index());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            int v = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) v ^= a.at(i, k) & b.at(map[k], j);
            out.set(i, j, v);
        }
    return out;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    const auto map = inner_map(a.col_index(), b.row_index());
    RatMatrix out(a.row_index(), b.col_index());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rat s(0);
            for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(map[k], j);
            out.at(i, j) = s;
        }
    return out;
}

} // namespace seymour
