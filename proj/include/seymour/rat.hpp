#ifndef SEYMOUR_RAT_HPP
#define SEYMOUR_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

#include "seymour/errors.hpp"

namespace seymour {

/// Exact rational scalar. Always kept canonical: positive denominator,
/// gcd(|num|, den) = 1. Backed by GMP so entries never overflow or round.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rat(long n, long d) {
        if (d == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rat parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    /// True when the value is -1, 0, or 1.
    bool is_unit_or_zero() const {
        return v_ == 0 || v_ == 1 || v_ == -1;
    }

    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// Canonical text form: "a" for integers, "a/b" otherwise; b > 0.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

private:
    mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
    auto bad = [&] { throw ParseError("invalid rational: '" + s + "'"); };
    if (s.empty()) bad();
    const auto slash = s.find('/');
    mpz_class num, den(1);
    const std::string ns = (slash == std::string::npos) ? s : s.substr(0, slash);
    if (ns.empty() || mpz_set_str(num.get_mpz_t(), ns.c_str(), 10) != 0) bad();
    if (slash != std::string::npos) {
        const std::string ds = s.substr(slash + 1);
        if (ds.empty() || ds[0] == '-' || ds[0] == '+' ||
            mpz_set_str(den.get_mpz_t(), ds.c_str(), 10) != 0)
            bad();
        if (den == 0) bad();
    }
    mpq_class q(num);
    q /= mpq_class(den);
    return Rat(std::move(q));
}

} // namespace seymour

#endif
