#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "su3sl/errors.hpp"

namespace su3sl {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

/// Parse "p/q" or "p" (decimal integers). Canonicalizes; denominator ends up positive.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact square root when q is a perfect square of a rational; returns false otherwise.
inline bool exact_sqrt(const Rational& q, Rational& out) {
    if (sgn(q) < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(rn, rd);
    out.canonicalize();
    return true;
}

/// Complex number with rational real and imaginary parts. The scalar field of
/// the whole toolkit; nothing here ever rounds.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(long re) : re_(re), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re, long im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2, a nonnegative rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    GaussianRational inverse() const {
        Rational n = norm2();
        if (sgn(n) == 0) throw Error("division by zero GaussianRational");
        return {re_ / n, -im_ / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    double re_d() const { return re_.get_d(); }
    double im_d() const { return im_.get_d(); }

    std::string str() const {
        if (is_real()) return to_string(re_);
        return to_string(re_) + (sgn(im_) >= 0 ? "+" : "") + to_string(im_) + "i";
    }

private:
    Rational re_, im_;
};

using GQ = GaussianRational;

inline GQ gq(long re, long im = 0) { return GQ(re, im); }
inline GQ gqr(long num, long den) { return GQ(Rational(num, den)); }

} // namespace su3sl
