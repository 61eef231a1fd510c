#pragma once

#include <array>

#include "su3sl/rational.hpp"

namespace su3sl {

/// Element of Q(i, sqrt2): a + b*sqrt2 with a, b Gaussian rational. Exact
/// field arithmetic; sqrt2 keeps the frame component matrices exact.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(GQ a) : a_(std::move(a)) {}
    QuadExt(long v) : a_(GQ(v)) {}
    QuadExt(GQ a, GQ b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt2() { return QuadExt(GQ(0), GQ(1)); }
    static QuadExt inv_sqrt2() { return QuadExt(GQ(0), GQ(Rational(1, 2))); }
    static QuadExt i() { return QuadExt(GQ::i()); }

    const GQ& rational_part() const { return a_; }
    const GQ& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool sqrt2_free() const { return b_.is_zero(); }

    /// Complex conjugation (sqrt2 is real).
    QuadExt conj() const { return {a_.conj(), b_.conj()}; }
    bool is_real() const { return a_.is_real() && b_.is_real(); }
    QuadExt real() const { return {GQ(a_.re()), GQ(b_.re())}; }
    QuadExt imag() const { return {GQ(a_.im()), GQ(b_.im())}; }

    QuadExt operator-() const { return {-a_, -b_}; }
    QuadExt& operator+=(const QuadExt& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        GQ a = a_ * o.a_ + GQ(2) * b_ * o.b_;
        GQ b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }

    QuadExt inverse() const {
        // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2), r = sqrt2
        GQ den = a_ * a_ - GQ(2) * b_ * b_;
        if (den.is_zero()) throw Error("division by zero QuadExt");
        GQ inv = den.inverse();
        return {a_ * inv, -b_ * inv};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Sign of a real element p + q*sqrt2. Requires is_real().
    int sign_real() const {
        int sp = sgn(a_.re()), sq = sgn(b_.re());
        if (sp == 0 && sq == 0) return 0;
        if (sp >= 0 && sq >= 0) return 1;
        if (sp <= 0 && sq <= 0) return -1;
        Rational d = a_.re() * a_.re() - b_.re() * b_.re() * 2;
        return sgn(d) > 0 ? sp : sq;
    }

    std::string str() const { return a_.str() + " + (" + b_.str() + ")*r2"; }

private:
    GQ a_, b_;
};

/// q = z1 + j z2 over a complex scalar type (GQ or QuadExt); j^2 = -1 and
/// z j = j conj(z), so (z1 + j z2)(z3 + j z4) =
/// z1 z3 - conj(z2) z4 + j (z2 z3 + conj(z1) z4).
template <class C>
struct Quaternion {
    C z1{}, z2{};

    Quaternion() = default;
    Quaternion(C a, C b) : z1(std::move(a)), z2(std::move(b)) {}

    static Quaternion one() { return {C(1), C(0)}; }
    static Quaternion i() { return {C::i(), C(0)}; }
    static Quaternion j() { return {C(0), C(1)}; }
    static Quaternion k() { return {C(0), -C::i()}; } // k = i j

    bool is_zero() const { return z1.is_zero() && z2.is_zero(); }

    Quaternion conj() const { return {z1.conj(), -z2}; }

    /// Fixed points of this map are the C-fixed quaternions x + j y, x, y real.
    Quaternion involution_C() const { return {z1.conj(), z2.conj()}; }
    bool is_C_fixed() const { return z1.is_real() && z2.is_real(); }

    Quaternion operator-() const { return {-z1, -z2}; }
    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.z1 + q.z1, p.z2 + q.z2};
    }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.z1 - q.z1, p.z2 - q.z2};
    }
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.z1 * q.z1 - p.z2.conj() * q.z2, p.z2 * q.z1 + p.z1.conj() * q.z2};
    }
    friend Quaternion operator*(const C& c, const Quaternion& q) { return Quaternion{C(c), C(0)} * q; }
    friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.z1 == q.z1 && p.z2 == q.z2; }
    friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

    /// q conj(q) = |q|^2, a real scalar.
    C norm2() const { return z1 * z1.conj() + z2.conj() * z2; }
};

using Quat = Quaternion<GQ>;
using QuatK = Quaternion<QuadExt>;

template <class C>
Quaternion<C> lift(const Quaternion<GQ>& q);

template <>
inline Quaternion<GQ> lift<GQ>(const Quaternion<GQ>& q) { return q; }
template <>
inline Quaternion<QuadExt> lift<QuadExt>(const Quaternion<GQ>& q) {
    return {QuadExt(q.z1), QuadExt(q.z2)};
}

enum class InnerKind { Definite, Split };

/// <v, w> = conj(q1) p1 +/- conj(q2) p2; right H-linear in the second slot.
template <class C>
Quaternion<C> inner_product(InnerKind kind, const std::array<Quaternion<C>, 2>& v,
                            const std::array<Quaternion<C>, 2>& w) {
    Quaternion<C> first = v[0].conj() * w[0];
    Quaternion<C> second = v[1].conj() * w[1];
    return kind == InnerKind::Definite ? first + second : first - second;
}

template <class C>
struct QuatMat2 {
    Quaternion<C> e[2][2];

    static QuatMat2 identity() {
        QuatMat2 m;
        m.e[0][0] = Quaternion<C>::one();
        m.e[1][1] = Quaternion<C>::one();
        return m;
    }

    friend QuatMat2 operator*(const QuatMat2& a, const QuatMat2& b) {
        QuatMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
        return r;
    }
    friend QuatMat2 operator+(const QuatMat2& a, const QuatMat2& b) {
        QuatMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] + b.e[i][j];
        return r;
    }
    friend QuatMat2 operator-(const QuatMat2& a, const QuatMat2& b) {
        QuatMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] - b.e[i][j];
        return r;
    }
    friend bool operator==(const QuatMat2& a, const QuatMat2& b) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (a.e[i][j] != b.e[i][j]) return false;
        return true;
    }

    QuatMat2 conj_transpose() const {
        QuatMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.e[i][j] = e[j][i].conj();
        return r;
    }

    bool is_zero() const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!e[i][j].is_zero()) return false;
        return true;
    }
};

/// sp(2): phi + conj-transpose(phi) = 0.
template <class C>
bool in_sp2_algebra(const QuatMat2<C>& m) {
    return (m + m.conj_transpose()).is_zero();
}

/// sp(1,1): conj(phi) eta + eta phi^t = 0 with eta = diag(1,-1); entrywise
/// this is phi11 + conj(phi11) = 0, phi22 + conj(phi22) = 0, phi21 = conj(phi12).
template <class C>
bool in_sp11_algebra(const QuatMat2<C>& m) {
    return (m.e[0][0] + m.e[0][0].conj()).is_zero() && (m.e[1][1] + m.e[1][1].conj()).is_zero() &&
           m.e[1][0] == m.e[0][1].conj();
}

} // namespace su3sl
