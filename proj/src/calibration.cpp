#include "su3sl/calibration.hpp"

#include <cmath>

#include "su3sl/errors.hpp"
#include "su3sl/linalg.hpp"
#include "su3sl/rng.hpp"

namespace su3sl {
namespace {

int epsilon3(unsigned i, unsigned j, unsigned k) {
    if (i == j || j == k || i == k) return 0;
    int inv = 0;
    unsigned p[3] = {i, j, k};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

GQ det3(const std::array<std::array<GQ, 3>, 3>& m) {
    GQ d(0);
    d += m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    d -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    d += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return d;
}

Rational det3_q(const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Omega_0(u, v) = sum_j (x_j(u) y_j(v) - y_j(u) x_j(v)) in real coordinates.
Rational omega0(const std::array<Rational, 6>& u, const std::array<Rational, 6>& v) {
    Rational s(0);
    for (unsigned j = 0; j < 3; ++j) s += u[j] * v[3 + j] - u[3 + j] * v[j];
    return s;
}

Rational dot6(const std::array<Rational, 6>& u, const std::array<Rational, 6>& v) {
    Rational s(0);
    for (unsigned j = 0; j < 6; ++j) s += u[j] * v[j];
    return s;
}

std::array<GQ, 3> to_complex(const std::array<Rational, 6>& v) {
    return {GQ(v[0], v[3]), GQ(v[1], v[4]), GQ(v[2], v[5])};
}

GQ psi_complex_det(const Plane3& e) {
    std::array<std::array<GQ, 3>, 3> m;
    for (unsigned k = 0; k < 3; ++k) {
        auto z = e.complex_basis_vector(k);
        for (unsigned j = 0; j < 3; ++j) m[j][k] = z[j]; // columns are the basis vectors
    }
    return det3(m);
}

} // namespace

Plane3::Plane3(std::array<std::array<Rational, 6>, 3> basis) : basis_(std::move(basis)) {
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(6));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 6; ++j) m[i][j] = basis_[i][j];
    if (rank_q(m) != 3) throw Error("plane basis is linearly dependent");
}

std::array<GQ, 3> Plane3::complex_basis_vector(unsigned k) const { return to_complex(basis_[k]); }

std::array<std::array<Rational, 3>, 3> Plane3::gram() const {
    std::array<std::array<Rational, 3>, 3> g;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) g[i][j] = dot6(basis_[i], basis_[j]);
    return g;
}

bool is_lagrangian(const Plane3& e) {
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i + 1; j < 3; ++j)
            if (sgn(omega0(e.basis()[i], e.basis()[j])) != 0) return false;
    return true;
}

LambdaPhase lambda_phase(const Plane3& e) {
    if (!is_lagrangian(e)) throw NotLagrangian();
    LambdaPhase out;
    out.numerator = psi_complex_det(e);
    out.gram_det = det3_q(e.gram());
    // |Psi_0(basis)|^2 equals det Gram on a Lagrangian plane; keep it exact.
    if (out.numerator.norm2() != out.gram_det)
        throw Error("Lagrangian phase identity |Psi_0|^2 = det Gram failed");
    Rational root;
    if (exact_sqrt(out.gram_det, root)) {
        out.exact = true;
        out.exact_value = out.numerator * GQ(root).inverse();
        out.approx = {out.exact_value.re_d(), out.exact_value.im_d()};
    } else {
        double r = std::sqrt(out.gram_det.get_d());
        out.approx = {out.numerator.re_d() / r, out.numerator.im_d() / r};
    }
    return out;
}

bool is_special_lagrangian(const Plane3& e) {
    if (!is_lagrangian(e)) return false;
    return sgn(psi_complex_det(e).im()) == 0;
}

std::array<std::array<std::complex<double>, 3>, 3> su3_witness(const Plane3& e) {
    if (!is_special_lagrangian(e)) throw NotSpecialLagrangian();
    // Gram-Schmidt over R^6; a Lagrangian orthonormal basis is Hermitian
    // orthonormal, so the column matrix is unitary.
    std::array<std::array<double, 6>, 3> b;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 6; ++j) b[i][j] = e.basis()[i][j].get_d();
    for (unsigned i = 0; i < 3; ++i) {
        for (unsigned k = 0; k < i; ++k) {
            double d = 0;
            for (unsigned j = 0; j < 6; ++j) d += b[i][j] * b[k][j];
            for (unsigned j = 0; j < 6; ++j) b[i][j] -= d * b[k][j];
        }
        double n = 0;
        for (unsigned j = 0; j < 6; ++j) n += b[i][j] * b[i][j];
        n = std::sqrt(n);
        for (unsigned j = 0; j < 6; ++j) b[i][j] /= n;
    }
    using Cd = std::complex<double>;
    std::array<std::array<Cd, 3>, 3> u; // columns are the orthonormal basis
    for (unsigned k = 0; k < 3; ++k)
        for (unsigned j = 0; j < 3; ++j) u[j][k] = Cd(b[k][j], b[k][3 + j]);
    // A = conj-transpose(U) maps the basis to the standard real axes
    std::array<std::array<Cd, 3>, 3> a;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) a[i][j] = std::conj(u[j][i]);
    Cd det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    // det is +-1 for special Lagrangian input; correct the phase on one row
    for (unsigned j = 0; j < 3; ++j) a[0][j] /= det;
    return a;
}

bool mclean_identity(const Plane3& e, const std::array<Rational, 6>& v) {
    if (!is_special_lagrangian(e)) throw NotSpecialLagrangian();
    for (unsigned i = 0; i < 3; ++i)
        if (sgn(dot6(v, e.basis()[i])) != 0) throw NotNormal();

    // orient the basis by the calibration: phi_0(b1, b2, b3) > 0
    std::array<std::array<Rational, 6>, 3> b = e.basis();
    GQ det = psi_complex_det(e);
    if (sgn(det.re()) == 0) throw Error("degenerate calibrated volume");
    if (sgn(det.re()) < 0) std::swap(b[0], b[1]);
    Plane3 oriented(b);

    // 1-form v_i = Omega_0(V, b_i) on E
    std::array<Rational, 3> vv;
    for (unsigned i = 0; i < 3; ++i) vv[i] = omega0(v, b[i]);

    // raise the index with the Gram matrix: solve G u = vv
    auto g = oriented.gram();
    std::vector<std::vector<Rational>> gm(3, std::vector<Rational>(3));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) gm[i][j] = g[i][j];
    LinearSolveResult sol = solve_q(gm, {vv[0], vv[1], vv[2]});
    if (!sol.consistent || sol.rank != 3) throw Error("Gram matrix is singular");

    // *(v)(b_i, b_j) = sqrt(det G) * sum_k u_k eps_{k i j}; compare against
    // w_{ij} = (V _| psi_0)(b_i, b_j) by sign and square, exactly.
    Rational gdet = det3_q(g);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i + 1; j < 3; ++j) {
            Rational r(0);
            for (unsigned k = 0; k < 3; ++k) {
                int eps = epsilon3(k, i, j);
                if (eps != 0) r += Rational(eps) * sol.particular[k];
            }
            // psi_0(V, b_i, b_j) = Im det[V b_i b_j] in complex coordinates
            std::array<std::array<GQ, 3>, 3> m;
            auto vz = to_complex(v);
            auto bi = to_complex(b[i]);
            auto bj = to_complex(b[j]);
            for (unsigned t = 0; t < 3; ++t) {
                m[t][0] = vz[t];
                m[t][1] = bi[t];
                m[t][2] = bj[t];
            }
            Rational w = det3(m).im();
            // require w == -sqrt(gdet) * r
            if (sgn(w) == 0 && sgn(r) == 0) continue;
            if (sgn(w) * sgn(r) >= 0) return false;     // signs must oppose
            if (w * w != gdet * r * r) return false;    // magnitudes must agree
        }
    return true;
}

RationalSU3 random_rational_su3(Rng& rng) {
    // diagonal unit phases with product 1, times a Cayley rotation in SO(3)
    auto phase = [&](void) {
        Rational t = rng.rational(3, 2);
        Rational d = 1 + t * t;
        return GQ((1 - t * t) / d, 2 * t / d);
    };
    GQ p1 = phase(), p2 = phase();
    GQ p3 = (p1 * p2).inverse();
    CMat diag = cmat(3, 3);
    diag[0][0] = p1;
    diag[1][1] = p2;
    diag[2][2] = p3;

    // R = (I - S)^-1 (I + S) for rational skew S: orthogonal, det 1
    std::array<std::array<Rational, 3>, 3> s{};
    s[0][1] = rng.rational(2, 3);
    s[0][2] = rng.rational(2, 3);
    s[1][2] = rng.rational(2, 3);
    s[1][0] = -s[0][1];
    s[2][0] = -s[0][2];
    s[2][1] = -s[1][2];
    std::array<std::array<Rational, 3>, 3> a{}, c{};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            a[i][j] = (i == j ? Rational(1) : Rational(0)) - s[i][j];
            c[i][j] = (i == j ? Rational(1) : Rational(0)) + s[i][j];
        }
    // solve A R = C column by column
    std::array<std::array<Rational, 3>, 3> r{};
    for (unsigned col = 0; col < 3; ++col) {
        std::vector<std::vector<Rational>> am(3, std::vector<Rational>(3));
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) am[i][j] = a[i][j];
        LinearSolveResult sol = solve_q(am, {c[0][col], c[1][col], c[2][col]});
        if (!sol.consistent || sol.rank != 3) throw Error("Cayley denominator singular");
        for (unsigned i = 0; i < 3; ++i) r[i][col] = sol.particular[i];
    }

    RationalSU3 out;
    out.m = cmat(3, 3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) out.m[i][j] = diag[i][i] * GQ(r[i][j]);
    return out;
}

std::array<Rational, 6> apply_su3_vector(const RationalSU3& a, const std::array<Rational, 6>& v) {
    auto z = to_complex(v);
    std::array<Rational, 6> out{};
    for (unsigned i = 0; i < 3; ++i) {
        GQ w(0);
        for (unsigned j = 0; j < 3; ++j) w += a.m[i][j] * z[j];
        out[i] = w.re();
        out[3 + i] = w.im();
    }
    return out;
}

Plane3 apply_su3(const RationalSU3& a, const Plane3& e) {
    std::array<std::array<Rational, 6>, 3> b;
    for (unsigned k = 0; k < 3; ++k) b[k] = apply_su3_vector(a, e.basis()[k]);
    return Plane3(b);
}

std::array<Rational, 6> normal_to_su3_plane(const RationalSU3& a, const std::array<Rational, 3>& w) {
    std::array<Rational, 6> real_w{w[0], w[1], w[2], 0, 0, 0};
    auto img = apply_su3_vector(a, real_w);
    // multiply by i: (x + i y) -> (-y + i x)
    std::array<Rational, 6> out;
    for (unsigned j = 0; j < 3; ++j) {
        out[j] = -img[3 + j];
        out[3 + j] = img[j];
    }
    return out;
}

Plane3 standard_r3() {
    std::array<std::array<Rational, 6>, 3> b{};
    b[0][0] = 1;
    b[1][1] = 1;
    b[2][2] = 1;
    return Plane3(b);
}

} // namespace su3sl
