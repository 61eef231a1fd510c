#include "su3sl/curvature4.hpp"

#include "su3sl/errors.hpp"

namespace su3sl {

namespace {
const GQ I = GQ::i();
}

CMat curvature_matrix(const CurvatureMinus& rm) {
    CMat m = cmat(6, 3);
    const GQ two(2);
    m[0] = {two * rm.C[1].conj(), two * rm.C[0], two * I * rm.A};
    m[1] = {two * rm.C[0].conj(), two * rm.C[1], -two * I * rm.A.conj()};
    m[2] = {two * rm.C[2].conj(), two * rm.C[2], GQ(-2) * GQ(rm.a)};
    m[3] = {two * rm.D[1].conj(), two * rm.D[0], two * I * rm.B};
    m[4] = {two * rm.D[0].conj(), two * rm.D[1], -two * I * rm.B.conj()};
    m[5] = {two * rm.D[2].conj(), two * rm.D[2], GQ(-2) * GQ(rm.b)};
    return m;
}

CurvatureDecomposition decompose(const CurvatureMinus& rm) {
    CurvatureDecomposition d;
    const GQ two(2);
    d.Z = cmat(3, 3);
    d.Z[0] = {two * rm.D[1].conj(), two * rm.D[0], two * I * rm.B};
    d.Z[1] = {two * rm.D[0].conj(), two * rm.D[1], -two * I * rm.B.conj()};
    d.Z[2] = {two * rm.D[2].conj(), two * rm.D[2], GQ(-2) * GQ(rm.b)};

    Rational trace_part = rm.C[1].re() * 2 - rm.a; // C2 + conj(C2) - a
    d.s = trace_part * 8;

    d.Wminus = cmat(3, 3);
    d.Wminus[0] = {two * rm.C[1].conj(), two * rm.C[0], two * I * rm.A};
    d.Wminus[1] = {two * rm.C[0].conj(), two * rm.C[1], -two * I * rm.A.conj()};
    d.Wminus[2] = {two * rm.C[2].conj(), two * rm.C[2], GQ(-2) * GQ(rm.a)};
    GQ shift(Rational(2, 3) * trace_part);
    for (unsigned i = 0; i < 3; ++i) d.Wminus[i][i] -= shift;
    return d;
}

CMat reassemble(const CurvatureDecomposition& d) {
    CMat m = cmat(6, 3);
    GQ diag(d.s / 12);
    for (unsigned i = 0; i < 3; ++i) {
        for (unsigned j = 0; j < 3; ++j) {
            m[i][j] = d.Wminus[i][j] + (i == j ? diag : GQ(0));
            m[3 + i][j] = d.Z[i][j];
        }
    }
    return m;
}

bool is_self_dual_einstein(const CurvatureMinus& rm) {
    if (!rm.A.is_zero() || !rm.B.is_zero()) return false;
    if (!rm.C[0].is_zero() || !rm.C[2].is_zero()) return false;
    if (!rm.D[0].is_zero() || !rm.D[1].is_zero() || !rm.D[2].is_zero()) return false;
    if (sgn(rm.b) != 0) return false;
    return rm.C[1].is_real() && rm.C[1] == GQ(-rm.a);
}

TwistorTorsion twistor_torsion(const Rational& s) {
    TwistorTorsion t;
    t.N = cmat(3, 3);
    t.N[0][0] = GQ(1);
    t.N[1][1] = GQ(1);
    t.N[2][2] = GQ(s / 24);
    TorsionTensor tt = TorsionTensor::zero();
    tt.N = t.N;
    t.cls = classify_torsion(tt, false);
    return t;
}

TwistorStructure twistor_structure_equation(const Rational& s) {
    // w1 w2 w3 w1b w2b w3b a11 a12 a21 a22; the connection entries are opaque
    // formal generators (alpha is u(2)-valued, 2i rho1 = -tr alpha row for w3).
    std::vector<Generator> g;
    for (unsigned i = 0; i < 3; ++i) g.push_back({"w" + std::to_string(i + 1), i + 3, false});
    for (unsigned i = 0; i < 3; ++i) g.push_back({"w" + std::to_string(i + 1) + "b", i, false});
    for (auto name : {"a11", "a12", "a21", "a22"})
        g.push_back({name, static_cast<std::uint32_t>(g.size()), false});
    TwistorStructure ts;
    ts.space = GeneratorSpace::make(std::move(g));
    const SpaceRef& sp = ts.space;
    auto wg = [&](unsigned i) { return i; };
    auto wbg = [&](unsigned i) { return i + 3; };
    const std::uint32_t A11 = 6, A12 = 7, A21 = 8, A22 = 9;

    ts.d_omega[0] = Form::monomial(sp, {A11, wg(0)}, ParamCoeff(GQ(-1))) +
                    Form::monomial(sp, {A12, wg(1)}, ParamCoeff(GQ(-1))) +
                    Form::monomial(sp, {wbg(1), wbg(2)}, ParamCoeff(GQ(1)));
    ts.d_omega[1] = Form::monomial(sp, {A21, wg(0)}, ParamCoeff(GQ(-1))) +
                    Form::monomial(sp, {A22, wg(1)}, ParamCoeff(GQ(-1))) +
                    Form::monomial(sp, {wbg(2), wbg(0)}, ParamCoeff(GQ(1)));
    ts.d_omega[2] = Form::monomial(sp, {A11, wg(2)}, ParamCoeff(GQ(1))) +
                    Form::monomial(sp, {A22, wg(2)}, ParamCoeff(GQ(1))) +
                    Form::monomial(sp, {wbg(0), wbg(1)}, ParamCoeff(GQ(s / 24)));
    for (unsigned i = 0; i < 3; ++i)
        ts.torsion[i] = ts.d_omega[i].filter([&](std::uint32_t k) { return k >= 3 && k < 6; });
    return ts;
}

std::pair<Rational, Rational> normalize_scalar(const Rational& s) {
    if (sgn(s) == 0) return {Rational(0), Rational(1)};
    Rational factor = abs(s) / 24;
    return {s / factor, factor};
}

} // namespace su3sl
