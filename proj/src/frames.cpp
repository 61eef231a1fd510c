#include "su3sl/frames.hpp"

#include <algorithm>

#include "su3sl/errors.hpp"
#include "su3sl/linalg.hpp"
#include "su3sl/rng.hpp"

namespace su3sl {
namespace {

using K = QuadExt;

// ----- exterior algebra over the ten real frame coordinates, K coefficients
//
// Generator order: rho1 rho2 x1 y1 x2 y2 x3 y3 Re(tau) Im(tau).

using Mono = std::vector<unsigned>;

struct KForm {
    std::map<Mono, K> terms;

    bool is_zero() const { return terms.empty(); }

    void add(Mono m, K c) {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    static KForm gen(unsigned i, K c = K(1)) {
        KForm f;
        f.add({i}, std::move(c));
        return f;
    }

    KForm operator-() const {
        KForm r;
        for (auto& [m, c] : terms) r.terms[m] = -c;
        return r;
    }
    KForm& operator+=(const KForm& o) {
        for (auto& [m, c] : o.terms) add(m, c);
        return *this;
    }
    KForm& operator-=(const KForm& o) {
        for (auto& [m, c] : o.terms) add(m, -c);
        return *this;
    }
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(const K& c, const KForm& f) {
        KForm r;
        for (auto& [m, v] : f.terms) r.add(m, c * v);
        return r;
    }

    /// Coefficient-wise complex conjugation (the generators are real).
    KForm conj() const {
        KForm r;
        for (auto& [m, c] : terms) r.terms[m] = c.conj();
        return r;
    }

    bool sqrt2_free() const {
        for (auto& [m, c] : terms)
            if (!c.sqrt2_free()) return false;
        return true;
    }

    friend bool operator==(const KForm& a, const KForm& b) { return a.terms == b.terms; }
};

int merge_sign(const Mono& a, const Mono& b, Mono& out) {
    out.clear();
    std::size_t i = 0, j = 0;
    long t = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) out.push_back(a[i++]);
        else {
            t += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return t % 2 == 0 ? 1 : -1;
}

KForm wedge(const KForm& f, const KForm& g) {
    KForm r;
    Mono merged;
    for (auto& [ma, ca] : f.terms)
        for (auto& [mb, cb] : g.terms) {
            int s = merge_sign(ma, mb, merged);
            if (s == 0) continue;
            K c = ca * cb;
            if (s < 0) c = -c;
            r.add(merged, std::move(c));
        }
    return r;
}

// quaternion-valued forms: pair (z-part, j-part); the product rule matches
// (z1 + j z2)(z3 + j z4) with 1-form coefficients.
struct QF {
    KForm z, j;

    QF operator-() const { return {-z, -j}; }
    friend QF operator+(const QF& a, const QF& b) { return {a.z + b.z, a.j + b.j}; }
    friend QF operator-(const QF& a, const QF& b) { return {a.z - b.z, a.j - b.j}; }
};

QF qwedge(const QF& a, const QF& b) {
    return {wedge(a.z, b.z) - wedge(a.j.conj(), b.j), wedge(a.j, b.z) + wedge(a.z.conj(), b.j)};
}

constexpr unsigned RHO1 = 0, RHO2 = 1, TRE = 8, TIM = 9;
unsigned xg(unsigned i) { return 2 + 2 * i; }
unsigned yg(unsigned i) { return 3 + 2 * i; }

const K KI = K::i();

KForm omega1f(unsigned i) { return KForm::gen(xg(i)) + KI * KForm::gen(yg(i)); }
KForm omegab1f(unsigned i) { return KForm::gen(xg(i)) - KI * KForm::gen(yg(i)); }
KForm tau1f() { return KForm::gen(TRE) + KI * KForm::gen(TIM); }
KForm taub1f() { return KForm::gen(TRE) - KI * KForm::gen(TIM); }

// component matrix as quaternion-valued 1-forms
std::array<std::array<QF, 2>, 2> component_forms(FrameGroup g, bool sqrt2_normalized,
                                                 bool flip_tau_sign) {
    K s = sqrt2_normalized ? K::inv_sqrt2() : K(1);
    std::array<std::array<QF, 2>, 2> phi;
    phi[0][0] = {KI * KForm::gen(RHO1), omegab1f(2)};
    phi[1][1] = {KI * KForm::gen(RHO2), flip_tau_sign ? -tau1f() : tau1f()};
    if (g == FrameGroup::Sp2) {
        phi[0][1] = {-(s * omegab1f(0)), s * omega1f(1)};
        phi[1][0] = {s * omega1f(0), s * omega1f(1)};
    } else {
        phi[0][1] = {s * omegab1f(0), -(s * omega1f(1))};
        phi[1][0] = {s * omega1f(0), s * omega1f(1)};
    }
    return phi;
}

struct DerivedStructure {
    std::array<KForm, 3> d_omega;       // dw1, dw2, dw3
    std::array<KForm, kFrameDim> d_gen; // d of every real generator
};

DerivedStructure derive(FrameGroup g, bool sqrt2_normalized, bool flip_tau_sign = false) {
    auto phi = component_forms(g, sqrt2_normalized, flip_tau_sign);
    std::array<std::array<QF, 2>, 2> dphi;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            dphi[a][b] = -(qwedge(phi[a][0], phi[0][b]) + qwedge(phi[a][1], phi[1][b]));

    K inv_s = sqrt2_normalized ? K::sqrt2() : K(1);
    DerivedStructure d;
    d.d_omega[0] = inv_s * dphi[1][0].z;
    d.d_omega[1] = inv_s * dphi[1][0].j;
    d.d_omega[2] = dphi[0][0].j.conj();

    const K half(GQ(Rational(1, 2)));
    const K neg_half_i = -(KI * half);
    KForm dtau = dphi[1][1].j;
    d.d_gen[RHO1] = -(KI * dphi[0][0].z); // z-part is i * d(rho1)
    d.d_gen[RHO2] = -(KI * dphi[1][1].z);
    for (unsigned i = 0; i < 3; ++i) {
        d.d_gen[xg(i)] = half * (d.d_omega[i] + d.d_omega[i].conj());
        d.d_gen[yg(i)] = neg_half_i * (d.d_omega[i] - d.d_omega[i].conj());
    }
    d.d_gen[TRE] = half * (dtau + dtau.conj());
    d.d_gen[TIM] = neg_half_i * (dtau - dtau.conj());
    return d;
}

// d of a 2-form using the derived first structure equations
KForm exterior_d(const KForm& f, const std::array<KForm, kFrameDim>& d_gen) {
    KForm out;
    for (auto& [m, c] : f.terms) {
        for (std::size_t t = 0; t < m.size(); ++t) {
            KForm rest;
            rest.add({}, (t % 2 == 0) ? c : -c);
            for (std::size_t u = 0; u < m.size(); ++u) {
                if (u == t) continue;
                rest = wedge(rest, KForm::gen(m[u]));
            }
            // d g_{m[t]} moved to the front of the remaining factors
            out += wedge(d_gen[m[t]], rest);
        }
    }
    return out;
}

std::array<KForm, 3> target_structure(FrameGroup g) {
    std::array<KForm, 3> t;
    KForm rho1 = KForm::gen(RHO1), rho2 = KForm::gen(RHO2);
    t[0] = -(KI * wedge(rho2 - rho1, omega1f(0))) + wedge(taub1f(), omega1f(1)) +
           wedge(omegab1f(1), omegab1f(2));
    t[1] = -wedge(tau1f(), omega1f(0)) + KI * wedge(rho1 + rho2, omega1f(1)) +
           wedge(omegab1f(2), omegab1f(0));
    K c = g == FrameGroup::Sp2 ? K(1) : K(GQ(-2));
    t[2] = -(K(GQ(2)) * KI * wedge(rho1, omega1f(2))) + c * wedge(omegab1f(0), omegab1f(1));
    return t;
}

const char* kGenNames[kFrameDim] = {"rho1", "rho2", "x1", "y1", "x2", "y2", "x3", "y3", "tre", "tim"};

std::string describe_diff(const KForm& diff) {
    std::string s;
    for (auto& [m, c] : diff.terms) {
        if (!s.empty()) s += ", ";
        for (auto i : m) s += std::string(kGenNames[i]) + "^";
        if (!s.empty() && s.back() == '^') s.pop_back();
        s += ": " + c.str();
    }
    return s;
}

// ----- scalar-level component map and flattening for exact solves

std::vector<Rational> flatten(const QuatMat2<K>& m) {
    std::vector<Rational> out;
    out.reserve(32);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (const K* c : {&m.e[a][b].z1, &m.e[a][b].z2}) {
                out.push_back(c->rational_part().re());
                out.push_back(c->rational_part().im());
                out.push_back(c->sqrt2_part().re());
                out.push_back(c->sqrt2_part().im());
            }
    return out;
}

QuatMat2<K> involution_C(const QuatMat2<K>& m) {
    QuatMat2<K> r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r.e[a][b] = m.e[a][b].involution_C();
    return r;
}

bool group_normalization(FrameGroup g) { return g == FrameGroup::Sp2; }

// ----- fixed-locus sampling helpers

using HVec = std::array<QuatK, 2>;   // element of H^2
using Frame = std::array<HVec, 2>;   // columns e_1, e_2

InnerKind kind_of(FrameGroup g) { return g == FrameGroup::Sp2 ? InnerKind::Definite : InnerKind::Split; }

QuatK quat_real(const Rational& a, const Rational& b) { return {K(GQ(a)), K(GQ(b))}; }

HVec col_mul(const HVec& v, const QuatK& q) { return {v[0] * q, v[1] * q}; }

Frame frame_times(const Frame& e, const QuatMat2<K>& m) {
    Frame r;
    for (int a = 0; a < 2; ++a)
        for (int s = 0; s < 2; ++s) r[a][s] = e[0][s] * m.e[0][a] + e[1][s] * m.e[1][a];
    return r;
}

QuatMat2<K> frame_inverse(FrameGroup g, const Frame& e) {
    // Sp2: inverse = conjugate transpose; Sp11: eta conj-transpose eta.
    QuatMat2<K> m;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) m.e[a][b] = e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].conj();
    // m now holds conj(e)^t with rows = frame index, cols = H^2 slot
    if (g == FrameGroup::Sp11) {
        m.e[0][1] = -m.e[0][1];
        m.e[1][0] = -m.e[1][0];
    }
    return m;
}

QuatMat2<K> mat_from_frame(const Frame& e) {
    QuatMat2<K> m;
    for (int s = 0; s < 2; ++s)
        for (int a = 0; a < 2; ++a) m.e[s][a] = e[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)];
    return m;
}

bool hvec_C_fixed(const HVec& v) { return v[0].is_C_fixed() && v[1].is_C_fixed(); }

K det3(const std::array<std::array<K, 3>, 3>& m) {
    K d(0);
    d += m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    d -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    d += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return d;
}

FixedLocusSample run_sample(FrameGroup g, const Frame& e, const std::array<Rational, 3>& point,
                            Rng& rng) {
    FixedLocusSample rec;
    rec.point = point;
    InnerKind kind = kind_of(g);
    const K one(1);
    K e2_norm = g == FrameGroup::Sp2 ? one : -one;

    auto ip = [&](const HVec& a, const HVec& b) { return inner_product(kind, a, b); };
    rec.frame_ok = ip(e[0], e[0]) == QuatK(one, K(0)) && ip(e[1], e[1]) == QuatK(e2_norm, K(0)) &&
                   ip(e[0], e[1]).is_zero();
    rec.fixed_ok = hvec_C_fixed(e[0]) && hvec_C_fixed(e[1]);

    // three C-fixed tangent velocities with independent omega values
    bool norm = group_normalization(g);
    std::array<QuatMat2<K>, 3> ms;
    std::array<std::array<Rational, 3>, 3> vals;
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (unsigned k = 0; k < 3; ++k) {
            std::array<Rational, kFrameDim> coords{};
            for (unsigned i = 0; i < 3; ++i) {
                vals[k][i] = rng.rational(4, 3);
                coords[xg(i)] = vals[k][i];
            }
            coords[TRE] = rng.rational(4, 3);
            ms[k] = component_matrix(g, coords, norm);
        }
        std::vector<std::vector<Rational>> vm(3, std::vector<Rational>(3));
        for (unsigned k = 0; k < 3; ++k)
            for (unsigned i = 0; i < 3; ++i) vm[k][i] = vals[k][i];
        if (rank_q(vm) == 3) break;
        if (attempt == 63) return rec; // leaves independent_ok false
    }

    QuatMat2<K> einv = frame_inverse(g, e);
    QuatMat2<K> emat = mat_from_frame(e);
    std::array<std::array<K, 3>, 3> v{};
    rec.tangent_ok = rec.algebra_ok = rec.values_real_ok = true;
    for (unsigned k = 0; k < 3; ++k) {
        Frame edot = frame_times(e, ms[k]);
        rec.fixed_ok = rec.fixed_ok && hvec_C_fixed(edot[0]) && hvec_C_fixed(edot[1]);
        for (int a = 0; a < 2 && rec.tangent_ok; ++a)
            for (int b = 0; b < 2; ++b) {
                QuatK lhs = ip(edot[a], e[b]) + ip(e[a], edot[b]);
                if (!lhs.is_zero()) { rec.tangent_ok = false; break; }
            }
        QuatMat2<K> phi = einv * mat_from_frame(edot);
        if (!(emat * phi == mat_from_frame(edot))) rec.algebra_ok = false;
        if (!in_algebra(g, phi)) rec.algebra_ok = false;
        auto w = omega_values(g, phi, norm);
        for (unsigned i = 0; i < 3; ++i) {
            if (!w[i].is_real()) rec.values_real_ok = false;
            v[k][i] = w[i];
        }
    }

    // the tangent 3-plane in C^3 spanned by the omega-value vectors
    K det = det3(v);
    rec.independent_ok = !det.is_zero();
    rec.lagrangian_ok = true;
    for (unsigned a = 0; a < 3 && rec.lagrangian_ok; ++a)
        for (unsigned b = a + 1; b < 3; ++b) {
            // Omega_0(u, v) = Im sum conj(u_i) v_i
            K h(0);
            for (unsigned i = 0; i < 3; ++i) h += v[a][i].conj() * v[b][i];
            if (!h.imag().is_zero()) { rec.lagrangian_ok = false; break; }
        }
    rec.sl_ok = det.imag().is_zero();          // psi_0 = Im det vanishes
    rec.calibrated_ok = det.real().sign_real() != 0; // phi_0 = +/- vol, positive after orienting
    return rec;
}

} // namespace

std::string group_name(FrameGroup g) { return g == FrameGroup::Sp2 ? "sp2" : "sp11"; }

SpaceRef frame_form_space() {
    std::vector<Generator> g;
    g.push_back({"rho1", 0, false});
    g.push_back({"rho2", 1, false});
    for (unsigned i = 0; i < 3; ++i) g.push_back({"w" + std::to_string(i + 1), 5 + i, false});
    for (unsigned i = 0; i < 3; ++i) g.push_back({"w" + std::to_string(i + 1) + "b", 2 + i, false});
    g.push_back({"tau", 9, false});
    g.push_back({"taub", 8, false});
    return GeneratorSpace::make(std::move(g));
}

QuatMat2<QuadExt> component_matrix(FrameGroup g, const std::array<Rational, kFrameDim>& coords,
                                   bool sqrt2_normalized) {
    const K s = sqrt2_normalized ? K::inv_sqrt2() : K(1);
    auto cval = [&](unsigned re, unsigned im) { return K(GQ(coords[re], coords[im])); };
    K w1 = cval(2, 3), w2 = cval(4, 5), w3 = cval(6, 7), tau = cval(8, 9);
    QuatMat2<K> m;
    m.e[0][0] = {K(GQ(Rational(0), coords[0])), w3.conj()};
    m.e[1][1] = {K(GQ(Rational(0), coords[1])), tau};
    if (g == FrameGroup::Sp2) {
        m.e[0][1] = {-(s * w1.conj()), s * w2};
        m.e[1][0] = {s * w1, s * w2};
    } else {
        m.e[0][1] = {s * w1.conj(), -(s * w2)};
        m.e[1][0] = {s * w1, s * w2};
    }
    return m;
}

bool in_algebra(FrameGroup g, const QuatMat2<QuadExt>& m) {
    return g == FrameGroup::Sp2 ? in_sp2_algebra(m) : in_sp11_algebra(m);
}

std::array<QuadExt, 3> omega_values(FrameGroup g, const QuatMat2<QuadExt>& m, bool sqrt2_normalized) {
    (void)g;
    const K inv_s = sqrt2_normalized ? K::sqrt2() : K(1);
    return {inv_s * m.e[1][0].z1, inv_s * m.e[1][0].z2, m.e[0][0].z2.conj()};
}

std::map<std::string, Form> maurer_cartan_derive(FrameGroup g) {
    DerivedStructure d = derive(g, group_normalization(g));
    SpaceRef frame = frame_form_space();
    // real coordinates rewritten through w, wb, tau, taub
    std::array<Form, kFrameDim> img;
    const GQ half(Rational(1, 2));
    const GQ neg_half_i = GQ(Rational(0), Rational(-1, 2));
    img[RHO1] = Form::generator(frame, 0);
    img[RHO2] = Form::generator(frame, 1);
    for (unsigned i = 0; i < 3; ++i) {
        Form wi = Form::generator(frame, 2 + i), wib = Form::generator(frame, 5 + i);
        img[xg(i)] = (wi + wib) * half;
        img[yg(i)] = (wi - wib) * neg_half_i;
    }
    Form tau = Form::generator(frame, 8), taub = Form::generator(frame, 9);
    img[TRE] = (tau + taub) * half;
    img[TIM] = (tau - taub) * neg_half_i;

    std::map<std::string, Form> out;
    for (unsigned i = 0; i < 3; ++i) {
        const KForm& kf = d.d_omega[i];
        if (!kf.sqrt2_free())
            throw Error("derived structure equation has a sqrt2 residue");
        Form f = Form::zero(frame);
        for (auto& [m, c] : kf.terms) {
            Form term = Form::scalar(frame, ParamCoeff(c.rational_part()));
            for (auto gi : m) term = term.wedge(img[gi]);
            f += term;
        }
        out["w" + std::to_string(i + 1)] = f;
    }
    return out;
}

MatchReport match_with_normalization(FrameGroup g, bool sqrt2_normalized, bool flip_tau_sign) {
    MatchReport rep;
    rep.sqrt2_normalized = sqrt2_normalized;
    DerivedStructure d = derive(g, sqrt2_normalized, flip_tau_sign);
    auto target = target_structure(g);
    rep.match = true;
    for (unsigned i = 0; i < 3; ++i) {
        KForm diff = d.d_omega[i] - target[i];
        if (!diff.is_zero()) {
            rep.match = false;
            rep.diff += "d(w" + std::to_string(i + 1) + "): " + describe_diff(diff) + "; ";
        }
    }
    rep.d_squared_zero = true;
    for (unsigned i = 0; i < kFrameDim; ++i)
        if (!exterior_d(d.d_gen[i], d.d_gen).is_zero()) rep.d_squared_zero = false;
    return rep;
}

MatchReport match_paper_equation(FrameGroup g) {
    MatchReport with = match_with_normalization(g, true);
    MatchReport without = match_with_normalization(g, false);
    if (with.match) return with;
    if (without.match) return without;
    return group_normalization(g) ? with : without;
}

InvolutionReport involution_action(FrameGroup g) {
    InvolutionReport rep;

    Rng rng(20240 + (g == FrameGroup::Sp2 ? 2 : 11));
    rep.automorphism_ok = true;
    for (int t = 0; t < 100; ++t) {
        Quat p(rng.gaussian(), rng.gaussian()), q(rng.gaussian(), rng.gaussian());
        if ((p * q).involution_C() != p.involution_C() * q.involution_C()) {
            rep.automorphism_ok = false;
            break;
        }
    }

    // Solve C(M(v_k)) = M(P v_k) column by column; M flattens to a 32 x 10
    // exact matrix of full rank.
    bool norm = group_normalization(g);
    std::vector<std::vector<Rational>> mflat(32, std::vector<Rational>(kFrameDim));
    for (unsigned k = 0; k < kFrameDim; ++k) {
        std::array<Rational, kFrameDim> coords{};
        coords[k] = 1;
        auto col = flatten(component_matrix(g, coords, norm));
        for (unsigned r = 0; r < 32; ++r) mflat[r][k] = col[r];
    }
    std::vector<std::vector<Rational>> p_cols(kFrameDim);
    rep.equivariant_ok = true;
    for (unsigned k = 0; k < kFrameDim; ++k) {
        std::array<Rational, kFrameDim> coords{};
        coords[k] = 1;
        auto rhs = flatten(involution_C(component_matrix(g, coords, norm)));
        LinearSolveResult sol = solve_q(mflat, rhs);
        if (!sol.consistent || sol.rank != static_cast<int>(kFrameDim)) {
            rep.equivariant_ok = false;
            break;
        }
        p_cols[k] = sol.particular;
    }
    if (rep.equivariant_ok) {
        // expected induced map: rho -> -rho, x -> x, y -> -y, Re tau -> Re tau,
        // Im tau -> -Im tau, i.e. w_i -> wb_i and tau -> taub.
        std::array<Rational, kFrameDim> expected{-1, -1, 1, -1, 1, -1, 1, -1, 1, -1};
        rep.omega_to_conjugate = true;
        for (unsigned k = 0; k < kFrameDim; ++k)
            for (unsigned r = 0; r < kFrameDim; ++r) {
                Rational want = (r == k) ? expected[k] : Rational(0);
                if (p_cols[k][r] != want) rep.omega_to_conjugate = false;
            }
        rep.squares_to_identity = true;
        for (unsigned k = 0; k < kFrameDim; ++k)
            for (unsigned r = 0; r < kFrameDim; ++r) {
                Rational acc(0);
                for (unsigned m = 0; m < kFrameDim; ++m) acc += p_cols[k][m] * p_cols[m][r];
                if (acc != (r == k ? Rational(1) : Rational(0))) rep.squares_to_identity = false;
            }
    }

    // pullback on the model forms over the frame coform space
    SpaceRef frame = frame_form_space();
    std::map<std::uint32_t, Form> cstar;
    cstar[0] = -Form::generator(frame, 0);
    cstar[1] = -Form::generator(frame, 1);
    for (unsigned i = 0; i < 3; ++i) {
        cstar[2 + i] = Form::generator(frame, 5 + i);
        cstar[5 + i] = Form::generator(frame, 2 + i);
    }
    cstar[8] = Form::generator(frame, 9);
    cstar[9] = Form::generator(frame, 8);

    const GQ half_i(Rational(0), Rational(1, 2));
    Form omega = Form::zero(frame);
    for (unsigned i = 0; i < 3; ++i)
        omega += Form::monomial(frame, {2 + i, 5 + i}, ParamCoeff(half_i));
    Form psi = Form::monomial(frame, {2, 3, 4}, ParamCoeff(GQ(1)));
    rep.pullback_ok = omega.substitute(cstar) == -omega && psi.substitute(cstar) == psi.conjugate();
    return rep;
}

std::array<Rational, 4> sphere_point(FrameGroup g, const std::array<Rational, 3>& t) {
    if (g == FrameGroup::Sp2) {
        Rational n2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2];
        Rational den = 1 + n2;
        return {(1 - n2) / den, 2 * t[0] / den, 2 * t[1] / den, 2 * t[2] / den};
    }
    // stereographic chart of the pseudo-sphere from (-1, 0, 0, 0)
    Rational den = 1 + t[0] * t[0] - t[1] * t[1] - t[2] * t[2];
    if (sgn(den) == 0) throw DegenerateSample();
    Rational s = Rational(2) / den;
    return {-1 + s, s * t[0], s * t[1], s * t[2]};
}

std::vector<FixedLocusSample> sample_fixed_locus(FrameGroup g, unsigned n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<FixedLocusSample> out;
    out.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
        unsigned redraws = 0;
        for (;;) {
            std::array<Rational, 3> pt{rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
            std::array<Rational, 4> x;
            try {
                x = sphere_point(g, pt);
            } catch (const DegenerateSample&) {
                ++redraws;
                continue;
            }
            Frame e;
            e[0] = {quat_real(x[0], x[1]), quat_real(x[2], x[3])};
            if (g == FrameGroup::Sp2) e[1] = {-e[0][1].conj(), e[0][0].conj()};
            else e[1] = {e[0][1].conj(), e[0][0].conj()};
            // randomize the second column with a C-fixed unit
            Rational r = rng.rational(3, 2);
            Rational ud = 1 + r * r;
            QuatK u = quat_real((1 - r * r) / ud, 2 * r / ud);
            e[1] = col_mul(e[1], u);

            FixedLocusSample rec = run_sample(g, e, pt, rng);
            rec.redraws = redraws;
            out.push_back(rec);
            break;
        }
    }
    return out;
}

FixedLocusSample identity_frame_sample() {
    Frame e;
    e[0] = {QuatK::one(), QuatK{K(0), K(0)}};
    e[1] = {QuatK{K(0), K(0)}, QuatK::one()};
    Rng rng(7);
    return run_sample(FrameGroup::Sp2, e, {Rational(0), Rational(0), Rational(0)}, rng);
}

} // namespace su3sl
