#include "su3sl/su3_model.hpp"

#include "su3sl/errors.hpp"
#include "su3sl/linalg.hpp"

namespace su3sl {
namespace {

int epsilon3(unsigned i, unsigned j, unsigned k) {
    if (i == j || j == k || i == k) return 0;
    // parity of the permutation (i j k) of (0 1 2)
    int inv = 0;
    unsigned p[3] = {i, j, k};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

CMat cmat(std::size_t rows, std::size_t cols) {
    return CMat(rows, std::vector<GQ>(cols, GQ(0)));
}

CMat cmat_identity(std::size_t n, GQ scale) {
    CMat m = cmat(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = scale;
    return m;
}

CMat cmat_add(const CMat& a, const CMat& b) {
    CMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

bool cmat_equal(const CMat& a, const CMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

ModelForms model_forms(unsigned m) {
    if (m != 2 && m != 3) throw UnsupportedSpace("model forms exist for m = 2 or 3");
    ModelForms mf;
    mf.m = m;
    mf.cx = complex_model_space(m);
    mf.real = standard_real_space(2 * m);
    mf.g0 = cmat_identity(2 * m);

    const GQ half_i(Rational(0), Rational(1, 2));
    mf.Omega0 = Form::zero(mf.cx);
    for (unsigned j = 0; j < m; ++j)
        mf.Omega0 += Form::monomial(mf.cx, {j, m + j}, ParamCoeff(half_i));

    IndexTuple zs(m);
    for (unsigned j = 0; j < m; ++j) zs[j] = j;
    mf.Psi0 = Form::monomial(mf.cx, zs, ParamCoeff(GQ(1)));

    Form psi_bar = mf.Psi0.conjugate();
    const GQ half(Rational(1, 2));
    mf.phi0 = (mf.Psi0 + psi_bar) * half;               // Re
    mf.psi0 = (mf.Psi0 - psi_bar) * (-half_i);          // Im = (Psi - conj)/2i
    return mf;
}

Form to_real_coordinates(const Form& f, const SpaceRef& real_space) {
    const unsigned m = static_cast<unsigned>(real_space->size() / 2);
    if (f.space()->size() != 2 * m) throw SpaceMismatch();
    std::map<std::uint32_t, Form> images;
    for (unsigned j = 0; j < m; ++j) {
        Form x = Form::generator(real_space, j);
        Form y = Form::generator(real_space, m + j);
        images[j] = x + GQ::i() * y;
        images[m + j] = x - GQ::i() * y;
    }
    return f.map_generators(real_space, images);
}

Form matrix_to_two_form(const CMat& h, const SpaceRef& cx_space) {
    const std::size_t n = h.size();
    if (n == 0 || n % 2 != 0 || h[0].size() != n) throw NotSkew("expected a 2m x 2m matrix");
    const std::size_t m = n / 2;
    if (cx_space->size() != n) throw SpaceMismatch();
    // reality: top-right = conj(bottom-left), bottom-right = conj(top-left)
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (h[i][m + j] != h[m + i][j].conj()) throw NotSkew("not a real endomorphism (C != conj B)");
            if (h[m + i][m + j] != h[i][j].conj()) throw NotSkew("not a real endomorphism (D != conj A)");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (h[j][i] + h[i][j].conj() != GQ(0)) throw NotSkew("A^t + conj(A) != 0");
            if (h[m + j][i] + h[m + i][j] != GQ(0)) throw NotSkew("B^t + B != 0");
        }
    }
    const GQ half(Rational(1, 2)), quarter(Rational(1, 4));
    Form f = Form::zero(cx_space);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
            // (1/2) A_{i jbar} dzbar_i ^ dz_j
            f += Form::monomial(cx_space, {static_cast<std::uint32_t>(m + i), j}, ParamCoeff(half * h[i][j]));
            // (1/4) (B_{ij} dz_i ^ dz_j + conj)
            f += Form::monomial(cx_space, {i, j}, ParamCoeff(quarter * h[m + i][j]));
            f += Form::monomial(cx_space, {static_cast<std::uint32_t>(m + i), static_cast<std::uint32_t>(m + j)},
                                ParamCoeff(quarter * h[m + i][j].conj()));
        }
    }
    return f;
}

CMat two_form_to_matrix(const Form& f) {
    const std::size_t n = f.space()->size();
    const std::size_t m = n / 2;
    if (!f.pure_degree(2) || f.has_parameters()) throw NotSkew("expected a constant 2-form");
    CMat h = cmat(n, n);
    for (auto& [idx, c] : f.terms()) {
        const std::uint32_t a = idx[0], b = idx[1];
        const GQ v = c.constant();
        if (a < m && b >= m) {
            // term v z_a ^ zbar_{b-m} came from -(1/2) A_{(b-m) abar}
            h[b - m][a] += GQ(-2) * v;
        } else if (a < m && b < m) {
            // v z_a ^ z_b = (1/2) B_{ab} for a < b
            h[m + a][b] += GQ(2) * v;
            h[m + b][a] += GQ(-2) * v;
        }
        // zbar ^ zbar terms are the conjugates of the z ^ z ones
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            h[i][m + j] = h[m + i][j].conj();
            h[m + i][m + j] = h[i][j].conj();
        }
    return h;
}

std::pair<CMat, CMat> su2_split(const CMat& h) {
    if (h.size() != 4) throw NotSkew("su2_split expects so(4,R)");
    // validation happens in matrix_to_two_form's checks; redo the cheap ones
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            if (h[j][i] + h[i][j].conj() != GQ(0)) throw NotSkew("A^t + conj(A) != 0");
            if (h[2 + j][i] + h[2 + i][j] != GQ(0)) throw NotSkew("B^t + B != 0");
            if (h[i][2 + j] != h[2 + i][j].conj()) throw NotSkew("C != conj B");
            if (h[2 + i][2 + j] != h[i][j].conj()) throw NotSkew("D != conj A");
        }
    GQ half_tr = (h[0][0] + h[1][1]) * GQ(Rational(1, 2));
    CMat plus = cmat(4, 4), minus = cmat(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            GQ a0 = h[i][j] - (i == j ? half_tr : GQ(0));
            plus[i][j] = a0;
            plus[2 + i][2 + j] = a0.conj();
            minus[2 + i][j] = h[2 + i][j];
            minus[i][2 + j] = h[2 + i][j].conj();
        }
        minus[i][i] = half_tr;
        minus[2 + i][2 + i] = half_tr.conj();
    }
    return {plus, minus};
}

TorsionTensor TorsionTensor::zero() {
    return TorsionTensor{cmat(3, 3), cmat(3, 3), {GQ(0), GQ(0), GQ(0)}};
}

bool TorsionTensor::lambda_zero() const {
    return lam[0].is_zero() && lam[1].is_zero() && lam[2].is_zero();
}

RawTorsion raw_from_normalized(const CMat& n) {
    RawTorsion raw{cmat(3, 3), cmat(3, 3), cmat(3, 3)};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            for (unsigned k = 0; k < 3; ++k) {
                GQ v(0);
                for (unsigned l = 0; l < 3; ++l) {
                    int e = epsilon3(j, k, l);
                    if (e != 0) v += GQ(e) * n[i][l];
                }
                raw[i][j][k] = v;
            }
    return raw;
}

CMat normalized_from_raw(const RawTorsion& raw) {
    CMat n = cmat(3, 3);
    const GQ half(Rational(1, 2));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            GQ v(0);
            for (unsigned k = 0; k < 3; ++k)
                for (unsigned l = 0; l < 3; ++l) {
                    int e = epsilon3(j, k, l);
                    if (e != 0) v += GQ(e) * raw[i][k][l];
                }
            n[i][j] = half * v;
        }
    return n;
}

std::string StructureClass::tag_name() const {
    switch (tag) {
        case Tag::CalabiYau: return "CalabiYau";
        case Tag::NearlyKahler: return "NearlyKahler";
        case Tag::NearlyCalabiYauStrict: return "NearlyCalabiYauStrict";
        case Tag::Admissible: return "Admissible";
        case Tag::Generic: return "Generic";
    }
    return "Generic";
}

std::optional<std::pair<std::array<GQ, 3>, Rational>> admissibility_solve(const CMat& s, const CMat& n) {
    GQ tr = n[0][0] + n[1][1] + n[2][2];
    if (!tr.is_real()) return std::nullopt;

    // eps_{ljk} S_{il} = u_j delta_{ik} - u_k delta_{ij}, unknowns u_1..u_3
    // split into real and imaginary parts: x = (Re u_1, Im u_1, ...).
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            for (unsigned k = j + 1; k < 3; ++k) {
                GQ lhs(0);
                for (unsigned l = 0; l < 3; ++l) {
                    int e = epsilon3(l, j, k);
                    if (e != 0) lhs += GQ(e) * s[i][l];
                }
                // rhs coefficients on u_j and u_k
                Rational cj = (i == k) ? Rational(1) : Rational(0);
                Rational ck = (i == j) ? Rational(-1) : Rational(0);
                std::vector<Rational> re_row(6, Rational(0)), im_row(6, Rational(0));
                re_row[2 * j] = cj;
                re_row[2 * k] = ck;
                im_row[2 * j + 1] = cj;
                im_row[2 * k + 1] = ck;
                a.push_back(re_row);
                b.push_back(lhs.re());
                a.push_back(im_row);
                b.push_back(lhs.im());
            }
    LinearSolveResult sol = solve_q(std::move(a), std::move(b));
    if (!sol.consistent) return std::nullopt;
    std::array<GQ, 3> u{GQ(sol.particular[0], sol.particular[1]),
                        GQ(sol.particular[2], sol.particular[3]),
                        GQ(sol.particular[4], sol.particular[5])};
    return std::make_pair(u, tr.re());
}

StructureClass classify_torsion(const TorsionTensor& t, bool mu_present) {
    StructureClass out;
    const CMat& n = t.N;
    const CMat& s = t.S;
    bool n_zero = cmat_equal(n, cmat(3, 3));
    bool s_zero = cmat_equal(s, cmat(3, 3));
    bool lam_zero = t.lambda_zero();

    if (!mu_present && s_zero && lam_zero) {
        if (n_zero) {
            out.tag = StructureClass::Tag::CalabiYau;
            return out;
        }
        bool scalar = n[0][0].is_real() && n[0][0] == n[1][1] && n[1][1] == n[2][2] &&
                      n[0][1].is_zero() && n[0][2].is_zero() && n[1][0].is_zero() &&
                      n[1][2].is_zero() && n[2][0].is_zero() && n[2][1].is_zero();
        if (scalar && !n[0][0].is_zero()) {
            out.tag = StructureClass::Tag::NearlyKahler;
            out.nk_constant = n[0][0].re();
            return out;
        }
        bool hermitian = true;
        for (unsigned i = 0; i < 3 && hermitian; ++i)
            for (unsigned j = 0; j < 3; ++j)
                if (n[i][j] != n[j][i].conj()) { hermitian = false; break; }
        GQ tr = n[0][0] + n[1][1] + n[2][2];
        if (hermitian && tr.is_zero()) {
            out.tag = StructureClass::Tag::NearlyCalabiYauStrict;
            return out;
        }
    }
    if (lam_zero) {
        if (auto sol = admissibility_solve(s, n)) {
            out.tag = StructureClass::Tag::Admissible;
            out.u = sol->first;
            out.a = sol->second;
            return out;
        }
    }
    out.tag = StructureClass::Tag::Generic;
    return out;
}

} // namespace su3sl
