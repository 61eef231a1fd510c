#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "su3sl/form.hpp"

namespace su3sl {

using CMat = std::vector<std::vector<GQ>>; // small dense complex matrices

CMat cmat(std::size_t rows, std::size_t cols);
CMat cmat_identity(std::size_t n, GQ scale = GQ(1));
CMat cmat_add(const CMat& a, const CMat& b);
bool cmat_equal(const CMat& a, const CMat& b);

/// The flat C^m model: metric, Kaehler form and holomorphic volume form,
/// over the complexified coframe z1..zm, z1bar..zmbar.
struct ModelForms {
    unsigned m = 3;
    SpaceRef cx;       // complex model space
    SpaceRef real;     // standard real space of dimension 2m
    CMat g0;           // metric in real coordinates (identity)
    Form Omega0;       // (i/2) sum dz ^ dzbar
    Form Psi0;         // dz1 ^ ... ^ dzm
    Form psi0;         // Im Psi0
    Form phi0;         // Re Psi0
};

ModelForms model_forms(unsigned m);

/// Rewrite a form on the complex model space in real coordinates
/// (dz_j = x_j + i y_j).
Form to_real_coordinates(const Form& f, const SpaceRef& real_space);

/// so(2m,R) in the complex basis: blocks A (top-left) and B (bottom-left),
/// with top-right = conj(B), bottom-right = conj(A), A^t + conj(A) = 0,
/// B^t + B = 0. Input is the full 2m x 2m complex matrix.
Form matrix_to_two_form(const CMat& h, const SpaceRef& cx_space);

/// Inverse of matrix_to_two_form on constant degree-2 forms.
CMat two_form_to_matrix(const Form& f);

/// Split an so(4,R) matrix into its su(2)+ (traceless block-diagonal) and
/// su(2)- (trace part and B blocks) components.
std::pair<CMat, CMat> su2_split(const CMat& h);

/// Normalized first-order invariants of an SU(3)-structure.
struct TorsionTensor {
    CMat N;                 // 3x3, N_{i jbar}
    CMat S;                 // 3x3, S_{ij}
    std::array<GQ, 3> lam;  // lambda_k

    static TorsionTensor zero();
    bool lambda_zero() const;
};

/// Raw antisymmetric components N_{ijk} = eps_{jkl} N_{i lbar}; the pair of
/// reindexing maps below round-trip exactly.
using RawTorsion = std::array<CMat, 3>; // [i][j][k]

RawTorsion raw_from_normalized(const CMat& n);
CMat normalized_from_raw(const RawTorsion& raw);

struct StructureClass {
    enum class Tag { CalabiYau, NearlyKahler, NearlyCalabiYauStrict, Admissible, Generic };
    Tag tag = Tag::Generic;
    Rational nk_constant = 0;            // c for NearlyKahler
    std::optional<std::array<GQ, 3>> u;  // theta data for Admissible
    Rational a = 0;                      // trace of N for Admissible

    std::string tag_name() const;
};

/// Solve eps_{ljk} S_{il} = u_jbar delta_{ik} - u_kbar delta_{ij} exactly;
/// returns (u, a = tr N) when solvable and tr N is real.
std::optional<std::pair<std::array<GQ, 3>, Rational>> admissibility_solve(const CMat& s, const CMat& n);

/// Classification by exact tests, precedence
/// CalabiYau > NearlyKahler > NearlyCalabiYauStrict > Admissible > Generic.
/// Extra mu/beta-type torsion disables the first three branches.
StructureClass classify_torsion(const TorsionTensor& t, bool mu_present);

} // namespace su3sl
