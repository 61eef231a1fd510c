#pragma once

#include <array>

#include "su3sl/form.hpp"
#include "su3sl/su3_model.hpp"

namespace su3sl {

/// The ten scalar components of R_- in the Theta/Sigma bases:
/// (R_-)_1 = A T1 - conj(A) T2 + i a T3 + B S1 - conj(B) S2 + i b S3,
/// (R_-)_2 = C1 T1 + C2 T2 + C3 T3 + D1 S1 + D2 S2 + D3 S3.
struct CurvatureMinus {
    GQ A, B;
    std::array<GQ, 3> C, D;
    Rational a = 0, b = 0;
};

/// Matrix of R_- : Lambda^2_- -> Lambda^2 (6x3, a factor 2 included).
CMat curvature_matrix(const CurvatureMinus& rm);

struct CurvatureDecomposition {
    CMat Z;        // traceless Ricci block, 3x3
    CMat Wminus;   // anti-self-dual Weyl block, 3x3, trace zero
    Rational s;    // scalar curvature
};

CurvatureDecomposition decompose(const CurvatureMinus& rm);

/// Rebuild the 6x3 matrix from a decomposition: top block W^- + (s/12) Id,
/// bottom block Z.
CMat reassemble(const CurvatureDecomposition& d);

bool is_self_dual_einstein(const CurvatureMinus& rm);

/// Torsion of the twistor-space structure over a self-dual Einstein base
/// with scalar curvature s: N = diag(1, 1, s/24) plus its classification.
struct TwistorTorsion {
    CMat N;
    StructureClass cls;
};

TwistorTorsion twistor_torsion(const Rational& s);

/// d(omega_1..3) over generators {w_i, wbar_i, connection symbols}: the
/// connection rows plus the torsion columns
/// (wbar2^wbar3, wbar3^wbar1, (s/24) wbar1^wbar2).
struct TwistorStructure {
    SpaceRef space;
    std::array<Form, 3> d_omega;
    std::array<Form, 3> torsion;  // pure wbar^wbar parts
};

TwistorStructure twistor_structure_equation(const Rational& s);

/// The scale factor making |s/24| land in {0,1}; returns (normalized s, factor).
std::pair<Rational, Rational> normalize_scalar(const Rational& s);

} // namespace su3sl
