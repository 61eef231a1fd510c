#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "su3sl/form.hpp"
#include "su3sl/quat.hpp"

namespace su3sl {

enum class FrameGroup { Sp2, Sp11 };

std::string group_name(FrameGroup g);

/// Generators of the frame coform space, complex flavor:
/// rho1 rho2 w1 w2 w3 w1b w2b w3b tau taub.
SpaceRef frame_form_space();

/// The ten real component coordinates, in the order
/// rho1, rho2, Re w1, Im w1, Re w2, Im w2, Re w3, Im w3, Re tau, Im tau.
constexpr unsigned kFrameDim = 10;

/// Component matrix of the algebra element with the given real coordinates.
/// Sp2 carries the 1/sqrt2 normalization on the omega_1, omega_2 entries;
/// Sp11 does not (deriving both shows which one reproduces the displayed
/// structure equations for each group).
QuatMat2<QuadExt> component_matrix(FrameGroup g, const std::array<Rational, kFrameDim>& coords,
                                   bool sqrt2_normalized);

bool in_algebra(FrameGroup g, const QuatMat2<QuadExt>& m);

/// Recover the ten real coordinates from an algebra element; exact solve,
/// throws if the element is not in the image of the component map.
std::array<QuadExt, 3> omega_values(FrameGroup g, const QuatMat2<QuadExt>& m, bool sqrt2_normalized);

/// dw1, dw2, dw3 from d(phi) = -phi ^ phi, as forms over frame_form_space().
std::map<std::string, Form> maurer_cartan_derive(FrameGroup g);

struct MatchReport {
    bool match = false;
    bool sqrt2_normalized = false;  // which component normalization succeeded
    bool d_squared_zero = false;
    std::string diff;               // located coefficient mismatches, empty when match
};

/// Term-by-term comparison of the derived structure equations against the
/// displayed connection matrix and torsion column (+1 for Sp2, -2 for Sp11),
/// trying both component normalizations.
MatchReport match_paper_equation(FrameGroup g);

/// Comparison for a fixed normalization; used to locate deliberate
/// perturbations in tests.
MatchReport match_with_normalization(FrameGroup g, bool sqrt2_normalized, bool flip_tau_sign = false);

struct InvolutionReport {
    bool automorphism_ok = false;      // C(pq) = C(p) C(q) on seeded pairs
    bool equivariant_ok = false;       // C(M(v)) = M(P v) with the induced P
    bool omega_to_conjugate = false;   // P sends w_i to w_ib
    bool squares_to_identity = false;  // P^2 = 1
    bool pullback_ok = false;          // C* Omega = -Omega, C* Psi = conj(Psi)
    bool ok() const {
        return automorphism_ok && equivariant_ok && omega_to_conjugate && squares_to_identity &&
               pullback_ok;
    }
};

InvolutionReport involution_action(FrameGroup g);

struct FixedLocusSample {
    std::array<Rational, 3> point;  // parametrization draw
    unsigned redraws = 0;
    bool frame_ok = false;      // inner-product frame conditions hold exactly
    bool fixed_ok = false;      // frame and velocities are C-fixed
    bool tangent_ok = false;    // differentiated frame conditions hold
    bool algebra_ok = false;    // recovered phi lies in the algebra
    bool values_real_ok = false;
    bool independent_ok = false;
    bool lagrangian_ok = false; // Omega_0 vanishes on the tangent 3-plane
    bool sl_ok = false;         // psi_0 vanishes
    bool calibrated_ok = false; // phi_0 positive with the right orientation
    bool ok() const {
        return frame_ok && fixed_ok && tangent_ok && algebra_ok && values_real_ok &&
               independent_ok && lagrangian_ok && sl_ok && calibrated_ok;
    }
};

/// Stereographic rational point on S^3 (Sp2) or on the pseudo-sphere
/// x1^2+x2^2-x3^2-x4^2 = 1 (Sp11); throws DegenerateSample when the chart
/// denominator vanishes for the draw.
std::array<Rational, 4> sphere_point(FrameGroup g, const std::array<Rational, 3>& t);

/// Rational points on S^3 (Sp2) or on the pseudo-sphere x1^2+x2^2-x3^2-x4^2=1
/// (Sp11), a C-fixed frame over each, three independent C-fixed tangent
/// velocities, and the exact special-Lagrangian assertions on the resulting
/// 3-plane in C^3. Degenerate draws are redrawn and counted.
std::vector<FixedLocusSample> sample_fixed_locus(FrameGroup g, unsigned n, std::uint64_t seed);

/// One sample at the identity frame of Sp2 (the base point of the fixed locus).
FixedLocusSample identity_frame_sample();

} // namespace su3sl
