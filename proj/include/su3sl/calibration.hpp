#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "su3sl/su3_model.hpp"

namespace su3sl {

/// A real 3-plane in C^3 given by three independent spanning vectors with
/// rational real coordinates (x1, x2, x3, y1, y2, y3).
class Plane3 {
public:
    explicit Plane3(std::array<std::array<Rational, 6>, 3> basis);

    const std::array<std::array<Rational, 6>, 3>& basis() const { return basis_; }

    /// Complex coordinates z_j = x_j + i y_j of basis vector k.
    std::array<GQ, 3> complex_basis_vector(unsigned k) const;

    /// Euclidean Gram matrix of the basis (rational, symmetric).
    std::array<std::array<Rational, 3>, 3> gram() const;

private:
    std::array<std::array<Rational, 6>, 3> basis_;
};

bool is_lagrangian(const Plane3& e);

struct LambdaPhase {
    GQ numerator;        // Psi_0 evaluated on the basis
    Rational gram_det;   // vol^2 of the basis
    bool exact = false;  // true when sqrt(gram_det) is rational
    GQ exact_value;      // lambda when exact
    std::complex<double> approx;
};

/// Psi_0|_E = lambda vol_E; |lambda| = 1, asserted exactly via
/// |numerator|^2 == gram_det. Throws NotLagrangian otherwise.
LambdaPhase lambda_phase(const Plane3& e);

bool is_special_lagrangian(const Plane3& e);

/// A in SU(3) (floating) mapping an orthonormalized basis of E onto R^3;
/// unitarity and det residuals stay below 1e-9 for special Lagrangian input.
std::array<std::array<std::complex<double>, 3>, 3> su3_witness(const Plane3& e);

/// Exact check of V _| Im Psi_0 |_E = -*(V _| Omega_0 |_E) on a special
/// Lagrangian plane with normal vector V (real coordinates). The star is the
/// 3-dimensional Hodge dual in E for the induced metric and the calibrated
/// orientation; irrational volume factors are compared by sign and square.
bool mclean_identity(const Plane3& e, const std::array<Rational, 6>& v);

/// Exact-rational SU(3) elements from seeded phase and rotation data, and
/// their action on planes; used by tests and the sampling subcommands.
struct RationalSU3 {
    CMat m; // 3x3, unitary with determinant 1, Gaussian-rational entries
};

RationalSU3 random_rational_su3(Rng& rng);
Plane3 apply_su3(const RationalSU3& a, const Plane3& e);
std::array<Rational, 6> apply_su3_vector(const RationalSU3& a, const std::array<Rational, 6>& v);

/// i * (A w) for real rational w: a normal vector to A(R^3).
std::array<Rational, 6> normal_to_su3_plane(const RationalSU3& a, const std::array<Rational, 3>& w);

Plane3 standard_r3();

} // namespace su3sl
