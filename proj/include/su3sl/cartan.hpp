#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "su3sl/form.hpp"
#include "su3sl/rng.hpp"

namespace su3sl {

/// A constant-coefficient exterior differential system at a point, with the
/// fiber 1-forms expressed as parameter-affine combinations of the
/// independence generators.
struct EDSSystem {
    std::string name;
    SpaceRef space;
    std::vector<Form> ideal;                        // parameter-free generators
    std::map<std::uint32_t, Form> substitution;     // fiber generator -> affine 1-form
    std::vector<std::string> free_params;           // canonical complex symbols, fixed order
    std::map<std::string, GQ> base_point;           // a, u coordinates (echo)

    unsigned independence_count() const;
    unsigned fiber_count() const { return static_cast<unsigned>(space->size()) - independence_count(); }
};

/// dOmega, dpsi on the 34-dimensional quotient frame space: generators
/// w_i, wbar_i, the Hermitian kappa block, beta, betabar and mu.
EDSSystem build_nearly_cy_system();

/// Pi_3, Pi_4 with the extra Du, Dubar, Da generators and base point (a0, u0).
EDSSystem build_admissible_system(const Rational& a0, const std::array<GQ, 3>& u0);

struct IntegralElementVariety {
    std::vector<std::string> columns;               // real unknowns, 2 per complex symbol
    std::vector<std::vector<Rational>> rows;        // coefficient matrix
    std::vector<Rational> constants;                // rows * x + constants = 0
    int rank = 0;
    bool consistent = true;
    std::map<std::string, GQ> particular;           // one exact solution (complex symbols)
};

/// Substitute the parameter ansatz into every ideal generator, collect the
/// coefficients of the base wedge monomials, split complex rows into real
/// rows and rank them exactly.
IntegralElementVariety integral_element_rank(const EDSSystem& sys);

/// Ideal generators shifted so the fiber-zero 6-plane is a genuine integral
/// element; verifies that the pure-base parts cancel identically.
std::vector<Form> translate_ideal(const EDSSystem& sys, const IntegralElementVariety& iv);

/// All contractions (v_{i1} ^ ... ^ v_{i_{p-1}}) _| Phi for ideal generators
/// of degree p and index subsets of the prefix.
std::vector<Form> polar_forms(const std::vector<Form>& ideal, const std::vector<VectorSlot>& prefix);

/// Rank of the polar equations of span(flag_prefix) at the reference
/// integral element.
int polar_rank(const EDSSystem& sys, const std::vector<VectorSlot>& flag_prefix);

struct CartanReport {
    std::string system;
    std::vector<VectorSlot> flag;
    std::array<int, 6> c{};       // polar ranks c_0..c_5
    std::array<int, 7> s{};       // characters s_0..s_6
    int integral_rank = 0;
    bool consistent = true;
    int test_lhs = 0;             // 6 s0 + 5 s1 + 4 s2 + 3 s3 + 2 s4 + s5
    int test_rhs = 0;             // rank of the integral-element equations
    bool involutive = false;
    unsigned fiber_count = 0;
    unsigned param_count = 0;     // real parameter dimension
    bool bookkeeping_ok = false;  // s6 double-entry check, see cartan.cpp
    std::string notes;
};

CartanReport cartan_test(const EDSSystem& sys, const std::vector<VectorSlot>& flag);

/// The paper-order flag: e_i dual to Re(w_i), e_{3+i} dual to Im(w_i).
std::vector<VectorSlot> default_flag(const EDSSystem& sys);

/// A random rational basis of the reference integral element.
std::vector<VectorSlot> random_flag(const EDSSystem& sys, Rng& rng);

struct PolarRelationReport {
    Form combination;             // T1 - T2 - T3 - T4
    bool relation_zero = false;
    bool partials_nonzero = false; // dropping any one term leaves a nonzero form
    bool ok = false;
};

/// The four-term relation among (e2^e4)_|dOmega, (e1^e5)_|dOmega,
/// (e2^e3^e5)_|dpsi and (e1^e3^e4)_|dpsi at the reference element.
PolarRelationReport polar_relation_check(const EDSSystem& sys);

} // namespace su3sl
