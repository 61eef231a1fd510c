#pragma once

#include <stdexcept>
#include <string>

namespace su3sl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient ring is affine-linear in parameter symbols; a product that
// would become quadratic in parameters is rejected.
struct AffineOverflow : Error {
    explicit AffineOverflow(const std::string& what) : Error("affine overflow: " + what) {}
};

struct SpaceMismatch : Error {
    SpaceMismatch() : Error("forms live on different generator spaces") {}
};

struct NotDegreeOne : Error {
    NotDegreeOne() : Error("expected a pure degree-1 form") {}
};

struct ParametricInput : Error {
    ParametricInput() : Error("expected constant coefficients (no parameter symbols)") {}
};

struct UnsupportedSpace : Error {
    explicit UnsupportedSpace(const std::string& what) : Error("unsupported generator space: " + what) {}
};

struct NotSkew : Error {
    explicit NotSkew(const std::string& what) : Error("matrix is not in the expected skew class: " + what) {}
};

struct DegenerateSample : Error {
    DegenerateSample() : Error("parametrization denominator vanished for this draw") {}
};

struct NotLagrangian : Error {
    NotLagrangian() : Error("plane is not Lagrangian") {}
};

struct NotSpecialLagrangian : Error {
    NotSpecialLagrangian() : Error("plane is not special Lagrangian") {}
};

struct NotNormal : Error {
    NotNormal() : Error("vector is not orthogonal to the plane") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace su3sl
