#pragma once

#include <optional>
#include <vector>

#include "su3sl/rational.hpp"

namespace su3sl {

/// Exact rank of a dense matrix over the Gaussian rationals.
int rank_gq(std::vector<std::vector<GQ>> m);

/// Exact rank over the rationals.
int rank_q(std::vector<std::vector<Rational>> m);

/// Determinant over the Gaussian rationals (square input).
GQ det_gq(std::vector<std::vector<GQ>> m);

struct LinearSolveResult {
    bool consistent = false;
    int rank = 0;
    std::vector<Rational> particular; // free variables set to zero
};

/// Solve A x = b exactly over the rationals; reports rank of A and, when the
/// system is consistent, one particular solution.
LinearSolveResult solve_q(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

} // namespace su3sl
