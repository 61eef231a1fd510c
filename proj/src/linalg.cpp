#include "su3sl/linalg.hpp"

namespace su3sl {
namespace {

// Fraction-arithmetic Gaussian elimination. Row echelon in place, returns
// pivot columns. Works for any exact field with is_zero()/division.
template <class F, class IsZero>
int echelon(std::vector<std::vector<F>>& m, IsZero is_zero, std::vector<std::size_t>* pivots = nullptr) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            F factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int rank_gq(std::vector<std::vector<GQ>> m) {
    return echelon(m, [](const GQ& x) { return x.is_zero(); });
}

int rank_q(std::vector<std::vector<Rational>> m) {
    return echelon(m, [](const Rational& x) { return sgn(x) == 0; });
}

GQ det_gq(std::vector<std::vector<GQ>> m) {
    const std::size_t n = m.size();
    GQ det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return GQ(0);
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            GQ factor = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
        }
    }
    return det;
}

LinearSolveResult solve_q(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    LinearSolveResult res;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivots;
    int aug_rank = echelon(a, [](const Rational& x) { return sgn(x) == 0; }, &pivots);
    // rank of the coefficient part = pivots strictly left of the constant column
    int rank = 0;
    for (auto c : pivots)
        if (c < cols) ++rank;
    res.rank = rank;
    res.consistent = (aug_rank == rank);
    if (!res.consistent) return res;
    res.particular.assign(cols, Rational(0));
    for (int i = 0; i < rank; ++i) {
        std::size_t c = pivots[static_cast<std::size_t>(i)];
        res.particular[c] = a[static_cast<std::size_t>(i)][cols] / a[static_cast<std::size_t>(i)][c];
    }
    return res;
}

} // namespace su3sl
