#pragma once

// Test-only reference implementations, kept independent of the library's
// evaluation path: determinants by permutation expansion, wedge evaluation
// by the shuffle formula.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "su3sl/form.hpp"

namespace su3sl::oracle {

inline GQ perm_det(const std::vector<std::vector<GQ>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    GQ total(0);
    do {
        // parity by counting inversions
        int inv = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        GQ prod(inv % 2 == 0 ? 1 : -1);
        for (std::size_t t = 0; t < n; ++t) prod *= m[t][perm[t]];
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Alternating evaluation of a constant-coefficient form, term by term via
/// the permutation expansion of the pairing determinant.
inline GQ eval(const Form& f, const std::vector<VectorSlot>& vs) {
    GQ total(0);
    for (auto& [idx, c] : f.terms()) {
        if (idx.size() != vs.size()) continue;
        std::vector<std::vector<GQ>> m(idx.size(), std::vector<GQ>(vs.size()));
        for (std::size_t t = 0; t < idx.size(); ++t)
            for (std::size_t u = 0; u < vs.size(); ++u) m[t][u] = vs[u].pair(idx[t]);
        total += c.constant() * perm_det(m);
    }
    return total;
}

/// (f ^ g)(v_1..v_{p+q}) by the shuffle formula, using oracle::eval only.
inline GQ shuffle_wedge_eval(const Form& f, unsigned p, const Form& g, unsigned q,
                             const std::vector<VectorSlot>& vs) {
    std::vector<unsigned> pick(p + q, 0);
    std::fill(pick.begin(), pick.begin() + p, 1u);
    std::sort(pick.begin(), pick.end(), std::greater<>());
    GQ total(0);
    // iterate over all p-subsets in decreasing mask order
    std::vector<unsigned> all(p + q);
    std::iota(all.begin(), all.end(), 0);
    std::vector<unsigned> subset(p);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned start, unsigned chosen) {
        if (chosen == p) {
            std::vector<VectorSlot> left, right;
            std::vector<unsigned> rest;
            std::size_t si = 0;
            for (unsigned i = 0; i < p + q; ++i) {
                if (si < subset.size() && subset[si] == i) {
                    left.push_back(vs[i]);
                    ++si;
                } else {
                    right.push_back(vs[i]);
                    rest.push_back(i);
                }
            }
            // sign of the shuffle (subset, rest)
            int inv = 0;
            for (unsigned a : subset)
                for (unsigned b : rest)
                    if (a > b) ++inv;
            GQ term = eval(f, left) * eval(g, right);
            total += (inv % 2 == 0) ? term : -term;
            return;
        }
        for (unsigned i = start; i + (p - chosen) <= p + q; ++i) {
            subset[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    if (p == 0) {
        total = eval(f, {}) * eval(g, vs);
    } else {
        rec(0, 0);
    }
    return total;
}

} // namespace su3sl::oracle
