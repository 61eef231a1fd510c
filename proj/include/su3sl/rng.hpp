#pragma once

#include <cstdint>
#include <random>

#include "su3sl/rational.hpp"

namespace su3sl {

/// Deterministic stream of small exact numbers. mt19937_64 raw output is
/// bit-exact across platforms; we avoid std distributions on purpose.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform in [lo, hi], inclusive. Small ranges only; modulo bias is irrelevant here.
    long int_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(gen_() % span);
    }

    /// Nonzero integer in [-m, m].
    long nonzero_int(long m) {
        long v = int_in(-m, m);
        return v == 0 ? 1 : v;
    }

    Rational rational(long max_num = 6, long max_den = 4) {
        return Rational(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Rational nonzero_rational(long max_num = 6, long max_den = 4) {
        return Rational(nonzero_int(max_num), int_in(1, max_den));
    }

    GQ gaussian(long max_num = 6, long max_den = 4) {
        return GQ(rational(max_num, max_den), rational(max_num, max_den));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace su3sl
