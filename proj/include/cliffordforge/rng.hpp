#pragma once

#include "gaussian.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cliffordforge {

// Deterministic random source for verification sweeps. Sampling uses the raw
// 64-bit stream reduced by modulus so a given seed yields the same values on
// every platform (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long long max_num = 9, long long max_den = 4) {
        return Rational(BigInt(range(-max_num, max_num)), BigInt(range(1, max_den)));
    }

    Rational nonzero_rational(long long max_num = 9, long long max_den = 4) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    GaussianRational gaussian(long long max_num = 9, long long max_den = 4) {
        Rational re = rational(max_num, max_den);
        Rational im = rational(max_num, max_den);
        return GaussianRational(re, im);
    }

    GaussianRational nonzero_gaussian(long long max_num = 9, long long max_den = 4) {
        for (;;) {
            GaussianRational z = gaussian(max_num, max_den);
            if (!z.is_zero()) return z;
        }
    }

    std::vector<GaussianRational> gaussians(int n, long long max_num = 9, long long max_den = 4) {
        std::vector<GaussianRational> v;
        v.reserve(n);
        for (int k = 0; k < n; ++k) v.push_back(gaussian(max_num, max_den));
        return v;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cliffordforge
