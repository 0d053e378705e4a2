#pragma once

#include <random>

#include "fermibasis/gaussian.hpp"

namespace fermibasis::exactmath {

/// Seeded source of exact specialization values. Draws +-p/q with
/// 2 <= p,q <= 9 and p != q, so |value| is never 0 or 1 (and in
/// particular 1 - y^{+-2} cannot vanish at a drawn y).
class RationalPool {
public:
    explicit RationalPool(std::uint64_t seed) : rng_(seed) {}

    GaussianRational next() {
        std::uniform_int_distribution<int> digit(2, 9);
        int p = digit(rng_);
        int q = digit(rng_);
        while (q == p) q = digit(rng_);
        int sign = std::uniform_int_distribution<int>(0, 1)(rng_) ? 1 : -1;
        return GaussianRational(sign * p, static_cast<unsigned long>(q));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace fermibasis::exactmath
