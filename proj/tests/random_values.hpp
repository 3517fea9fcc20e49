#pragma once

#include "kkw/exact_arith.hpp"

#include <random>

namespace kkw::testing {

inline BigRational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 7) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return {num(rng), den(rng)};
}

inline GaussianRational random_gaussian(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng)};
}

inline GaussianRational random_nonzero_gaussian(std::mt19937_64& rng) {
    for (;;) {
        GaussianRational z = random_gaussian(rng);
        if (!z.is_zero()) return z;
    }
}

}  // namespace kkw::testing
