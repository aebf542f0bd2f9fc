#pragma once

#include <random>

#include "binlen/binform.hpp"

namespace binlen::testing {

inline Rational random_rational_int(std::mt19937& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Rational(dist(rng));
}

inline BinaryForm random_form(std::mt19937& rng, int degree, long lo, long hi) {
    while (true) {
        std::vector<Rational> raw(degree + 1);
        bool nonzero = false;
        for (auto& c : raw) {
            c = random_rational_int(rng, lo, hi);
            nonzero = nonzero || !c.is_zero();
        }
        if (nonzero) return BinaryForm(degree, std::move(raw));
    }
}

}  // namespace binlen::testing
