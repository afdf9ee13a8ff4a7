#pragma once

// Shared deterministic generators for the property tests.

#include "frechet/field.hpp"

#include <random>

namespace test_support {

using frechet::FieldElement;
using frechet::FieldPtr;
using frechet::Rational;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_bound = 9, int den_bound = 6) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

// Random element with mostly-nonzero coordinates over the whole basis.
inline FieldElement random_element(Rng& rng, const FieldPtr& field) {
    std::vector<std::pair<std::uint64_t, Rational>> coords;
    std::uniform_int_distribution<int> keep(0, 3);
    for (auto n : field->basis()) {
        if (keep(rng) == 0) continue;  // drop ~1/4 of the coordinates
        coords.emplace_back(n, random_rational(rng));
    }
    return field->from_coords(std::move(coords));
}

inline FieldElement random_nonzero(Rng& rng, const FieldPtr& field) {
    for (;;) {
        auto x = random_element(rng, field);
        if (!x.is_zero()) return x;
    }
}

}  // namespace test_support
