#pragma once

#include "frechet/rational.hpp"

#include <optional>
#include <vector>

namespace frechet {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

std::size_t rank(QMatrix m);

/// Unique solution of a square system A x = b, if A is invertible.
std::optional<QVector> solve_square(QMatrix a, QVector b);

/// A basis of { x : A x = 0 }, each vector of length = #columns.
std::vector<QVector> nullspace(QMatrix a);

/// Scales a nonzero rational vector to coprime integers (lcm of the
/// denominators, then divide by the gcd of the numerators).
std::vector<BigInt> scale_to_integers(const QVector& v);

}  // namespace frechet
