#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frechet {

// Exact scalars. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const Rational& r) {
    return r.sign();
}

inline Rational abs_of(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

inline Rational pow_rational(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw Error("pow_rational: zero base with negative exponent");
        return 1 / pow_rational(base, -exp);
    }
    Rational result = 1;
    Rational b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// Parses "p/q" or "p". The denominator, if present, must be nonzero;
// the result is normalized (lowest terms, positive denominator).
Rational parse_rational(const std::string& text);

// Canonical form "p/q" with q > 0, used by all serialized output.
std::string to_string(const Rational& r);

}  // namespace frechet
