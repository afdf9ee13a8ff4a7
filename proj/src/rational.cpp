#include "frechet/rational.hpp"

namespace frechet {

namespace {

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw Error("parse_rational: empty integer");
    try {
        return BigInt(text);
    } catch (const std::runtime_error&) {
        throw Error("parse_rational: cannot parse \"" + text + "\"");
    }
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_bigint(text));
    }
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw Error("parse_rational: zero denominator in \"" + text + "\"");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace frechet
