#pragma once

#include "frechet/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace frechet {

class FieldElement;

/// The multiquadratic field Q(sqrt(d1),...,sqrt(dk)) for square-free
/// radicands di >= 2. Its Q-basis is the set of square-free subset
/// products, each basis vector being sqrt(n) for a square-free n >= 1;
/// the basis is indexed by n itself (n = 1 is the rational unit).
class RadicalField : public std::enable_shared_from_this<RadicalField> {
public:
    /// Builds the field, verifying that every radicand is square-free,
    /// >= 2, distinct, and that the 2^k subset products stay distinct
    /// (otherwise the extension would collapse and the basis would not
    /// be Q-linearly independent). Throws Error with the offending
    /// factor or subset named.
    static std::shared_ptr<const RadicalField> create(std::vector<std::uint64_t> radicands);

    const std::vector<std::uint64_t>& radicands() const { return radicands_; }
    const std::vector<std::uint64_t>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }
    bool has_basis_index(std::uint64_t n) const;

    bool same_as(const RadicalField& other) const { return radicands_ == other.radicands_; }
    std::string name() const;  // e.g. "Q(sqrt(2),sqrt(3))"

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement rational(Rational r) const;
    FieldElement integer(long long n) const;
    /// The basis vector sqrt(n); n must be a basis index of this field.
    FieldElement sqrt_of(std::uint64_t n) const;
    FieldElement from_coords(std::vector<std::pair<std::uint64_t, Rational>> coords) const;

private:
    RadicalField() = default;
    std::vector<std::uint64_t> radicands_;
    std::vector<std::uint64_t> basis_;  // sorted, basis_[0] == 1
};

using FieldPtr = std::shared_ptr<const RadicalField>;

/// Reduces sqrt(a)*sqrt(b) for square-free a, b to f*sqrt(c) with c
/// square-free; returns {c, f}. (c = (a/g)(b/g), f = g, g = gcd(a,b).)
std::pair<std::uint64_t, std::uint64_t> reduce_sqrt_product(std::uint64_t a, std::uint64_t b);

/// An exact element of a RadicalField, stored as sparse rational
/// coordinates over the square-free basis. Immutable value type;
/// all arithmetic is exact.
class FieldElement {
public:
    FieldElement() = default;  // detached zero; only assignable

    const FieldPtr& field() const { return field_; }
    /// Sparse coordinates sorted by basis index; zero coords absent.
    const std::vector<std::pair<std::uint64_t, Rational>>& coords() const { return coords_; }

    bool is_zero() const { return coords_.empty(); }
    bool is_rational() const;
    /// The coordinate on basis index n (0 if absent).
    Rational coord(std::uint64_t n) const;
    /// For rational elements, the value itself.
    Rational as_rational() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement scaled(const Rational& r) const;

    /// Multiplicative inverse, computed by solving the 2^k x 2^k
    /// rational system for multiplication-by-this. Throws on zero.
    FieldElement inverse() const;

    /// Exact sign in {-1, 0, +1}. Zero is decided from the coordinates;
    /// otherwise nested interval refinement of the radicals with
    /// doubling precision, which terminates because a nonzero value is
    /// bounded away from zero.
    int sign() const;
    FieldElement abs() const;

    /// Certified enclosure [lo, hi] of the real value at the given
    /// precision (2^-bits per radical). Successive precisions nest.
    std::pair<Rational, Rational> approx_interval(unsigned bits) const;
    /// Fast uncertified approximation for plots and prefilters.
    double approx() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    /// Structural order (field, then coords); used for table keys.
    bool operator<(const FieldElement& rhs) const;

    std::string to_string() const;  // e.g. "3 + 2*sqrt(2)"

private:
    friend class RadicalField;
    FieldElement(FieldPtr field, std::vector<std::pair<std::uint64_t, Rational>> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {}

    void require_same_field(const FieldElement& other, const char* op) const;

    FieldPtr field_;
    std::vector<std::pair<std::uint64_t, Rational>> coords_;
};

inline FieldElement operator*(const Rational& r, const FieldElement& x) { return x.scaled(r); }

/// sign(a - b) without materializing the difference's name: exact.
inline int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

}  // namespace frechet
