#pragma once

#include "frechet/field.hpp"
#include "frechet/poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace frechet {

/// The unique Q-linear map determined by an arbitrary assignment on the
/// field's Q-basis: value(x) = sum coords(x)_b * image[b]. Additive by
/// construction, and discontinuous (as a map on the reals) exactly when
/// the image/basis-vector ratios are not all equal.
class AdditiveMap {
public:
    /// Requires one image per basis index; throws naming a missing one.
    AdditiveMap(FieldPtr field, std::map<std::uint64_t, FieldElement> images);

    const FieldPtr& field() const { return field_; }
    const std::map<std::uint64_t, FieldElement>& images() const { return images_; }

    FieldElement eval(const FieldElement& x) const;

    /// True iff some two ratios image[b]/sqrt(b) differ (exactly).
    bool discontinuous() const { return discontinuous_; }

private:
    FieldPtr field_;
    std::map<std::uint64_t, FieldElement> images_;
    bool discontinuous_ = false;
};

/// A symmetric k-additive form, stored by its values on sorted k-tuples
/// of basis indices; evaluation is the multilinear expansion over
/// rational coordinates.
class SymmetricTensor {
public:
    using Key = std::vector<std::uint64_t>;  // sorted basis indices, length k

    SymmetricTensor(FieldPtr field, int order, std::map<Key, FieldElement> coeffs);

    const FieldPtr& field() const { return field_; }
    int order() const { return order_; }
    const std::map<Key, FieldElement>& coeffs() const { return coeffs_; }

    /// The full multilinear value A^k(x_1, ..., x_k).
    FieldElement eval(const std::vector<FieldElement>& args) const;
    /// The diagonal A_k(x) = A^k(x, ..., x), via multinomial counting.
    FieldElement diagonal(const FieldElement& x) const;

private:
    FieldPtr field_;
    int order_ = 1;
    std::map<Key, FieldElement> coeffs_;
};

/// f(x) = A_0 + A_1(x) + ... + A_m(x) with A_k the diagonal of a
/// symmetric k-additive form; the exact model of a (possibly nowhere
/// continuous) solution of the higher-order difference equation.
class GeneralizedPoly {
public:
    GeneralizedPoly(FieldPtr field, FieldElement constant, std::vector<SymmetricTensor> forms);

    const FieldPtr& field() const { return field_; }
    const FieldElement& constant() const { return constant_; }
    const std::vector<SymmetricTensor>& forms() const { return forms_; }
    /// Largest order present (0 for a constant).
    int degree_bound() const;

    FieldElement eval(const FieldElement& x) const;
    /// The single component A_k(x) (zero if no form of that order).
    FieldElement component(int k, const FieldElement& x) const;

    /// a(x) as a generalized polynomial of degree 1.
    static GeneralizedPoly from_additive(const AdditiveMap& a);
    /// a(x)^k as the diagonal of the rank-one symmetric form
    /// (x_1,...,x_k) -> a(x_1)...a(x_k).
    static GeneralizedPoly additive_power(const AdditiveMap& a, int k);
    /// x^k itself, encoded through the multiplication form
    /// (x_1,...,x_k) -> x_1 * ... * x_k.
    static GeneralizedPoly monomial(const FieldPtr& field, int k);

private:
    FieldPtr field_;
    FieldElement constant_;
    std::vector<SymmetricTensor> forms_;  // ascending distinct orders
};

}  // namespace frechet
