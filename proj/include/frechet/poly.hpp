#pragma once

#include "frechet/field.hpp"

#include <vector>

namespace frechet {

/// Univariate polynomial with exact field coefficients. Trailing zero
/// coefficients are stripped on construction; the zero polynomial has
/// an empty coefficient list and degree() == -1.
class UniPoly {
public:
    explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
    UniPoly(FieldPtr field, std::vector<FieldElement> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k (zero beyond the degree).
    FieldElement coeff(std::size_t k) const;
    FieldElement leading() const;

    FieldElement eval(const FieldElement& x) const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly scaled(const FieldElement& c) const;
    bool operator==(const UniPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// Bivariate polynomial of degree <= m in each variable separately
/// (the space Pi_m^2): a (m+1)x(m+1) exact coefficient matrix with
/// entry (t, s) the coefficient of x^t y^s.
class BiPoly {
public:
    BiPoly(FieldPtr field, int bound);
    BiPoly(FieldPtr field, int bound, std::vector<std::vector<FieldElement>> coeffs);

    const FieldPtr& field() const { return field_; }
    int bound() const { return bound_; }
    /// Coefficient of x^t y^s; zero outside the stored matrix.
    FieldElement coeff(int t, int s) const;
    void set_coeff(int t, int s, FieldElement c);
    void add_to_coeff(int t, int s, const FieldElement& c);

    bool is_zero() const;
    FieldElement eval(const FieldElement& x, const FieldElement& y) const;

    BiPoly operator-(const BiPoly& rhs) const;
    /// Equality as polynomials (bounds may differ).
    bool operator==(const BiPoly& rhs) const;
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    FieldPtr field_;
    int bound_ = 0;
    std::vector<std::vector<FieldElement>> coeffs_;
};

/// P(x,y) written as sum A_i(x+y) x^i for i = 0..2m, each A_i of
/// degree <= m. leading_index is the largest i with A_i != 0 (0 for
/// the zero polynomial); N >= 1 certifies that P is not a polynomial
/// in x+y alone.
struct ShearForm {
    std::vector<UniPoly> components;
    int leading_index = 0;
};

FieldElement pow_element(const FieldElement& base, int exp);

/// The unique P in Pi_m^2 with P(i*h1, j*h2) = samples[i][j] for
/// 0 <= i,j <= m, built as a tensor product of univariate Lagrange
/// bases on the nodes {0, h1, ..., m*h1} x {0, h2, ..., m*h2}.
BiPoly lagrange_tensor(const std::vector<std::vector<FieldElement>>& samples,
                       const FieldElement& h1, const FieldElement& h2, int m);

ShearForm shear_decompose(const BiPoly& p);
BiPoly shear_compose(const ShearForm& s);

/// max{1, sum |a_k| / |a_N|}: every complex root of p has modulus at
/// most this bound. Requires degree >= 1.
FieldElement root_bound(const UniPoly& p);

/// Certified lower bound on |q(x)| valid for every q whose coefficients
/// differ from p's by at most delta < |a_N|/2, namely
/// (|a_N|/2) * dist(x, B_M)^N with M the uniform root bound; zero when
/// x lies inside B_M.
FieldElement perturbed_lower_bound(const UniPoly& p, const FieldElement& delta,
                                   const FieldElement& x);

/// Given symmetric Q with Q(x,0) = 0, returns the R with no constant or
/// linear term such that Q(x,y) = R(x+y) - R(x) - R(y), solving for one
/// coefficient per homogeneous component and verifying the rest; throws
/// with the violated coefficient identity if Q is not a coboundary.
UniPoly recover_from_cocycle(const BiPoly& q);

}  // namespace frechet
