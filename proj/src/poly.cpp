#include "frechet/poly.hpp"

#include <algorithm>
#include <sstream>

namespace frechet {

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UniPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : field_->zero();
}

FieldElement UniPoly::leading() const {
    if (is_zero()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<FieldElement> out(std::max(coeffs_.size(), rhs.coeffs_.size()), field_->zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const {
    std::vector<FieldElement> out(std::max(coeffs_.size(), rhs.coeffs_.size()), field_->zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly(field_);
    std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] = out[i + j] + coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out = coeffs_;
    for (auto& a : out) a = a * c;
    return UniPoly(field_, std::move(out));
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (out.tellp() > 0) out << " + ";
        out << "(" << coeffs_[i].to_string() << ")";
        if (i == 1) out << "*x";
        if (i > 1) out << "*x^" << i;
    }
    return out.str();
}

BiPoly::BiPoly(FieldPtr field, int bound) : field_(std::move(field)), bound_(bound) {
    if (bound < 0) throw Error("BiPoly: negative degree bound");
    coeffs_.assign(bound_ + 1, std::vector<FieldElement>(bound_ + 1, field_->zero()));
}

BiPoly::BiPoly(FieldPtr field, int bound, std::vector<std::vector<FieldElement>> coeffs)
    : field_(std::move(field)), bound_(bound), coeffs_(std::move(coeffs)) {
    if (bound_ < 0 || coeffs_.size() != static_cast<std::size_t>(bound_ + 1)) {
        throw Error("BiPoly: coefficient matrix must be (m+1) x (m+1)");
    }
    for (const auto& row : coeffs_) {
        if (row.size() != static_cast<std::size_t>(bound_ + 1)) {
            throw Error("BiPoly: coefficient matrix must be (m+1) x (m+1)");
        }
    }
}

FieldElement BiPoly::coeff(int t, int s) const {
    if (t < 0 || s < 0) throw Error("BiPoly: negative exponent");
    if (t > bound_ || s > bound_) return field_->zero();
    return coeffs_[t][s];
}

void BiPoly::set_coeff(int t, int s, FieldElement c) {
    if (t < 0 || s < 0 || t > bound_ || s > bound_) throw Error("BiPoly: exponent out of range");
    coeffs_[t][s] = std::move(c);
}

void BiPoly::add_to_coeff(int t, int s, const FieldElement& c) {
    if (t < 0 || s < 0 || t > bound_ || s > bound_) throw Error("BiPoly: exponent out of range");
    coeffs_[t][s] = coeffs_[t][s] + c;
}

bool BiPoly::is_zero() const {
    for (const auto& row : coeffs_) {
        for (const auto& c : row) {
            if (!c.is_zero()) return false;
        }
    }
    return true;
}

FieldElement BiPoly::eval(const FieldElement& x, const FieldElement& y) const {
    FieldElement acc = field_->zero();
    for (int t = bound_; t >= 0; --t) {
        FieldElement row = field_->zero();
        for (int s = bound_; s >= 0; --s) row = row * y + coeffs_[t][s];
        acc = acc * x + row;
    }
    return acc;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const {
    BiPoly out(field_, std::max(bound_, rhs.bound_));
    for (int t = 0; t <= out.bound_; ++t) {
        for (int s = 0; s <= out.bound_; ++s) out.coeffs_[t][s] = coeff(t, s) - rhs.coeff(t, s);
    }
    return out;
}

bool BiPoly::operator==(const BiPoly& rhs) const {
    const int b = std::max(bound_, rhs.bound_);
    for (int t = 0; t <= b; ++t) {
        for (int s = 0; s <= b; ++s) {
            if (coeff(t, s) != rhs.coeff(t, s)) return false;
        }
    }
    return true;
}

std::string BiPoly::to_string() const {
    std::ostringstream out;
    for (int t = 0; t <= bound_; ++t) {
        for (int s = 0; s <= bound_; ++s) {
            if (coeffs_[t][s].is_zero()) continue;
            if (out.tellp() > 0) out << " + ";
            out << "(" << coeffs_[t][s].to_string() << ")";
            if (t == 1) out << "*x";
            if (t > 1) out << "*x^" << t;
            if (s == 1) out << "*y";
            if (s > 1) out << "*y^" << s;
        }
    }
    return out.tellp() > 0 ? out.str() : "0";
}

FieldElement pow_element(const FieldElement& base, int exp) {
    if (exp < 0) throw Error("pow_element: negative exponent");
    FieldElement acc = base.field()->one();
    for (int i = 0; i < exp; ++i) acc = acc * base;
    return acc;
}

namespace {

// Lagrange basis for the nodes {0, h, 2h, ..., mh}.
std::vector<UniPoly> lagrange_basis(const FieldPtr& field, const FieldElement& h, int m) {
    std::vector<UniPoly> basis;
    basis.reserve(m + 1);
    for (int i = 0; i <= m; ++i) {
        UniPoly num(field, {field->one()});
        FieldElement den = field->one();
        const FieldElement xi = h.scaled(Rational(i));
        for (int j = 0; j <= m; ++j) {
            if (j == i) continue;
            const FieldElement xj = h.scaled(Rational(j));
            num = num * UniPoly(field, {-xj, field->one()});
            den = den * (xi - xj);
        }
        basis.push_back(num.scaled(den.inverse()));
    }
    return basis;
}

}  // namespace

BiPoly lagrange_tensor(const std::vector<std::vector<FieldElement>>& samples,
                       const FieldElement& h1, const FieldElement& h2, int m) {
    if (m < 0) throw Error("lagrange_tensor: m must be >= 0");
    if (h1.is_zero() || h2.is_zero()) throw Error("lagrange_tensor: zero step");
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    if (samples.size() != n) throw Error("lagrange_tensor: sample matrix must be (m+1) x (m+1)");
    for (const auto& row : samples) {
        if (row.size() != n) throw Error("lagrange_tensor: sample matrix must be (m+1) x (m+1)");
    }
    const FieldPtr& field = h1.field();
    const auto lx = lagrange_basis(field, h1, m);
    const auto ly = lagrange_basis(field, h2, m);

    BiPoly p(field, m);
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            const auto& sample = samples[i][j];
            if (sample.is_zero()) continue;
            for (int t = 0; t <= lx[i].degree(); ++t) {
                for (int s = 0; s <= ly[j].degree(); ++s) {
                    p.add_to_coeff(t, s, sample * lx[i].coeff(t) * ly[j].coeff(s));
                }
            }
        }
    }
    return p;
}

ShearForm shear_decompose(const BiPoly& p) {
    const FieldPtr& field = p.field();
    const int m = p.bound();

    // Substituting y = u - x turns x^t y^s into
    // sum_r C(s,r) (-1)^(s-r) u^r x^(t+s-r); collect per power of x.
    std::vector<std::vector<FieldElement>> comps(
        2 * m + 1, std::vector<FieldElement>(m + 1, field->zero()));
    for (int t = 0; t <= m; ++t) {
        for (int s = 0; s <= m; ++s) {
            const FieldElement a = p.coeff(t, s);
            if (a.is_zero()) continue;
            for (int r = 0; r <= s; ++r) {
                const int i = t + s - r;
                Rational c(binomial(s, r));
                if ((s - r) % 2) c = -c;
                comps[i][r] = comps[i][r] + a.scaled(c);
            }
        }
    }

    ShearForm out;
    out.components.reserve(comps.size());
    for (auto& coeffs : comps) out.components.emplace_back(field, std::move(coeffs));
    out.leading_index = 0;
    for (int i = static_cast<int>(out.components.size()) - 1; i >= 0; --i) {
        if (!out.components[i].is_zero()) {
            out.leading_index = i;
            break;
        }
    }
    return out;
}

BiPoly shear_compose(const ShearForm& s) {
    if (s.components.empty()) throw Error("shear_compose: no components");
    const FieldPtr& field = s.components[0].field();

    int xdeg = 0, ydeg = 0;
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const int d = s.components[i].degree();
        if (d < 0) continue;
        xdeg = std::max(xdeg, static_cast<int>(i) + d);
        ydeg = std::max(ydeg, d);
    }
    BiPoly out(field, std::max(xdeg, ydeg));
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const auto& a = s.components[i];
        for (int r = 0; r <= a.degree(); ++r) {
            if (a.coeff(r).is_zero()) continue;
            for (int j = 0; j <= r; ++j) {  // (x+y)^r = sum_j C(r,j) x^j y^(r-j)
                out.add_to_coeff(static_cast<int>(i) + j, r - j,
                                 a.coeff(r).scaled(Rational(binomial(r, j))));
            }
        }
    }
    return out;
}

FieldElement root_bound(const UniPoly& p) {
    if (p.degree() < 1) throw Error("root_bound: polynomial must have degree >= 1");
    const FieldPtr& field = p.field();
    const FieldElement lead_inv = p.leading().abs().inverse();
    FieldElement sum = field->zero();
    for (int k = 0; k < p.degree(); ++k) {
        sum = sum + p.coeff(k).abs() * lead_inv;
    }
    return (sum - field->one()).sign() >= 0 ? sum : field->one();
}

FieldElement perturbed_lower_bound(const UniPoly& p, const FieldElement& delta,
                                   const FieldElement& x) {
    const int n = p.degree();
    if (n < 1) throw Error("perturbed_lower_bound: polynomial must have degree >= 1");
    const FieldPtr& field = p.field();
    const FieldElement half_lead = p.leading().abs().scaled(Rational(1, 2));
    if (delta.sign() < 0) throw Error("perturbed_lower_bound: delta must be >= 0");
    if ((delta - half_lead).sign() >= 0) {
        throw Error("perturbed_lower_bound: delta must be < |a_N|/2");
    }

    // Uniform root bound over the whole perturbation band.
    const FieldElement lead_inv = p.leading().abs().inverse();
    FieldElement sum = field->zero();
    for (int k = 0; k < n; ++k) {
        sum = sum + (half_lead + p.coeff(k).abs()).scaled(Rational(2)) * lead_inv;
    }
    const FieldElement m = (sum - field->one()).sign() >= 0 ? sum : field->one();

    const FieldElement dist = x.abs() - m;
    if (dist.sign() <= 0) return field->zero();
    return half_lead * pow_element(dist, n);
}

UniPoly recover_from_cocycle(const BiPoly& q) {
    const FieldPtr& field = q.field();
    const int b = q.bound();
    for (int t = 0; t <= b; ++t) {
        for (int s = t + 1; s <= b; ++s) {
            if (q.coeff(t, s) != q.coeff(s, t)) {
                throw Error("recover_from_cocycle: Q is not symmetric at x^" + std::to_string(t) +
                            "y^" + std::to_string(s));
            }
        }
    }

    std::vector<FieldElement> r_coeffs(2 * b + 1, field->zero());
    for (int total = 0; total <= 2 * b; ++total) {
        // Candidate A_total from the first representable mixed coefficient.
        FieldElement a = field->zero();
        for (int t = std::max(1, total - b); t <= std::min(total - 1, b); ++t) {
            if (!q.coeff(t, total - t).is_zero()) {
                a = q.coeff(t, total - t).scaled(Rational(1, BigInt(binomial(total, t))));
                break;
            }
        }
        // Q_total must equal A_total * ((x+y)^total - x^total - y^total);
        // entries beyond the coefficient matrix are structurally zero.
        for (int t = 0; t <= total; ++t) {
            const int s = total - t;
            const FieldElement actual =
                (t <= b && s <= b) ? q.coeff(t, s) : field->zero();
            const FieldElement expected =
                (t == 0 || s == 0) ? field->zero() : a.scaled(Rational(binomial(total, t)));
            if (actual != expected) {
                throw Error("recover_from_cocycle: not a coboundary; coefficient of x^" +
                            std::to_string(t) + "y^" + std::to_string(s) + " is " +
                            actual.to_string() + ", expected " + expected.to_string());
            }
        }
        if (!a.is_zero() && total >= 2) r_coeffs[total] = a;
    }
    return UniPoly(field, std::move(r_coeffs));
}

}  // namespace frechet
