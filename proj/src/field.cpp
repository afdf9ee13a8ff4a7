#include "frechet/field.hpp"

#include "frechet/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace frechet {

namespace {

// Smallest prime p with p^2 | d, or 0 if d is square-free.
std::uint64_t square_factor(std::uint64_t d) {
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return p;
    }
    return 0;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error("radicand product overflows 64 bits");
    }
    return r;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> reduce_sqrt_product(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    return {checked_mul(a / g, b / g), g};
}

std::shared_ptr<const RadicalField> RadicalField::create(std::vector<std::uint64_t> radicands) {
    std::sort(radicands.begin(), radicands.end());
    for (std::size_t i = 0; i < radicands.size(); ++i) {
        const std::uint64_t d = radicands[i];
        if (d < 2) throw Error("radicand " + std::to_string(d) + " must be an integer >= 2");
        if (const std::uint64_t p = square_factor(d)) {
            throw Error("radicand " + std::to_string(d) + " is not square-free (" +
                        std::to_string(p * p) + "*" + std::to_string(d / (p * p)) + ")");
        }
        if (i > 0 && radicands[i - 1] == d) {
            throw Error("radicand " + std::to_string(d) + " listed twice");
        }
    }
    if (radicands.size() > 20) throw Error("too many radicands");

    // Subset products, reduced to square-free form. Any collision means
    // some nonempty subset multiplies to a square, i.e. the radicals are
    // multiplicatively dependent and the extension degree drops.
    const std::size_t k = radicands.size();
    std::vector<std::uint64_t> value_of_mask(std::size_t(1) << k, 1);
    std::map<std::uint64_t, std::size_t> seen{{1, 0}};
    for (std::size_t mask = 1; mask < value_of_mask.size(); ++mask) {
        const std::size_t low = std::size_t(mask) & (~mask + 1);
        const std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(mask));
        value_of_mask[mask] = reduce_sqrt_product(value_of_mask[mask ^ low], radicands[bit]).first;
        auto [it, fresh] = seen.emplace(value_of_mask[mask], mask);
        if (!fresh) {
            std::ostringstream msg;
            msg << "radicands are multiplicatively dependent: sqrt(";
            const std::size_t culprit = mask ^ it->second;  // subset with square product
            bool first = true;
            for (std::size_t b = 0; b < k; ++b) {
                if (!(culprit >> b & 1)) continue;
                msg << (first ? "" : ")*sqrt(") << radicands[b];
                first = false;
            }
            msg << ") is rational";
            throw Error(msg.str());
        }
    }

    auto field = std::shared_ptr<RadicalField>(new RadicalField());
    field->radicands_ = std::move(radicands);
    field->basis_ = std::move(value_of_mask);
    std::sort(field->basis_.begin(), field->basis_.end());
    return field;
}

bool RadicalField::has_basis_index(std::uint64_t n) const {
    return std::binary_search(basis_.begin(), basis_.end(), n);
}

std::string RadicalField::name() const {
    std::ostringstream out;
    out << "Q(";
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
        out << (i ? "," : "") << "sqrt(" << radicands_[i] << ")";
    }
    out << ")";
    return out.str();
}

FieldElement RadicalField::zero() const {
    return FieldElement(shared_from_this(), {});
}

FieldElement RadicalField::one() const {
    return rational(Rational(1));
}

FieldElement RadicalField::rational(Rational r) const {
    if (r == 0) return zero();
    return FieldElement(shared_from_this(), {{1, std::move(r)}});
}

FieldElement RadicalField::integer(long long n) const {
    return rational(Rational(n));
}

FieldElement RadicalField::sqrt_of(std::uint64_t n) const {
    if (!has_basis_index(n)) {
        throw Error("sqrt(" + std::to_string(n) + ") is not a basis vector of " + name());
    }
    return FieldElement(shared_from_this(), {{n, Rational(1)}});
}

FieldElement RadicalField::from_coords(std::vector<std::pair<std::uint64_t, Rational>> coords) const {
    std::sort(coords.begin(), coords.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint64_t, Rational>> merged;
    for (auto& [n, c] : coords) {
        if (!has_basis_index(n)) {
            throw Error("basis index " + std::to_string(n) + " does not belong to " + name());
        }
        if (!merged.empty() && merged.back().first == n) {
            merged.back().second += c;
            if (merged.back().second == 0) merged.pop_back();
        } else if (c != 0) {
            merged.emplace_back(n, std::move(c));
        }
    }
    return FieldElement(shared_from_this(), std::move(merged));
}

void FieldElement::require_same_field(const FieldElement& other, const char* op) const {
    if (!field_ || !other.field_) throw Error(std::string(op) + ": uninitialized element");
    if (!field_->same_as(*other.field_)) {
        throw Error(std::string(op) + ": field mismatch between " + field_->name() + " and " +
                    other.field_->name());
    }
}

bool FieldElement::is_rational() const {
    return coords_.empty() || (coords_.size() == 1 && coords_[0].first == 1);
}

Rational FieldElement::coord(std::uint64_t n) const {
    for (const auto& [b, c] : coords_) {
        if (b == n) return c;
        if (b > n) break;
    }
    return Rational(0);
}

Rational FieldElement::as_rational() const {
    if (!is_rational()) throw Error("element " + to_string() + " is not rational");
    return coords_.empty() ? Rational(0) : coords_[0].second;
}

FieldElement FieldElement::operator-() const {
    auto coords = coords_;
    for (auto& [n, c] : coords) c = -c;
    return FieldElement(field_, std::move(coords));
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs, "add");
    std::vector<std::pair<std::uint64_t, Rational>> out;
    out.reserve(coords_.size() + rhs.coords_.size());
    auto a = coords_.begin();
    auto b = rhs.coords_.begin();
    while (a != coords_.end() || b != rhs.coords_.end()) {
        if (b == rhs.coords_.end() || (a != coords_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == coords_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    return *this + (-rhs);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs, "mul");
    std::map<std::uint64_t, Rational> acc;
    for (const auto& [na, ca] : coords_) {
        for (const auto& [nb, cb] : rhs.coords_) {
            const auto [n, f] = reduce_sqrt_product(na, nb);
            acc[n] += ca * cb * f;
        }
    }
    std::vector<std::pair<std::uint64_t, Rational>> out;
    for (auto& [n, c] : acc) {
        if (c != 0) out.emplace_back(n, std::move(c));
    }
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::scaled(const Rational& r) const {
    if (r == 0) return FieldElement(field_, {});
    auto coords = coords_;
    for (auto& [n, c] : coords) c *= r;
    return FieldElement(field_, std::move(coords));
}

FieldElement FieldElement::inverse() const {
    if (!field_) throw Error("inverse: uninitialized element");
    if (is_zero()) throw Error("division by zero in " + field_->name());
    const auto& basis = field_->basis();
    const std::size_t dim = basis.size();

    // Column j = coordinates of this * sqrt(basis[j]).
    QMatrix mul(dim, QVector(dim, Rational(0)));
    for (std::size_t j = 0; j < dim; ++j) {
        for (const auto& [n, c] : coords_) {
            const auto [prod, f] = reduce_sqrt_product(n, basis[j]);
            const auto row = std::lower_bound(basis.begin(), basis.end(), prod) - basis.begin();
            mul[static_cast<std::size_t>(row)][j] += c * f;
        }
    }
    QVector unit(dim, Rational(0));
    unit[0] = 1;  // basis[0] == 1
    auto sol = solve_square(std::move(mul), std::move(unit));
    if (!sol) throw Error("inverse: multiplication matrix is singular");  // cannot happen in a field
    std::vector<std::pair<std::uint64_t, Rational>> coords;
    for (std::size_t j = 0; j < dim; ++j) {
        if ((*sol)[j] != 0) coords.emplace_back(basis[j], std::move((*sol)[j]));
    }
    return FieldElement(field_, std::move(coords));
}

std::pair<Rational, Rational> FieldElement::approx_interval(unsigned bits) const {
    Rational lo(0), hi(0);
    const BigInt scale = BigInt(1) << bits;
    for (const auto& [n, c] : coords_) {
        if (n == 1) {
            lo += c;
            hi += c;
            continue;
        }
        const BigInt shifted = BigInt(n) << (2 * bits);
        const BigInt root = sqrt(shifted);
        const Rational root_lo(root, scale);
        const Rational root_hi(root + 1, scale);
        if (c > 0) {
            lo += c * root_lo;
            hi += c * root_hi;
        } else {
            lo += c * root_hi;
            hi += c * root_lo;
        }
    }
    return {std::move(lo), std::move(hi)};
}

int FieldElement::sign() const {
    if (coords_.empty()) return 0;
    if (is_rational()) return sign_of(coords_[0].second);
    for (unsigned bits = 16; bits <= (1u << 20); bits *= 2) {
        const auto [lo, hi] = approx_interval(bits);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw Error("sign: interval refinement exhausted (element should be zero?)");
}

FieldElement FieldElement::abs() const {
    return sign() < 0 ? -*this : *this;
}

double FieldElement::approx() const {
    double v = 0;
    for (const auto& [n, c] : coords_) {
        v += c.convert_to<double>() * std::sqrt(static_cast<double>(n));
    }
    return v;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    return coords_ == rhs.coords_;
}

bool FieldElement::operator<(const FieldElement& rhs) const {
    return coords_ < rhs.coords_;
}

std::string FieldElement::to_string() const {
    if (coords_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, c] : coords_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        const Rational a = (!first && c < 0) ? Rational(-c) : c;
        first = false;
        std::string coeff = numerator(a).str();
        if (denominator(a) != 1) coeff += "/" + denominator(a).str();
        if (n == 1) {
            out << coeff;
        } else if (a == 1) {
            out << "sqrt(" << n << ")";
        } else if (a == -1) {
            out << "-sqrt(" << n << ")";
        } else {
            out << coeff << "*sqrt(" << n << ")";
        }
    }
    return out.str();
}

}  // namespace frechet
