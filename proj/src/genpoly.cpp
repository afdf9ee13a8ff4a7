#include "frechet/genpoly.hpp"

#include <algorithm>

namespace frechet {

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Number of distinct permutations of a sorted tuple.
Rational permutation_count(const SymmetricTensor::Key& key) {
    BigInt denom = 1;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= key.size(); ++i) {
        if (i < key.size() && key[i] == key[i - 1]) {
            ++run;
        } else {
            denom *= factorial(static_cast<int>(run));
            run = 1;
        }
    }
    return Rational(factorial(static_cast<int>(key.size())), denom);
}

}  // namespace

AdditiveMap::AdditiveMap(FieldPtr field, std::map<std::uint64_t, FieldElement> images)
    : field_(std::move(field)), images_(std::move(images)) {
    for (auto n : field_->basis()) {
        if (!images_.count(n)) {
            throw Error("additive map: missing image for basis index " + std::to_string(n));
        }
    }
    for (const auto& [n, img] : images_) {
        if (!field_->has_basis_index(n)) {
            throw Error("additive map: " + std::to_string(n) + " is not a basis index of " +
                        field_->name());
        }
        if (!img.field()->same_as(*field_)) {
            throw Error("additive map: image of " + std::to_string(n) + " lives in " +
                        img.field()->name() + ", expected " + field_->name());
        }
    }
    // Discontinuous iff two image/basis-vector ratios differ.
    const FieldElement first_ratio = images_.at(1);  // sqrt(1) = 1
    for (const auto& [n, img] : images_) {
        const FieldElement ratio = img * field_->sqrt_of(n).inverse();
        if (ratio != first_ratio) {
            discontinuous_ = true;
            break;
        }
    }
}

FieldElement AdditiveMap::eval(const FieldElement& x) const {
    if (!x.field()->same_as(*field_)) {
        throw Error("additive map: argument lives in " + x.field()->name() + ", expected " +
                    field_->name());
    }
    FieldElement acc = field_->zero();
    for (const auto& [n, c] : x.coords()) {
        acc = acc + images_.at(n).scaled(c);
    }
    return acc;
}

SymmetricTensor::SymmetricTensor(FieldPtr field, int order, std::map<Key, FieldElement> coeffs)
    : field_(std::move(field)), order_(order) {
    if (order_ < 1) throw Error("symmetric form: order must be >= 1");
    for (auto& [key, value] : coeffs) {
        if (key.size() != static_cast<std::size_t>(order_)) {
            throw Error("symmetric form: key arity does not match order " +
                        std::to_string(order_));
        }
        Key sorted = key;
        std::sort(sorted.begin(), sorted.end());
        for (auto n : sorted) {
            if (!field_->has_basis_index(n)) {
                throw Error("symmetric form: " + std::to_string(n) + " is not a basis index of " +
                            field_->name());
            }
        }
        if (value.is_zero()) continue;
        auto [it, fresh] = coeffs_.emplace(std::move(sorted), value);
        if (!fresh) throw Error("symmetric form: duplicate key after symmetrization");
    }
}

FieldElement SymmetricTensor::eval(const std::vector<FieldElement>& args) const {
    if (args.size() != static_cast<std::size_t>(order_)) {
        throw Error("symmetric form: expected " + std::to_string(order_) + " arguments");
    }
    // Multilinear expansion: odometer over the coordinate support of
    // each argument.
    FieldElement acc = field_->zero();
    std::vector<std::size_t> pos(order_, 0);
    for (;;) {
        Rational coeff_product(1);
        Key key(order_);
        bool empty = false;
        for (int i = 0; i < order_; ++i) {
            const auto& coords = args[i].coords();
            if (coords.empty()) {
                empty = true;
                break;
            }
            key[i] = coords[pos[i]].first;
            coeff_product *= coords[pos[i]].second;
        }
        if (empty) break;
        std::sort(key.begin(), key.end());
        if (auto it = coeffs_.find(key); it != coeffs_.end()) {
            acc = acc + it->second.scaled(coeff_product);
        }
        int i = order_ - 1;
        while (i >= 0 && ++pos[i] == args[i].coords().size()) {
            pos[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return acc;
}

FieldElement SymmetricTensor::diagonal(const FieldElement& x) const {
    if (!x.field()->same_as(*field_)) {
        throw Error("symmetric form: argument lives in " + x.field()->name() + ", expected " +
                    field_->name());
    }
    FieldElement acc = field_->zero();
    for (const auto& [key, value] : coeffs_) {
        Rational prod = permutation_count(key);
        bool zero = false;
        for (auto n : key) {
            const Rational c = x.coord(n);
            if (c == 0) {
                zero = true;
                break;
            }
            prod *= c;
        }
        if (!zero) acc = acc + value.scaled(prod);
    }
    return acc;
}

GeneralizedPoly::GeneralizedPoly(FieldPtr field, FieldElement constant,
                                 std::vector<SymmetricTensor> forms)
    : field_(std::move(field)), constant_(std::move(constant)), forms_(std::move(forms)) {
    std::sort(forms_.begin(), forms_.end(),
              [](const SymmetricTensor& a, const SymmetricTensor& b) {
                  return a.order() < b.order();
              });
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (!forms_[i].field()->same_as(*field_)) {
            throw Error("generalized polynomial: form field mismatch");
        }
        if (i > 0 && forms_[i].order() == forms_[i - 1].order()) {
            throw Error("generalized polynomial: two forms of order " +
                        std::to_string(forms_[i].order()));
        }
    }
}

int GeneralizedPoly::degree_bound() const {
    return forms_.empty() ? 0 : forms_.back().order();
}

FieldElement GeneralizedPoly::eval(const FieldElement& x) const {
    FieldElement acc = constant_;
    for (const auto& form : forms_) acc = acc + form.diagonal(x);
    return acc;
}

FieldElement GeneralizedPoly::component(int k, const FieldElement& x) const {
    for (const auto& form : forms_) {
        if (form.order() == k) return form.diagonal(x);
    }
    return field_->zero();
}

GeneralizedPoly GeneralizedPoly::from_additive(const AdditiveMap& a) {
    return additive_power(a, 1);
}

GeneralizedPoly GeneralizedPoly::additive_power(const AdditiveMap& a, int k) {
    const FieldPtr& field = a.field();
    if (k < 0) throw Error("additive_power: negative exponent");
    if (k == 0) return GeneralizedPoly(field, field->one(), {});

    // Values on basis tuples are products of images; enumerate the
    // multisets of basis indices (combinations with repetition).
    std::map<SymmetricTensor::Key, FieldElement> coeffs;
    const auto& basis = field->basis();
    SymmetricTensor::Key key(k);
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        FieldElement value = field->one();
        for (int i = 0; i < k; ++i) {
            key[i] = basis[idx[i]];
            value = value * a.images().at(key[i]);
        }
        if (!value.is_zero()) coeffs.emplace(key, std::move(value));
        int i = k - 1;
        while (i >= 0 && idx[i] + 1 == basis.size()) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[i];  // keep indices nondecreasing
    }
    return GeneralizedPoly(field, field->zero(),
                           {SymmetricTensor(field, k, std::move(coeffs))});
}

GeneralizedPoly GeneralizedPoly::monomial(const FieldPtr& field, int k) {
    if (k < 0) throw Error("monomial: negative exponent");
    if (k == 0) return GeneralizedPoly(field, field->one(), {});

    std::map<SymmetricTensor::Key, FieldElement> coeffs;
    const auto& basis = field->basis();
    SymmetricTensor::Key key(k);
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        FieldElement value = field->one();
        for (int i = 0; i < k; ++i) {
            key[i] = basis[idx[i]];
            value = value * field->sqrt_of(key[i]);
        }
        coeffs.emplace(key, std::move(value));
        int i = k - 1;
        while (i >= 0 && idx[i] + 1 == basis.size()) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[i];
    }
    return GeneralizedPoly(field, field->zero(),
                           {SymmetricTensor(field, k, std::move(coeffs))});
}

}  // namespace frechet
