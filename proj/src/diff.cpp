#include "frechet/diff.hpp"

namespace frechet {

TableFunction::TableFunction(FieldPtr field,
                             std::vector<std::pair<FieldElement, FieldElement>> entries)
    : field_(std::move(field)) {
    for (auto& [point, value] : entries) {
        auto [it, fresh] = entries_.emplace(std::move(point), std::move(value));
        if (!fresh) throw Error("table function: duplicate point " + it->first.to_string());
    }
}

FieldElement TableFunction::eval(const FieldElement& point) const {
    auto it = entries_.find(point);
    if (it == entries_.end()) throw TableMissError(point);
    return it->second;
}

void TableFunction::set(FieldElement point, FieldElement value) {
    entries_[std::move(point)] = std::move(value);
}

FunctionHandle::FunctionHandle(UniPoly p) : field_(p.field()), f_(std::move(p)) {}
FunctionHandle::FunctionHandle(GeneralizedPoly p) : field_(p.field()), f_(std::move(p)) {}
FunctionHandle::FunctionHandle(TableFunction t) : field_(t.field()), f_(std::move(t)) {}

FieldElement FunctionHandle::eval(const FieldElement& x) const {
    return std::visit([&](const auto& f) { return f.eval(x); }, f_);
}

FieldElement delta_multi_eval(const FunctionHandle& f, const std::vector<FieldElement>& steps,
                              const FieldElement& x) {
    if (steps.empty()) return f.eval(x);
    std::vector<FieldElement> rest(steps.begin() + 1, steps.end());
    return delta_multi_eval(f, rest, x + steps.front()) - delta_multi_eval(f, rest, x);
}

FieldElement signsum_eval(const FunctionHandle& f, const std::vector<FieldElement>& steps,
                          const FieldElement& x) {
    const std::size_t s = steps.size();
    FieldElement acc = f.field()->zero();
    for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
        FieldElement point = x;
        int ones = 0;
        for (std::size_t r = 0; r < s; ++r) {
            if (mask >> r & 1) {
                point = point + steps[r];
                ++ones;
            }
        }
        const FieldElement term = f.eval(point);
        acc = (static_cast<std::size_t>(ones) + s) % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

FieldElement delta_power_eval(const FunctionHandle& f, const FieldElement& h, int s,
                              const FieldElement& x) {
    if (s < 0) throw Error("delta_power_eval: order must be >= 0");
    FieldElement acc = f.field()->zero();
    for (int k = 0; k <= s; ++k) {
        Rational c(binomial(s, k));
        if ((s - k) % 2) c = -c;
        acc = acc + f.eval(x + h.scaled(Rational(k))).scaled(c);
    }
    return acc;
}

FieldElement frechet_eval(const FunctionHandle& f, int m, const std::vector<FieldElement>& xs) {
    if (m < 0) throw Error("frechet_eval: m must be >= 0");
    if (xs.size() != static_cast<std::size_t>(m) + 1) {
        throw Error("frechet_eval: expected m+1 = " + std::to_string(m + 1) + " arguments");
    }
    // Alternating sum over all subsets A of {x_1,...,x_{m+1}} with sign
    // (-1)^(m+1-#A); the empty subset contributes (-1)^(m+1) f(0).
    FieldElement acc = f.field()->zero();
    const std::size_t n = xs.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        FieldElement point = f.field()->zero();
        int size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                point = point + xs[i];
                ++size;
            }
        }
        const FieldElement term = f.eval(point);
        acc = (n - static_cast<std::size_t>(size)) % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

std::vector<DjokovicTerm> djokovic_expand(const std::vector<FieldElement>& steps) {
    const std::size_t s = steps.size();
    if (s == 0) throw Error("djokovic_expand: need at least one step");
    const FieldPtr& field = steps[0].field();
    std::vector<DjokovicTerm> terms;
    terms.reserve(std::size_t(1) << s);
    for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
        DjokovicTerm term;
        term.order = static_cast<int>(s);
        term.step = field->zero();
        term.shift = field->zero();
        int ones = 0;
        for (std::size_t r = 0; r < s; ++r) {
            if (mask >> r & 1) {
                term.step = term.step - steps[r].scaled(Rational(1, static_cast<long long>(r + 1)));
                term.shift = term.shift + steps[r];
                ++ones;
            }
        }
        term.sign = ones % 2 == 0 ? 1 : -1;
        terms.push_back(std::move(term));
    }
    return terms;
}

DjokovicReport djokovic_verify(const FunctionHandle& f, const std::vector<FieldElement>& steps,
                               const FieldElement& x) {
    DjokovicReport report;
    report.lhs = delta_multi_eval(f, steps, x);
    report.rhs = f.field()->zero();
    for (const auto& term : djokovic_expand(steps)) {
        const FieldElement value = delta_power_eval(f, term.step, term.order, x + term.shift);
        report.rhs = term.sign > 0 ? report.rhs + value : report.rhs - value;
    }
    report.holds = report.lhs == report.rhs;
    return report;
}

ElementSampler::ElementSampler(FieldPtr field, std::uint64_t seed)
    : field_(std::move(field)), state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}

std::uint64_t ElementSampler::next_raw() {
    // splitmix64; deterministic across platforms.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

FieldElement ElementSampler::next() {
    std::vector<std::pair<std::uint64_t, Rational>> coords;
    for (auto n : field_->basis()) {
        const std::uint64_t raw = next_raw();
        if (raw % 4 == 0) continue;  // drop ~1/4 of the coordinates
        const long long num = static_cast<long long>((raw >> 8) % 13) - 6;
        const long long den = static_cast<long long>((raw >> 16) % 4) + 1;
        coords.emplace_back(n, Rational(num, den));
    }
    return field_->from_coords(std::move(coords));
}

FieldElement ElementSampler::next_nonzero() {
    for (;;) {
        auto x = next();
        if (!x.is_zero()) return x;
    }
}

FrechetCheck frechet_check_at(const FunctionHandle& f, int m,
                              const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    for (const auto& [x, h] : points) {
        const FieldElement value = delta_power_eval(f, h, m + 1, x);
        if (!value.is_zero()) {
            return {false, FrechetWitness{x, h, value}};
        }
    }
    return {true, std::nullopt};
}

FrechetCheck frechet_check_genpoly(const GeneralizedPoly& f, int m, int trials,
                                   std::uint64_t seed) {
    ElementSampler sampler(f.field(), seed);
    std::vector<std::pair<FieldElement, FieldElement>> points;
    points.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        auto x = sampler.next();
        auto h = sampler.next_nonzero();
        points.emplace_back(std::move(x), std::move(h));
    }
    return frechet_check_at(FunctionHandle(f), m, points);
}

}  // namespace frechet
