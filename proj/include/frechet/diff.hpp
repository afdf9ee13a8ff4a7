#pragma once

#include "frechet/field.hpp"
#include "frechet/genpoly.hpp"
#include "frechet/poly.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace frechet {

/// A lookup outside a TableFunction is a hard error, never a silent
/// zero: a default value would fake every identity check.
class TableMissError : public Error {
public:
    explicit TableMissError(const FieldElement& point)
        : Error("table function has no entry at " + point.to_string()), point_(point) {}
    const FieldElement& point() const { return point_; }

private:
    FieldElement point_;
};

/// A finite exact map from field points to field values.
class TableFunction {
public:
    explicit TableFunction(FieldPtr field) : field_(std::move(field)) {}
    TableFunction(FieldPtr field, std::vector<std::pair<FieldElement, FieldElement>> entries);

    const FieldPtr& field() const { return field_; }
    const std::map<FieldElement, FieldElement>& entries() const { return entries_; }

    bool contains(const FieldElement& point) const { return entries_.count(point) > 0; }
    FieldElement eval(const FieldElement& point) const;
    /// Inserts or overwrites one entry.
    void set(FieldElement point, FieldElement value);

private:
    FieldPtr field_;
    std::map<FieldElement, FieldElement> entries_;
};

/// Uniform evaluation handle over the three function models: ordinary
/// polynomials, generalized polynomials, and finite tables.
class FunctionHandle {
public:
    FunctionHandle(UniPoly p);           // NOLINT(google-explicit-constructor)
    FunctionHandle(GeneralizedPoly p);   // NOLINT(google-explicit-constructor)
    FunctionHandle(TableFunction t);     // NOLINT(google-explicit-constructor)

    const FieldPtr& field() const { return field_; }
    FieldElement eval(const FieldElement& x) const;

    bool is_table() const { return std::holds_alternative<TableFunction>(f_); }
    const UniPoly* as_unipoly() const { return std::get_if<UniPoly>(&f_); }
    const GeneralizedPoly* as_genpoly() const { return std::get_if<GeneralizedPoly>(&f_); }
    const TableFunction* as_table() const { return std::get_if<TableFunction>(&f_); }

private:
    FieldPtr field_;
    std::variant<UniPoly, GeneralizedPoly, TableFunction> f_;
};

/// Mixed difference with variable steps, by the recursive definition
/// D_{h1...hs} f = D_{h1}(D_{h2...hs} f).
FieldElement delta_multi_eval(const FunctionHandle& f, const std::vector<FieldElement>& steps,
                              const FieldElement& x);

/// The same operator through its closed sign-sum form: the alternating
/// sum of f over all subset sums of the steps.
FieldElement signsum_eval(const FunctionHandle& f, const std::vector<FieldElement>& steps,
                          const FieldElement& x);

/// Equal-step power form: sum_k C(s,k) (-1)^(s-k) f(x + k h).
FieldElement delta_power_eval(const FunctionHandle& f, const FieldElement& h, int s,
                              const FieldElement& x);

/// The order-(m+1) inclusion-exclusion operator over subset sums of
/// x_1..x_{m+1}; vanishes identically exactly on generalized
/// polynomials of degree <= m. Equals the mixed difference at 0.
FieldElement frechet_eval(const FunctionHandle& f, int m, const std::vector<FieldElement>& xs);

/// One term of the variable-to-fixed-step expansion: contributes
/// sign * D^order_step f(x + shift).
struct DjokovicTerm {
    int sign = 1;           // (-1)^(e_1+...+e_s)
    FieldElement step;      // -sum e_r h_r / r
    FieldElement shift;     // sum e_r h_r
    int order = 1;          // s
};

/// All 2^s terms of the expansion of D_{h1...hs} into equal-step powers.
std::vector<DjokovicTerm> djokovic_expand(const std::vector<FieldElement>& steps);

struct DjokovicReport {
    bool holds = true;
    FieldElement lhs;
    FieldElement rhs;
};

/// Evaluates both sides of the expansion identity exactly; holds for
/// every function.
DjokovicReport djokovic_verify(const FunctionHandle& f, const std::vector<FieldElement>& steps,
                               const FieldElement& x);

struct FrechetWitness {
    FieldElement x;
    FieldElement h;
    FieldElement value;  // the nonzero power difference
};

struct FrechetCheck {
    bool holds = true;
    std::optional<FrechetWitness> witness;
};

/// Checks D_h^{m+1} f(x) = 0 exactly on seeded random trials drawn from
/// the field; returns the first witness otherwise.
FrechetCheck frechet_check_genpoly(const GeneralizedPoly& f, int m, int trials,
                                   std::uint64_t seed);

/// Same check on an explicit list of (x, h) pairs, for any handle.
FrechetCheck frechet_check_at(const FunctionHandle& f, int m,
                              const std::vector<std::pair<FieldElement, FieldElement>>& points);

/// Deterministic sample stream of field elements with small rational
/// coordinates; shared by the randomized checks and the CLI.
class ElementSampler {
public:
    ElementSampler(FieldPtr field, std::uint64_t seed);
    FieldElement next();
    FieldElement next_nonzero();

private:
    FieldPtr field_;
    std::uint64_t state_;
    std::uint64_t next_raw();
};

}  // namespace frechet
