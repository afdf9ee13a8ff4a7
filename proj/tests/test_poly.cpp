#include "frechet/poly.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace frechet;

namespace {

UniPoly random_unipoly(test_support::Rng& rng, const FieldPtr& field, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    const int d = deg(rng);
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(test_support::random_element(rng, field));
    return UniPoly(field, std::move(coeffs));
}

BiPoly random_bipoly(test_support::Rng& rng, const FieldPtr& field, int max_bound) {
    std::uniform_int_distribution<int> bdist(0, max_bound);
    const int b = bdist(rng);
    BiPoly p(field, b);
    for (int t = 0; t <= b; ++t) {
        for (int s = 0; s <= b; ++s) p.set_coeff(t, s, test_support::random_element(rng, field));
    }
    return p;
}

// Independent oracle: the coboundary R(x+y) - R(x) - R(y) built
// coefficient by coefficient from the binomial theorem.
BiPoly coboundary(const UniPoly& r) {
    const FieldPtr& field = r.field();
    const int d = std::max(r.degree(), 0);
    BiPoly q(field, d);
    for (int i = 0; i <= r.degree(); ++i) {
        const FieldElement a = r.coeff(i);
        if (a.is_zero()) continue;
        for (int t = 0; t <= i; ++t) {
            q.add_to_coeff(t, i - t, a.scaled(Rational(binomial(i, t))));
        }
        q.add_to_coeff(i, 0, -a);
        q.add_to_coeff(0, i, -a);
    }
    return q;
}

}  // namespace

TEST_CASE("polynomial evaluation") {
    auto f = RadicalField::create({2});
    UniPoly sq(f, {f->zero(), f->zero(), f->one()});  // x^2
    CHECK(sq.eval(f->sqrt_of(2)) == f->integer(2));
    CHECK(UniPoly(f).eval(f->sqrt_of(2)) == f->zero());

    BiPoly sum_sq(f, 2);  // (x+y)^2
    sum_sq.set_coeff(2, 0, f->one());
    sum_sq.set_coeff(1, 1, f->integer(2));
    sum_sq.set_coeff(0, 2, f->one());
    CHECK(sum_sq.eval(f->one(), f->sqrt_of(2)) == f->from_coords({{1, 3}, {2, 2}}));
}

TEST_CASE("tensor Lagrange interpolation") {
    auto f = RadicalField::create({2});
    const auto h1 = f->one();
    const auto h2 = f->sqrt_of(2);

    SUBCASE("constant") {
        auto p = lagrange_tensor({{f->integer(7)}}, h1, h2, 0);
        CHECK(p.coeff(0, 0) == f->integer(7));
        CHECK(p.bound() == 0);
    }

    SUBCASE("f(x) = x^2 gives (x+y)^2") {
        std::vector<std::vector<FieldElement>> samples(3, std::vector<FieldElement>(3, f->zero()));
        for (int i = 0; i <= 2; ++i) {
            for (int j = 0; j <= 2; ++j) {
                auto x = f->integer(i) + h2.scaled(Rational(j));
                samples[i][j] = x * x;
            }
        }
        auto p = lagrange_tensor(samples, h1, h2, 2);
        BiPoly expected(f, 2);
        expected.set_coeff(2, 0, f->one());
        expected.set_coeff(1, 1, f->integer(2));
        expected.set_coeff(0, 2, f->one());
        CHECK(p == expected);
    }

    SUBCASE("y-independent table gives x^2") {
        std::vector<std::vector<FieldElement>> samples(3, std::vector<FieldElement>(3, f->zero()));
        for (int i = 0; i <= 2; ++i) {
            for (int j = 0; j <= 2; ++j) samples[i][j] = f->integer(i * i);
        }
        auto p = lagrange_tensor(samples, h1, h2, 2);
        BiPoly expected(f, 2);
        expected.set_coeff(2, 0, f->one());
        CHECK(p == expected);
    }

    SUBCASE("zero step and shape mismatch rejected") {
        CHECK_THROWS_AS(lagrange_tensor({{f->one()}}, f->zero(), h2, 0), Error);
        CHECK_THROWS_AS(lagrange_tensor({{f->one()}}, h1, h2, 1), Error);
    }
}

TEST_CASE("interpolation matches nodes and is unique") {
    auto f = RadicalField::create({2, 3});
    test_support::Rng rng(4242);
    const auto h1 = f->one() + f->sqrt_of(2);
    const auto h2 = f->sqrt_of(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> mdist(0, 4);
        const int m = mdist(rng);
        std::vector<std::vector<FieldElement>> samples(m + 1,
                                                       std::vector<FieldElement>(m + 1, f->zero()));
        for (auto& row : samples) {
            for (auto& v : row) v = test_support::random_element(rng, f);
        }
        auto p = lagrange_tensor(samples, h1, h2, m);
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= m; ++j) {
                CHECK(p.eval(h1.scaled(Rational(i)), h2.scaled(Rational(j))) == samples[i][j]);
            }
        }
        // Uniqueness: re-interpolating the polynomial's own grid values
        // returns it coefficient for coefficient.
        std::vector<std::vector<FieldElement>> regrid(m + 1,
                                                      std::vector<FieldElement>(m + 1, f->zero()));
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= m; ++j) {
                regrid[i][j] = p.eval(h1.scaled(Rational(i)), h2.scaled(Rational(j)));
            }
        }
        CHECK(lagrange_tensor(regrid, h1, h2, m) == p);
    }
}

TEST_CASE("shear decomposition") {
    auto f = RadicalField::create({2});

    SUBCASE("(x+y)^2 collapses to A_0") {
        BiPoly p(f, 2);
        p.set_coeff(2, 0, f->one());
        p.set_coeff(1, 1, f->integer(2));
        p.set_coeff(0, 2, f->one());
        auto s = shear_decompose(p);
        CHECK(s.leading_index == 0);
        CHECK(s.components[0] == UniPoly(f, {f->zero(), f->zero(), f->one()}));
        CHECK(s.components[1].is_zero());
        CHECK(s.components[2].is_zero());
    }

    SUBCASE("x^2 has N = 2") {
        BiPoly p(f, 2);
        p.set_coeff(2, 0, f->one());
        auto s = shear_decompose(p);
        CHECK(s.leading_index == 2);
        CHECK(s.components[0].is_zero());
        CHECK(s.components[1].is_zero());
        CHECK(s.components[2] == UniPoly(f, {f->one()}));
    }

    SUBCASE("xy = t*x - x^2") {
        BiPoly p(f, 1);
        p.set_coeff(1, 1, f->one());
        auto s = shear_decompose(p);
        CHECK(s.leading_index == 2);
        CHECK(s.components[1] == UniPoly(f, {f->zero(), f->one()}));
        CHECK(s.components[2] == UniPoly(f, {-f->one()}));
        CHECK(shear_compose(s) == p);
    }
}

TEST_CASE("shear round trip on random polynomials") {
    auto f = RadicalField::create({2, 3});
    test_support::Rng rng(515151);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_bipoly(rng, f, 4);
        CHECK(shear_compose(shear_decompose(p)) == p);
    }
}

TEST_CASE("root bound") {
    auto f = RadicalField::create({2});

    // z^2 - 3z + 2 = (z-1)(z-2)
    UniPoly p(f, {f->integer(2), f->integer(-3), f->one()});
    CHECK(root_bound(p) == f->integer(5));
    CHECK(root_bound(UniPoly(f, {-f->one(), f->one()})) == f->one());
    CHECK(root_bound(UniPoly(f, {f->zero(), f->zero(), f->integer(2)})) == f->one());
    CHECK_THROWS_AS(root_bound(UniPoly(f, {f->one()})), Error);
    CHECK_THROWS_AS(root_bound(UniPoly(f)), Error);
}

TEST_CASE("root bound dominates constructed roots") {
    auto f = RadicalField::create({2});
    test_support::Rng rng(606);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> deg(1, 5);
        const int n = deg(rng);
        std::vector<Rational> roots;
        auto lead = test_support::random_rational(rng, 5, 3);
        UniPoly p(f, {lead != 0 ? f->rational(lead) : f->one()});
        for (int i = 0; i < n; ++i) {
            roots.push_back(test_support::random_rational(rng, 8, 4));
            p = p * UniPoly(f, {f->rational(-roots.back()), f->one()});
        }
        auto bound = root_bound(p);
        for (const auto& r : roots) {
            CHECK((bound - f->rational(abs_of(r))).sign() >= 0);
        }
    }
}

TEST_CASE("perturbed lower bound") {
    auto f = RadicalField::create({2});

    SUBCASE("p = z, delta = 0, x = 10") {
        UniPoly p(f, {f->zero(), f->one()});
        CHECK(perturbed_lower_bound(p, f->zero(), f->integer(10)) == f->rational(Rational(9, 2)));
    }

    SUBCASE("x inside the root ball gives 0") {
        UniPoly p(f, {f->zero(), f->one()});
        CHECK(perturbed_lower_bound(p, f->zero(), f->rational(Rational(1, 2))) == f->zero());
    }

    SUBCASE("frozen example: z^2 - 3z + 2 at 100") {
        UniPoly p(f, {f->integer(2), f->integer(-3), f->one()});
        auto bound = perturbed_lower_bound(p, f->rational(Rational(1, 4)), f->integer(100));
        CHECK(bound == f->integer(3872));  // (1/2) * (100 - 12)^2
    }

    SUBCASE("delta too large rejected") {
        UniPoly p(f, {f->integer(2), f->integer(-3), f->one()});
        CHECK_THROWS_AS(perturbed_lower_bound(p, f->one(), f->integer(100)), Error);
    }
}

TEST_CASE("perturbed lower bound is honored by perturbation sweeps") {
    auto f = RadicalField::create({2});
    test_support::Rng rng(8088);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> deg(1, 4);
        const int n = deg(rng);
        UniPoly p(f, {f->one()});
        for (int i = 0; i < n; ++i) {
            p = p * UniPoly(f, {f->rational(test_support::random_rational(rng, 6, 3)), f->one()});
        }
        const Rational delta(1, 5);  // |a_N| = 1, so delta < 1/2
        std::uniform_int_distribution<int> xoff(1, 50);
        const auto x = f->integer(xoff(rng) + 40);
        const auto bound = perturbed_lower_bound(p, f->rational(delta), x);
        std::uniform_int_distribution<long long> pert(-5, 5);
        for (int sweep = 0; sweep < 50; ++sweep) {
            std::vector<FieldElement> coeffs = p.coeffs();
            for (auto& c : coeffs) {
                c = c + f->rational(Rational(pert(rng), 25));  // |perturbation| <= 1/5
            }
            UniPoly q(f, std::move(coeffs));
            CHECK((q.eval(x).abs() - bound).sign() >= 0);
        }
    }
}

TEST_CASE("cocycle recovery") {
    auto f = RadicalField::create({2});

    SUBCASE("Q = 2xy gives R = t^2") {
        BiPoly q(f, 1);
        q.set_coeff(1, 1, f->integer(2));
        CHECK(recover_from_cocycle(q) == UniPoly(f, {f->zero(), f->zero(), f->one()}));
    }

    SUBCASE("Q = 0 gives R = 0") {
        CHECK(recover_from_cocycle(BiPoly(f, 2)).is_zero());
    }

    SUBCASE("Q = 3x^2y + 3xy^2 gives R = t^3") {
        BiPoly q(f, 2);
        q.set_coeff(2, 1, f->integer(3));
        q.set_coeff(1, 2, f->integer(3));
        CHECK(recover_from_cocycle(q) ==
              UniPoly(f, {f->zero(), f->zero(), f->zero(), f->one()}));
    }

    SUBCASE("asymmetric input rejected") {
        BiPoly q(f, 1);
        q.set_coeff(1, 0, f->one());
        CHECK_THROWS_WITH_AS(recover_from_cocycle(q), doctest::Contains("not symmetric"), Error);
    }

    SUBCASE("non-coboundary rejected with the violated coefficient") {
        BiPoly q(f, 2);  // x^2 y^2 is symmetric but not of the right shape
        q.set_coeff(2, 2, f->one());
        CHECK_THROWS_WITH_AS(recover_from_cocycle(q), doctest::Contains("not a coboundary"),
                             Error);
    }
}

TEST_CASE("cocycle recovery inverts the coboundary map") {
    auto f = RadicalField::create({2, 3});
    test_support::Rng rng(11011);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = random_unipoly(rng, f, 5);
        // Strip constant and linear part: the coboundary map kills them.
        std::vector<FieldElement> coeffs = r.coeffs();
        for (std::size_t i = 0; i < coeffs.size() && i < 2; ++i) coeffs[i] = f->zero();
        UniPoly normalized(f, std::move(coeffs));
        CHECK(recover_from_cocycle(coboundary(normalized)) == normalized);
    }
}
