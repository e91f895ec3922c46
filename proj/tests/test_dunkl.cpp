#include <doctest.h>

#include <stdexcept>

#include "dunklpoly/dunkl.hpp"
#include "test_support.hpp"

using dunklpoly::coeff_sequences;
using dunklpoly::dunkl;
using dunklpoly::DunklContext;
using dunklpoly::hahn;
using dunklpoly::Polynomial;
using dunklpoly::Rational;

TEST_CASE("context rejects irregular mu") {
    CHECK_THROWS_WITH_AS(DunklContext(Rational(-1, 2), 5), doctest::Contains("regularity"),
                         std::domain_error);
    CHECK_THROWS_AS(DunklContext(Rational(-3, 2), 5), std::domain_error);
    CHECK_THROWS_AS(DunklContext(Rational(-11, 2), 10), std::domain_error);
    CHECK_NOTHROW(DunklContext(Rational(-1, 4), 30));
    CHECK_NOTHROW(DunklContext(Rational(-11, 2), 4));  // outside the horizon
}

TEST_CASE("coefficient sequences") {
    const DunklContext ctx(Rational(1, 4), 10);
    const auto at0 = coeff_sequences(ctx, 0);
    CHECK(at0.mu_n == Rational(0));
    CHECK(at0.xi_n == Rational(3, 2));
    CHECK(at0.delta_n == Rational(0));

    const auto at1 = coeff_sequences(ctx, 1);
    CHECK(at1.mu_n == Rational(3, 2));
    CHECK(at1.xi_n == Rational(1, 2));
    CHECK(at1.delta_n == Rational(1, 2));

    CHECK(ctx.mu_n(-1) == Rational(-1, 2));  // -1 + 2 mu
    CHECK_THROWS_AS(coeff_sequences(ctx, -2), std::invalid_argument);
}

TEST_CASE("coefficient sequence identities hold to n = 50") {
    for (const Rational& mu : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(-1, 4)}) {
        const DunklContext ctx(mu, 50);
        for (int n = -1; n <= 50; ++n) {
            CHECK(ctx.xi_n(n) == ctx.mu_n(n + 1) - ctx.mu_n(n));
            if (n >= 0) {
                CHECK(ctx.xi_n(n + 2) == ctx.xi_n(n));
                CHECK(ctx.mu_n(n) == Rational(n) + ctx.delta_n(n));
            }
        }
    }
}

TEST_CASE("hahn operator") {
    CHECK(hahn(Polynomial::monomial(2), Rational(-1), Rational(0)).is_zero());
    CHECK(hahn(Polynomial::monomial(3), Rational(-1), Rational(0)) == Polynomial::monomial(2));
    // forward difference of x at omega = 1
    CHECK(hahn(Polynomial::variable(), Rational(1), Rational(1)) ==
          Polynomial::constant(Rational(1)));
    CHECK_THROWS_AS(hahn(Polynomial::variable(), Rational(1), Rational(0)),
                    std::invalid_argument);

    // H_{-1} kills even polynomials and maps x^{2k+1} to x^{2k}
    testsupport::Rng rng(23);
    for (int k = 0; k <= 6; ++k) {
        CHECK(hahn(Polynomial::monomial(2 * k), Rational(-1), Rational(0)).is_zero());
        CHECK(hahn(Polynomial::monomial(2 * k + 1), Rational(-1), Rational(0)) ==
              Polynomial::monomial(2 * k));
    }
    for (int i = 0; i < 20; ++i) {
        Polynomial even;
        for (int k = 0; k <= 4; ++k)
            even += Polynomial::monomial(2 * k, rng.rational());
        if (!even.is_zero())
            CHECK(hahn(even, Rational(-1), Rational(0)).is_zero());
    }
}

TEST_CASE("dunkl on monomials") {
    const DunklContext ctx1(Rational(1), 10);
    CHECK(dunkl(Polynomial::variable(), ctx1) == Polynomial::constant(Rational(3)));
    CHECK(dunkl(Polynomial::monomial(3), ctx1) == Polynomial::monomial(2, Rational(5)));
    for (const Rational& mu : {Rational(0), Rational(2, 3), Rational(-1, 4)}) {
        const DunklContext ctx(mu, 12);
        CHECK(dunkl(Polynomial::monomial(2), ctx) == Polynomial::monomial(1, Rational(2)));
        for (int n = 1; n <= 12; ++n)
            CHECK(dunkl(Polynomial::monomial(n), ctx) ==
                  Polynomial::monomial(n - 1, ctx.mu_n(n)));
        CHECK(dunkl(Polynomial::constant(Rational(5)), ctx).is_zero());
    }
}

TEST_CASE("dunkl agrees with the reflection-quotient definition") {
    testsupport::Rng rng(29);
    for (const Rational& mu :
         {Rational(0), Rational(1, 3), Rational(1, 2), Rational(-1, 4), Rational(7, 5)}) {
        const DunklContext ctx(mu, 30);
        for (int i = 0; i < 25; ++i) {
            const Polynomial f = rng.polynomial(20);
            CHECK(dunkl(f, ctx) == testsupport::dunkl_by_definition(f, mu));
        }
    }
}

TEST_CASE("dunkl reduces degree by one") {
    testsupport::Rng rng(31);
    const DunklContext ctx(Rational(2, 7), 25);
    for (int i = 0; i < 25; ++i) {
        Polynomial f = rng.polynomial(15);
        if (f.degree() < 1) continue;
        const Polynomial g = dunkl(f, ctx);
        CHECK(g.degree() == f.degree() - 1);
        CHECK(g.leading() == f.leading() * ctx.mu_n(f.degree()));
    }
}

TEST_CASE("dunkl is linear and T_0 = D") {
    testsupport::Rng rng(37);
    const DunklContext ctx(Rational(3, 5), 25);
    const DunklContext ctx0(Rational(0), 25);
    for (int i = 0; i < 30; ++i) {
        const Polynomial f = rng.polynomial(12);
        const Polynomial g = rng.polynomial(12);
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        CHECK(dunkl(a * f + b * g, ctx) == a * dunkl(f, ctx) + b * dunkl(g, ctx));
        CHECK(dunkl(f, ctx0) == dunklpoly::derivative(f));
    }
}

TEST_CASE("product rule identity") {
    // f = g = x at mu = 1/2: both routes give 2x
    const DunklContext half(Rational(1, 2), 10);
    const Polynomial x = Polynomial::variable();
    CHECK(dunklpoly::dunkl_product(x, x, half) == Polynomial::monomial(1, Rational(2)));
    CHECK(dunkl(x * x, half) == Polynomial::monomial(1, Rational(2)));

    // f = 1 reduces to T_mu g
    testsupport::Rng rng(41);
    for (const Rational& mu : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(-1, 4),
                               Rational(5, 4)}) {
        const DunklContext ctx(mu, 55);
        for (int i = 0; i < 20; ++i) {
            const Polynomial f = rng.polynomial(25);
            const Polynomial g = rng.polynomial(25);
            CHECK(dunklpoly::dunkl_product(f, g, ctx) == dunkl(f * g, ctx));
            CHECK(dunklpoly::dunkl_product(Polynomial::constant(Rational(1)), g, ctx) ==
                  dunkl(g, ctx));
        }
    }
}

TEST_CASE("multiplication-by-x commutator") {
    // T_mu(x P) = x T_mu P + xi_{n+1} P for P of fixed parity n+1
    for (const Rational& mu : {Rational(1, 3), Rational(1, 2), Rational(-1, 4)}) {
        const DunklContext ctx(mu, 20);
        for (int n = 0; n <= 10; ++n) {
            Polynomial p;  // parity of degree n+1
            for (int k = n + 1; k >= 0; k -= 2)
                p += Polynomial::monomial(k, Rational(k + 1));
            const Polynomial lhs = dunkl(p.times_x(), ctx);
            const Polynomial rhs = dunkl(p, ctx).times_x() + ctx.xi_n(n + 1) * p;
            CHECK(lhs == rhs);
        }
    }
}
