#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "dunklpoly/classical.hpp"
#include "dunklpoly/recurrence.hpp"
#include "test_support.hpp"

using dunklpoly::DunklContext;
using dunklpoly::GeneralRecurrence;
using dunklpoly::Polynomial;
using dunklpoly::Rational;
using dunklpoly::SymmetricRecurrence;

namespace {

SymmetricRecurrence random_recurrence(testsupport::Rng& rng, int count) {
    std::vector<Rational> gammas;
    for (int i = 0; i < count; ++i) gammas.push_back(rng.nonzero_rational());
    return SymmetricRecurrence(std::move(gammas));
}

}  // namespace

TEST_CASE("recurrence containers enforce regularity") {
    CHECK_THROWS_AS(SymmetricRecurrence({Rational(1), Rational(0)}), std::domain_error);
    CHECK_THROWS_AS(GeneralRecurrence({Rational(0)}, {Rational(0)}), std::domain_error);
    const SymmetricRecurrence rec({Rational(1, 2), Rational(3)});
    CHECK(rec.gamma(1) == Rational(1, 2));
    CHECK(rec.gamma(2) == Rational(3));
    CHECK_THROWS_AS(rec.gamma(0), std::invalid_argument);
    CHECK_THROWS_AS(rec.gamma(3), std::invalid_argument);
}

TEST_CASE("generate_mops basics") {
    const SymmetricRecurrence rec({Rational(5, 7), Rational(2)});
    const auto P = generate_mops(rec, 2);
    CHECK(P[0] == Polynomial::constant(Rational(1)));
    CHECK(P[1] == Polynomial::variable());
    CHECK(P[2] == Polynomial({Rational(-5, 7), Rational(0), Rational(1)}));

    // generalized Hermite mu = 1/2: gamma = (1, 1), P_3 = x^3 - 2x
    const auto H = generate_mops(SymmetricRecurrence({Rational(1), Rational(1)}), 3);
    CHECK(H[3] == Polynomial({Rational(0), Rational(-2), Rational(0), Rational(1)}));

    CHECK_THROWS_AS(generate_mops(rec, 5), std::invalid_argument);

    const GeneralRecurrence gen({Rational(2), Rational(1)}, {Rational(3)});
    const auto G = generate_mops(gen, 2);
    CHECK(G[1] == Polynomial({Rational(-2), Rational(1)}));
    CHECK(G[2] == Polynomial({Rational(-1), Rational(-3), Rational(1)}));  // (x-1)(x-2) - 3
}

TEST_CASE("generated sequences are graded monic with parity") {
    testsupport::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rec = random_recurrence(rng, 14);
        const auto P = generate_mops(rec, 15);
        for (int n = 0; n <= 15; ++n) {
            CHECK(P[static_cast<std::size_t>(n)].degree() == n);
            CHECK(P[static_cast<std::size_t>(n)].is_monic());
            const Polynomial parity = (n % 2 == 0)
                                          ? P[static_cast<std::size_t>(n)].reflected()
                                          : -P[static_cast<std::size_t>(n)].reflected();
            CHECK(parity == P[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("q_sequence basics") {
    const DunklContext ctx(Rational(1, 3), 20);
    const auto rec = dunklpoly::family_gammas(dunklpoly::GeneralizedHermite{Rational(1, 3)}, 12);
    const auto P = generate_mops(rec, 12);
    const auto Q = q_sequence(P, ctx);
    REQUIRE(Q.size() == 12);
    CHECK(Q[0] == Polynomial::constant(Rational(1)));
    for (int n = 0; n < 12; ++n) {
        CHECK(Q[static_cast<std::size_t>(n)].degree() == n);
        CHECK(Q[static_cast<std::size_t>(n)].is_monic());
        const Polynomial parity = (n % 2 == 0) ? Q[static_cast<std::size_t>(n)].reflected()
                                               : -Q[static_cast<std::size_t>(n)].reflected();
        CHECK(parity == Q[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("expand_in_basis") {
    const SymmetricRecurrence rec({Rational(2, 3), Rational(1), Rational(4)});
    const auto P = generate_mops(rec, 4);

    SUBCASE("unit rows") {
        for (int k = 0; k <= 4; ++k) {
            const auto lambda = expand_in_basis(P[static_cast<std::size_t>(k)], P);
            for (int nu = 0; nu <= k; ++nu)
                CHECK(lambda[static_cast<std::size_t>(nu)] ==
                      (nu == k ? Rational(1) : Rational(0)));
        }
    }

    SUBCASE("x^2 = P_2 + gamma_1 P_0") {
        const auto lambda = expand_in_basis(Polynomial::monomial(2), P);
        CHECK(lambda[2] == Rational(1));
        CHECK(lambda[1] == Rational(0));
        CHECK(lambda[0] == Rational(2, 3));
    }

    SUBCASE("round trip on random polynomials") {
        testsupport::Rng rng(47);
        const auto basis = generate_mops(random_recurrence(rng, 30), 31);
        for (int i = 0; i < 15; ++i) {
            const Polynomial f = rng.polynomial(30);
            const auto lambda = expand_in_basis(f, basis);
            Polynomial back;
            for (std::size_t nu = 0; nu < lambda.size(); ++nu)
                back += lambda[nu] * basis[nu];
            CHECK(back == f);
        }
    }

    SUBCASE("rejects a non-monic basis") {
        std::vector<Polynomial> bad = {Polynomial::constant(Rational(2))};
        CHECK_THROWS_AS(expand_in_basis(Polynomial::constant(Rational(1)), bad),
                        std::invalid_argument);
        CHECK_THROWS_AS(expand_in_basis(Polynomial::monomial(9), P), std::invalid_argument);
    }
}

TEST_CASE("detect_three_term recovers the generating recurrence") {
    testsupport::Rng rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        const auto rec = random_recurrence(rng, 12);
        const auto P = generate_mops(rec, 12);
        const auto det = detect_three_term(P);
        REQUIRE(det.ok());
        CHECK(det.recurrence->size() == 11);
        for (int n = 1; n <= det.recurrence->size(); ++n)
            CHECK(det.recurrence->gamma(n) == rec.gamma(n));
    }
}

TEST_CASE("detect_three_term flags a nonsymmetric sequence at nu = n") {
    // Nonzero beta puts a diagonal coefficient into the expansion of x P_n.
    const GeneralRecurrence rec({Rational(1), Rational(1), Rational(1), Rational(1)},
                                {Rational(2), Rational(2), Rational(2)});
    const auto P = generate_mops(rec, 4);
    const auto det = detect_three_term(P);
    REQUIRE(!det.ok());
    CHECK(det.violation->nu == det.violation->n);
    CHECK(det.violation->value == Rational(1));
}

TEST_CASE("detect_three_term flags the constant-gamma control") {
    const DunklContext ctx(Rational(1, 3), 12);
    const auto P = generate_mops(SymmetricRecurrence(std::vector<Rational>(10, Rational(1))), 10);
    const auto Q = q_sequence(P, ctx);
    const auto det = detect_three_term(Q);
    REQUIRE(!det.ok());
    REQUIRE(det.violation.has_value());
    CHECK(det.violation->n <= 6);
    // Frozen from an independent expansion: x Q_3 picks up 20/187 on Q_0.
    CHECK(det.violation->n == 3);
    CHECK(det.violation->nu == 0);
    CHECK(det.violation->value == Rational(20, 187));
}

TEST_CASE("key identity links P and Q") {
    for (const Rational& mu : {Rational(1, 2), Rational(1, 3), Rational(0), Rational(-1, 4)}) {
        const DunklContext ctx(mu, 16);
        const auto rec = dunklpoly::family_gammas(dunklpoly::GeneralizedHermite{mu}, 12);
        const auto P = generate_mops(rec, 12);
        const auto Q = q_sequence(P, ctx);
        for (int n = 0; n <= 10; ++n) CHECK(key_identity_check(P, Q, rec, ctx, n));
    }
    {
        const dunklpoly::FamilySpec fam =
            dunklpoly::GeneralizedGegenbauer{Rational(1, 2), Rational(1, 2)};
        const DunklContext ctx(Rational(1), 16);
        const auto rec = dunklpoly::family_gammas(fam, 12);
        const auto P = generate_mops(rec, 12);
        const auto Q = q_sequence(P, ctx);
        for (int n = 0; n <= 10; ++n) CHECK(key_identity_check(P, Q, rec, ctx, n));
    }
}

TEST_CASE("affine_shift") {
    const SymmetricRecurrence sym({Rational(1), Rational(2), Rational(3)});
    const auto rec = GeneralRecurrence::symmetric(sym);

    SUBCASE("identity and scaling") {
        CHECK(affine_shift(rec, Rational(1), Rational(0)) == rec);
        const auto scaled = affine_shift(rec, Rational(2), Rational(0));
        CHECK(scaled.is_symmetric());
        for (int n = 1; n <= 3; ++n) CHECK(scaled.gamma(n) == rec.gamma(n) / Rational(4));
    }

    SUBCASE("nonzero b breaks symmetry") {
        const auto moved = affine_shift(rec, Rational(2), Rational(1));
        CHECK(!moved.is_symmetric());
        for (int n = 0; n < moved.beta_count(); ++n)
            CHECK(moved.beta(n) == Rational(-1, 2));
    }

    SUBCASE("a = 0 rejected") {
        CHECK_THROWS_AS(affine_shift(rec, Rational(0), Rational(1)), std::invalid_argument);
    }

    SUBCASE("shifted recurrence generates shifted polynomials") {
        testsupport::Rng rng(59);
        std::vector<Rational> betas, gammas;
        for (int i = 0; i < 9; ++i) betas.push_back(rng.rational());
        for (int i = 0; i < 8; ++i) gammas.push_back(rng.nonzero_rational());
        const GeneralRecurrence base(betas, gammas);
        const Rational a = Rational(3, 2), b = Rational(-2, 5);
        const auto shifted = affine_shift(base, a, b);
        const auto P = generate_mops(base, 8);
        const auto Ps = generate_mops(shifted, 8);
        for (int n = 0; n <= 8; ++n)
            CHECK(Ps[static_cast<std::size_t>(n)] ==
                  dunklpoly::shifted_polynomial(P[static_cast<std::size_t>(n)], a, b));
    }

    SUBCASE("composition of shifts") {
        testsupport::Rng rng(61);
        std::vector<Rational> betas, gammas;
        for (int i = 0; i < 6; ++i) betas.push_back(rng.rational());
        for (int i = 0; i < 5; ++i) gammas.push_back(rng.nonzero_rational());
        const GeneralRecurrence base(betas, gammas);
        const Rational a1(2), b1(1), a2(1, 3), b2(-1);
        // First shift by (a1, b1), then the result by (a2, b2): polynomials in
        // y where x = a1 (a2 y + b2) + b1.
        const auto once = affine_shift(affine_shift(base, a1, b1), a2, b2);
        const auto composed = affine_shift(base, a1 * a2, a1 * b2 + b1);
        CHECK(once == composed);
    }
}

TEST_CASE("subleading coefficient") {
    CHECK(dunklpoly::subleading_coefficient(
              Polynomial({Rational(-7, 3), Rational(0), Rational(1)})) == Rational(-7, 3));
    // Hermite mu = 1/2: P_3 = x^3 - 2x, alpha_3 = -2
    const auto P = generate_mops(SymmetricRecurrence({Rational(1), Rational(1)}), 3);
    CHECK(dunklpoly::subleading_coefficient(P[3]) == Rational(-2));
    CHECK_THROWS_AS(dunklpoly::subleading_coefficient(Polynomial::variable()),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        dunklpoly::subleading_coefficient(Polynomial::monomial(3, Rational(2))),
        std::invalid_argument);
}

TEST_CASE("gamma_n = alpha_n - alpha_{n+1} for symmetric sequences") {
    testsupport::Rng rng(67);
    for (int trial = 0; trial < 8; ++trial) {
        const auto rec = random_recurrence(rng, 14);
        const auto P = generate_mops(rec, 15);
        // alpha_0 = alpha_1 = 0 by convention, so the identity starts at n = 1.
        std::vector<Rational> alpha(16, Rational(0));
        for (int n = 2; n <= 15; ++n)
            alpha[static_cast<std::size_t>(n)] =
                dunklpoly::subleading_coefficient(P[static_cast<std::size_t>(n)]);
        for (int n = 1; n <= 14; ++n)
            CHECK(rec.gamma(n) == alpha[static_cast<std::size_t>(n)] -
                                      alpha[static_cast<std::size_t>(n + 1)]);
    }
}
