#include "dunklpoly/classical.hpp"

#include <stdexcept>
#include <string>

namespace dunklpoly {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

Rational delta_of(const Rational& mu, int n) {
    return Rational(1 - parity_sign(n)) * mu;
}

Rational xi_of(const Rational& mu, int n) {
    return Rational(1) + Rational(2 * parity_sign(n)) * mu;
}

}  // namespace

ThetaSequence ThetaSequence::trivial(Rational mu) {
    return ThetaSequence(Case::A, std::move(mu), Rational(0));
}

ThetaSequence ThetaSequence::with_parameter(Rational mu, Rational theta) {
    return ThetaSequence(Case::B, std::move(mu), std::move(theta));
}

const Rational& ThetaSequence::parameter() const {
    if (case_ != Case::B)
        throw std::invalid_argument("ThetaSequence::parameter: case A has no parameter");
    return theta_;
}

Rational ThetaSequence::case_b_denominator(int n) const {
    return Rational(n) + theta_ + Rational(parity_sign(n)) * mu_;
}

Rational ThetaSequence::value(int n) const {
    if (n < -1)
        throw std::invalid_argument("ThetaSequence::value: n < -1");
    if (n == -1) return Rational(0);
    if (n == 0 || case_ == Case::A) return Rational(1);
    const Rational den = case_b_denominator(n);
    if (den.is_zero())
        throw std::domain_error("theta_" + std::to_string(n) +
                                " undefined: theta = -n - mu(-1)^n");
    const Rational num = Rational(n) + theta_ + Rational(1) - Rational(parity_sign(n)) * mu_;
    if (num.is_zero())
        throw std::domain_error("theta_" + std::to_string(n) +
                                " = 0: theta = -(n+1) + mu(-1)^n");
    return num / den;
}

Rational ThetaSequence::a_factor(int m) const {
    if (m < 0)
        throw std::invalid_argument("ThetaSequence::a_factor: m < 0");
    if (m == 0 || case_ == Case::A) return Rational(1);
    const Rational den = case_b_denominator(m);
    if (den.is_zero())
        throw std::domain_error("theta_" + std::to_string(m) +
                                " undefined: theta = -n - mu(-1)^n");
    return (Rational(2 * m) + theta_ + mu_ + Rational(2)) / den;
}

Rational ThetaSequence::b_factor(int m) const {
    if (m < 0)
        throw std::invalid_argument("ThetaSequence::b_factor: m < 0");
    if (m == 0 || case_ == Case::A) return Rational(1);
    const Rational den = case_b_denominator(m);
    if (den.is_zero())
        throw std::domain_error("theta_" + std::to_string(m) +
                                " undefined: theta = -n - mu(-1)^n");
    return (Rational(2 * m) + theta_ + mu_) / den;
}

bool riccati_check(const ThetaSequence& theta, int N) {
    const Rational& mu = theta.mu();
    for (int n = 1; n + 1 <= N; ++n) {
        const Rational tn = theta.value(n);
        if (tn.is_zero())
            throw std::domain_error("riccati_check: theta_" + std::to_string(n) + " = 0");
        const Rational lhs = xi_of(mu, n + 1) * theta.value(n + 1) + xi_of(mu, n) / tn;
        if (lhs != Rational(2)) return false;
    }
    return true;
}

SymmetricRecurrence gamma_from_theta(const ThetaSequence& theta, const Rational& gamma1,
                                     const DunklContext& ctx, int N) {
    if (gamma1.is_zero())
        throw std::invalid_argument("gamma_from_theta: gamma_1 = 0");
    if (N < 1)
        throw std::invalid_argument("gamma_from_theta: horizon < 1");

    std::vector<Rational> gammas;
    gammas.reserve(static_cast<std::size_t>(N));
    gammas.push_back(gamma1);
    for (int n = 0; n + 2 <= N; ++n) {
        // gamma_{n+2} = (mu_{n+2}/mu_{n+1}) (g_n / h_{n+1}) gamma_{n+1}, the
        // xi-cancelled reading of the propagation law.
        const Rational g = theta.b_factor(n);
        const Rational h = theta.a_factor(n + 1);
        if (h.is_zero())
            throw std::domain_error("gamma_from_theta: vanishing denominator at n = " +
                                    std::to_string(n));
        const Rational next = ctx.mu_n(n + 2) / ctx.mu_n(n + 1) * g / h * gammas.back();
        if (next.is_zero())
            throw std::domain_error("gamma_from_theta: gamma_" + std::to_string(n + 2) +
                                    " = 0 violates regularity");
        gammas.push_back(next);
    }
    return SymmetricRecurrence(std::move(gammas));
}

SymmetricRecurrence gamma_tilde(const ThetaSequence& theta, const SymmetricRecurrence& gammas,
                                const DunklContext& ctx) {
    if (gammas.size() < 2)
        throw std::invalid_argument("gamma_tilde: need gamma through index 2");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(gammas.size()) - 1);
    for (int n = 1; n + 1 <= gammas.size(); ++n) {
        const Rational gt = ctx.mu_n(n) / ctx.mu_n(n + 1) * theta.value(n) * gammas.gamma(n + 1);
        if (gt.is_zero())
            throw std::domain_error("gamma_tilde: zero at n = " + std::to_string(n) +
                                    " (Q is not orthogonal)");
        out.push_back(gt);
    }
    return SymmetricRecurrence(std::move(out));
}

Rational hermite_gamma(const Rational& mu, int n) {
    if (n < 1) throw std::invalid_argument("hermite_gamma: n < 1");
    const Rational g = (Rational(n) + delta_of(mu, n)) / Rational(2);
    if (g.is_zero())
        throw std::domain_error("hermite_gamma: regularity violated at n = " + std::to_string(n));
    return g;
}

Rational gegenbauer_gamma(const Rational& alpha, const Rational& beta, int n) {
    if (n < 1) throw std::invalid_argument("gegenbauer_gamma: n < 1");
    const Rational mu = beta + Rational(1, 2);
    const Rational d = delta_of(mu, n);
    const Rational den = Rational(4) * (Rational(n + 1) + alpha + beta) * (Rational(n) + alpha + beta);
    if (den.is_zero())
        throw std::domain_error("gegenbauer_gamma: alpha + beta = -n at n = " + std::to_string(n));
    const Rational g = (Rational(n) + Rational(2) * alpha + d) * (Rational(n) + d) / den;
    if (g.is_zero())
        throw std::domain_error("gegenbauer_gamma: regularity violated at n = " + std::to_string(n));
    return g;
}

Rational gegenbauer_gamma_tilde(const Rational& alpha, const Rational& beta, int n) {
    if (n < 1) throw std::invalid_argument("gegenbauer_gamma_tilde: n < 1");
    const Rational mu = beta + Rational(1, 2);
    const Rational d = delta_of(mu, n);
    const Rational den =
        Rational(4) * (Rational(n + 2) + alpha + beta) * (Rational(n + 1) + alpha + beta);
    if (den.is_zero())
        throw std::domain_error("gegenbauer_gamma_tilde: alpha + beta = -n at n = " +
                                std::to_string(n));
    const Rational g =
        (Rational(n + 2) + Rational(2) * alpha + d) * (Rational(n) + d) / den;
    if (g.is_zero())
        throw std::domain_error("gegenbauer_gamma_tilde: zero at n = " + std::to_string(n));
    return g;
}

ThetaMuPair param_map(const Rational& alpha, const Rational& beta) {
    return ThetaMuPair{Rational(2) * alpha + beta + Rational(3, 2), beta + Rational(1, 2)};
}

AlphaBetaPair param_map_inverse(const Rational& theta, const Rational& mu) {
    return AlphaBetaPair{(theta - mu - Rational(1)) / Rational(2), mu - Rational(1, 2)};
}

void validate_family(const FamilySpec& family, int horizon) {
    if (horizon < 0)
        throw std::invalid_argument("validate_family: negative horizon");
    if (const auto* h = std::get_if<GeneralizedHermite>(&family)) {
        for (int n = 0; n <= horizon; ++n)
            if (h->mu == Rational(-2 * n - 1, 2))
                throw std::domain_error("regularity: mu = -n-1/2 (n = " + std::to_string(n) + ")");
        return;
    }
    const auto& g = std::get<GeneralizedGegenbauer>(family);
    for (int n = 1; n <= horizon + 2; ++n) {
        const Rational neg(-n);
        if (g.alpha + g.beta == neg)
            throw std::domain_error("regularity: alpha + beta = -n (n = " + std::to_string(n) + ")");
        if (g.alpha == neg)
            throw std::domain_error("regularity: alpha = -n (n = " + std::to_string(n) + ")");
        if (g.beta == neg)
            throw std::domain_error("regularity: beta = -n (n = " + std::to_string(n) + ")");
    }
}

std::string family_name(const FamilySpec& family) {
    return std::holds_alternative<GeneralizedHermite>(family) ? "generalized-hermite"
                                                              : "generalized-gegenbauer";
}

Rational family_mu(const FamilySpec& family) {
    if (const auto* h = std::get_if<GeneralizedHermite>(&family)) return h->mu;
    return std::get<GeneralizedGegenbauer>(family).beta + Rational(1, 2);
}

ThetaSequence family_theta(const FamilySpec& family) {
    if (const auto* h = std::get_if<GeneralizedHermite>(&family))
        return ThetaSequence::trivial(h->mu);
    const auto& g = std::get<GeneralizedGegenbauer>(family);
    const auto tm = param_map(g.alpha, g.beta);
    return ThetaSequence::with_parameter(tm.mu, tm.theta);
}

Rational family_default_gamma1(const FamilySpec& family) {
    if (const auto* h = std::get_if<GeneralizedHermite>(&family))
        return (Rational(1) + Rational(2) * h->mu) / Rational(2);  // mu_1 / 2
    const auto& g = std::get<GeneralizedGegenbauer>(family);
    return (g.beta + Rational(1)) / (g.alpha + g.beta + Rational(2));
}

SymmetricRecurrence family_gammas(const FamilySpec& family, int N) {
    std::vector<Rational> gammas;
    gammas.reserve(static_cast<std::size_t>(N));
    if (const auto* h = std::get_if<GeneralizedHermite>(&family)) {
        for (int n = 1; n <= N; ++n) gammas.push_back(hermite_gamma(h->mu, n));
    } else {
        const auto& g = std::get<GeneralizedGegenbauer>(family);
        for (int n = 1; n <= N; ++n) gammas.push_back(gegenbauer_gamma(g.alpha, g.beta, n));
    }
    return SymmetricRecurrence(std::move(gammas));
}

Rational family_gamma_tilde(const FamilySpec& family, int n) {
    if (const auto* h = std::get_if<GeneralizedHermite>(&family))
        return hermite_gamma(h->mu, n);  // Q_n = P_n for the Hermite family
    const auto& g = std::get<GeneralizedGegenbauer>(family);
    return gegenbauer_gamma_tilde(g.alpha, g.beta, n);
}

std::optional<ThetaSequence> classify_riccati_solution(const std::vector<Rational>& values,
                                                       const Rational& mu) {
    if (values.empty()) return std::nullopt;

    const auto matches = [&](const ThetaSequence& candidate) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            try {
                if (candidate.value(static_cast<int>(i) + 1) != values[i]) return false;
            } catch (const std::domain_error&) {
                return false;
            }
        }
        return true;
    };

    const ThetaSequence case_a = ThetaSequence::trivial(mu);
    if (matches(case_a)) return case_a;

    // Recover the case-B parameter from theta_1 = (theta+2+mu)/(theta+1-mu).
    const Rational& t1 = values.front();
    if (t1 == Rational(1)) return std::nullopt;
    const Rational theta =
        (Rational(2) + mu - t1 * (Rational(1) - mu)) / (t1 - Rational(1));
    const ThetaSequence case_b = ThetaSequence::with_parameter(mu, theta);
    if (matches(case_b)) return case_b;
    return std::nullopt;
}

}  // namespace dunklpoly
