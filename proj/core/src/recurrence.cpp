#include "dunklpoly/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace dunklpoly {

SymmetricRecurrence::SymmetricRecurrence(std::vector<Rational> gammas)
    : gammas_(std::move(gammas)) {
    for (std::size_t i = 0; i < gammas_.size(); ++i)
        if (gammas_[i].is_zero())
            throw std::domain_error("SymmetricRecurrence: gamma_" + std::to_string(i + 1) +
                                    " = 0 violates regularity");
}

const Rational& SymmetricRecurrence::gamma(int n) const {
    if (n < 1 || n > size())
        throw std::invalid_argument("SymmetricRecurrence::gamma: index " + std::to_string(n) +
                                    " out of range");
    return gammas_[static_cast<std::size_t>(n - 1)];
}

GeneralRecurrence::GeneralRecurrence(std::vector<Rational> betas, std::vector<Rational> gammas)
    : betas_(std::move(betas)), gammas_(std::move(gammas)) {
    for (std::size_t i = 0; i < gammas_.size(); ++i)
        if (gammas_[i].is_zero())
            throw std::domain_error("GeneralRecurrence: gamma_" + std::to_string(i + 1) +
                                    " = 0 violates regularity");
}

GeneralRecurrence GeneralRecurrence::symmetric(const SymmetricRecurrence& rec) {
    std::vector<Rational> betas(rec.gammas().size() + 1, Rational(0));
    return GeneralRecurrence(std::move(betas), rec.gammas());
}

const Rational& GeneralRecurrence::beta(int n) const {
    if (n < 0 || n >= beta_count())
        throw std::invalid_argument("GeneralRecurrence::beta: index out of range");
    return betas_[static_cast<std::size_t>(n)];
}

const Rational& GeneralRecurrence::gamma(int n) const {
    if (n < 1 || n > gamma_count())
        throw std::invalid_argument("GeneralRecurrence::gamma: index out of range");
    return gammas_[static_cast<std::size_t>(n - 1)];
}

bool GeneralRecurrence::is_symmetric() const {
    for (const auto& b : betas_)
        if (!b.is_zero()) return false;
    return true;
}

std::vector<Polynomial> generate_mops(const GeneralRecurrence& rec, int N) {
    if (N < 0) throw std::invalid_argument("generate_mops: negative horizon");
    if (N >= 1 && rec.beta_count() < N)
        throw std::invalid_argument("generate_mops: insufficient beta coefficients for N = " +
                                    std::to_string(N));
    if (N >= 2 && rec.gamma_count() < N - 1)
        throw std::invalid_argument("generate_mops: insufficient gamma coefficients for N = " +
                                    std::to_string(N));

    std::vector<Polynomial> P;
    P.reserve(static_cast<std::size_t>(N) + 1);
    P.push_back(Polynomial::constant(Rational(1)));
    if (N >= 1)
        P.push_back(Polynomial(std::vector<Rational>{-rec.beta(0), Rational(1)}));
    for (int n = 2; n <= N; ++n) {
        Polynomial next = P.back().times_x() - rec.beta(n - 1) * P.back()
                          - rec.gamma(n - 1) * P[static_cast<std::size_t>(n - 2)];
        P.push_back(std::move(next));
    }
    return P;
}

std::vector<Polynomial> generate_mops(const SymmetricRecurrence& rec, int N) {
    if (N < 0) throw std::invalid_argument("generate_mops: negative horizon");
    if (N >= 2 && rec.size() < N - 1)
        throw std::invalid_argument("generate_mops: insufficient gamma coefficients for N = " +
                                    std::to_string(N));
    std::vector<Polynomial> P;
    P.reserve(static_cast<std::size_t>(N) + 1);
    P.push_back(Polynomial::constant(Rational(1)));
    if (N >= 1) P.push_back(Polynomial::variable());
    for (int n = 2; n <= N; ++n)
        P.push_back(P.back().times_x() - rec.gamma(n - 1) * P[static_cast<std::size_t>(n - 2)]);
    return P;
}

std::vector<Polynomial> q_sequence(const std::vector<Polynomial>& P, const DunklContext& ctx) {
    if (P.empty()) return {};
    for (std::size_t n = 0; n < P.size(); ++n)
        if (!P[n].is_monic() || P[n].degree() != static_cast<int>(n))
            throw std::invalid_argument("q_sequence: input is not a graded monic sequence");
    std::vector<Polynomial> Q;
    Q.reserve(P.size() - 1);
    for (std::size_t n = 0; n + 1 < P.size(); ++n)
        Q.push_back(inverse(ctx.mu_n(static_cast<int>(n) + 1)) * dunkl(P[n + 1], ctx));
    return Q;
}

std::vector<Rational> expand_in_basis(const Polynomial& f, const std::vector<Polynomial>& basis) {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!basis[k].is_monic() || basis[k].degree() != static_cast<int>(k))
            throw std::invalid_argument("expand_in_basis: basis is not graded monic");
    if (!f.is_zero() && f.degree() >= static_cast<int>(basis.size()))
        throw std::invalid_argument("expand_in_basis: basis does not cover deg f");

    const int deg = f.degree();
    std::vector<Rational> lambda(static_cast<std::size_t>(deg < 0 ? 0 : deg + 1), Rational(0));
    Polynomial work = f;
    while (!work.is_zero()) {
        const int d = work.degree();
        const Rational c = work.leading();
        lambda[static_cast<std::size_t>(d)] = c;
        work -= c * basis[static_cast<std::size_t>(d)];
        if (!work.is_zero() && work.degree() >= d)
            throw std::logic_error("expand_in_basis: elimination failed to reduce degree");
    }
    return lambda;
}

ThreeTermDetection detect_three_term(const std::vector<Polynomial>& Q) {
    ThreeTermDetection result;
    if (Q.size() < 2) {
        result.recurrence = SymmetricRecurrence();
        return result;
    }
    std::vector<Rational> gammas;
    // Expanding x Q_n needs Q_{n+1} in the basis, so n stops at len-2.
    for (int n = 0; n + 1 < static_cast<int>(Q.size()); ++n) {
        const auto lambda = expand_in_basis(Q[static_cast<std::size_t>(n)].times_x(), Q);
        for (int nu = 0; nu < static_cast<int>(lambda.size()); ++nu) {
            if (nu == n + 1 || nu == n - 1) continue;
            if (!lambda[static_cast<std::size_t>(nu)].is_zero()) {
                result.violation = ThreeTermViolation{n, nu, lambda[static_cast<std::size_t>(nu)]};
                return result;
            }
        }
        if (n >= 1) {
            const Rational& g = lambda[static_cast<std::size_t>(n - 1)];
            if (g.is_zero()) {
                result.violation = ThreeTermViolation{n, n - 1, Rational(0)};
                return result;
            }
            gammas.push_back(g);
        }
    }
    result.recurrence = SymmetricRecurrence(std::move(gammas));
    return result;
}

bool key_identity_check(const std::vector<Polynomial>& P, const std::vector<Polynomial>& Q,
                        const SymmetricRecurrence& rec, const DunklContext& ctx, int n) {
    if (n < 0 || n + 1 >= static_cast<int>(P.size()) || n + 1 >= static_cast<int>(Q.size()))
        throw std::invalid_argument("key_identity_check: horizon too small for n");
    const Polynomial lhs = ctx.xi_n(n + 1) * P[static_cast<std::size_t>(n + 1)];
    Polynomial rhs = ctx.mu_n(n + 2) * Q[static_cast<std::size_t>(n + 1)]
                     - ctx.mu_n(n + 1) * Q[static_cast<std::size_t>(n)].times_x();
    if (n >= 1)
        rhs += ctx.mu_n(n) * rec.gamma(n + 1) * Q[static_cast<std::size_t>(n - 1)];
    return lhs == rhs;
}

GeneralRecurrence affine_shift(const GeneralRecurrence& rec, const Rational& a, const Rational& b) {
    if (a.is_zero()) throw std::invalid_argument("affine_shift: a = 0");
    std::vector<Rational> betas, gammas;
    betas.reserve(static_cast<std::size_t>(rec.beta_count()));
    gammas.reserve(static_cast<std::size_t>(rec.gamma_count()));
    for (int n = 0; n < rec.beta_count(); ++n) betas.push_back((rec.beta(n) - b) / a);
    const Rational a2 = a * a;
    for (int n = 1; n <= rec.gamma_count(); ++n) gammas.push_back(rec.gamma(n) / a2);
    return GeneralRecurrence(std::move(betas), std::move(gammas));
}

Polynomial shifted_polynomial(const Polynomial& p, const Rational& a, const Rational& b) {
    if (a.is_zero()) throw std::invalid_argument("shifted_polynomial: a = 0");
    if (p.is_zero()) return p;
    return pow(a, -p.degree()) * compose_affine(p, a, b);
}

Rational subleading_coefficient(const Polynomial& p_n) {
    const int n = p_n.degree();
    if (n < 2)
        throw std::invalid_argument("subleading_coefficient: degree < 2");
    if (!p_n.is_monic())
        throw std::invalid_argument("subleading_coefficient: polynomial is not monic");
    return p_n.coeff(n - 2);
}

}  // namespace dunklpoly
