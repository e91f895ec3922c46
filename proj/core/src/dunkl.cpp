#include "dunklpoly/dunkl.hpp"

#include <stdexcept>
#include <string>

namespace dunklpoly {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

DunklContext::DunklContext(Rational mu, int max_degree)
    : mu_(std::move(mu)), max_degree_(max_degree) {
    if (max_degree_ < 0)
        throw std::invalid_argument("DunklContext: negative max_degree");
    for (int n = 0; n <= max_degree_; ++n) {
        if (mu_ == Rational(-2 * n - 1, 2))
            throw std::domain_error("regularity: mu = -n-1/2 (n = " + std::to_string(n) + ")");
    }
}

Rational DunklContext::mu_n(int n) const {
    if (n < -1)
        throw std::invalid_argument("DunklContext::mu_n: n < -1");
    if (n == -1) return Rational(-1) + Rational(2) * mu_;
    return Rational(n) + delta_n(n);
}

Rational DunklContext::xi_n(int n) const {
    if (n < -1)
        throw std::invalid_argument("DunklContext::xi_n: n < -1");
    return Rational(1) + Rational(2 * parity_sign(n)) * mu_;
}

Rational DunklContext::delta_n(int n) const {
    if (n < -1)
        throw std::invalid_argument("DunklContext::delta_n: n < -1");
    return Rational(1 - parity_sign(n)) * mu_;
}

CoefficientTriple coeff_sequences(const DunklContext& ctx, int n) {
    if (n < -1)
        throw std::invalid_argument("coeff_sequences: n < -1");
    return CoefficientTriple{ctx.mu_n(n), ctx.xi_n(n), ctx.delta_n(n)};
}

Polynomial hahn(const Polynomial& f, const Rational& q, const Rational& omega) {
    if (q == Rational(1) && omega.is_zero())
        throw std::invalid_argument("hahn: (q, omega) = (1, 0)");
    const Polynomial numer = compose_affine(f, q, omega) - f;
    if (numer.is_zero()) return Polynomial();
    // Synthetic division by (q-1)x + omega; the remainder must vanish.
    return divide_exact(numer, Polynomial(std::vector<Rational>{omega, q - Rational(1)}));
}

Polynomial dunkl(const Polynomial& f, const DunklContext& ctx) {
    Polynomial result = derivative(f);
    if (!ctx.mu().is_zero())
        result += (Rational(2) * ctx.mu()) * hahn(f, Rational(-1), Rational(0));
    return result;
}

Polynomial dunkl_product(const Polynomial& f, const Polynomial& g, const DunklContext& ctx) {
    Polynomial result = f * dunkl(g, ctx) + g * dunkl(f, ctx);
    if (!ctx.mu().is_zero()) {
        const Polynomial hf = hahn(f, Rational(-1), Rational(0));
        const Polynomial hg = hahn(g, Rational(-1), Rational(0));
        result -= (Rational(4) * ctx.mu()) * (hf * hg).times_x();
    }
    return result;
}

}  // namespace dunklpoly
