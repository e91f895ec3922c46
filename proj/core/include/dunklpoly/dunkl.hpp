#pragma once

#include "dunklpoly/polynomial.hpp"

namespace dunklpoly {

/// Parameter context for the Dunkl operator T_mu. Construction validates the
/// regularity guard mu != -n - 1/2 for every 0 <= n <= max_degree and refuses
/// irregular parameters up front.
class DunklContext {
public:
    DunklContext(Rational mu, int max_degree);

    const Rational& mu() const { return mu_; }
    int max_degree() const { return max_degree_; }

    /// mu_n = n + mu (1 - (-1)^n) for n >= 0; mu_{-1} = -1 + 2 mu by convention.
    Rational mu_n(int n) const;

    /// xi_n = 1 + 2 mu (-1)^n. Defined for n >= -1; period two in n.
    Rational xi_n(int n) const;

    /// delta_n = mu (1 - (-1)^n): zero at even n, 2 mu at odd n.
    Rational delta_n(int n) const;

private:
    Rational mu_;
    int max_degree_;
};

struct CoefficientTriple {
    Rational mu_n;
    Rational xi_n;
    Rational delta_n;
};

/// The (mu_n, xi_n, delta_n) triple; n >= -1 (the -1 convention only feeds mu_n).
CoefficientTriple coeff_sequences(const DunklContext& ctx, int n);

/// Hahn operator: (f(qx + omega) - f(x)) / ((q - 1) x + omega).
/// The division is exact for every polynomial f; (q, omega) = (1, 0) is rejected.
Polynomial hahn(const Polynomial& f, const Rational& q, const Rational& omega);

/// Dunkl operator T_mu f = f' + 2 mu H_{-1} f. Maps degree n to degree n-1.
Polynomial dunkl(const Polynomial& f, const DunklContext& ctx);

/// Product rule for T_mu:
///   T_mu(fg) = f T_mu g + g T_mu f - 4 mu x (H_{-1} f)(H_{-1} g).
Polynomial dunkl_product(const Polynomial& f, const Polynomial& g, const DunklContext& ctx);

}  // namespace dunklpoly
