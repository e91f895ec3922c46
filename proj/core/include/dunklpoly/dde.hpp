#pragma once

#include "dunklpoly/classical.hpp"
#include "dunklpoly/report.hpp"

namespace dunklpoly {

/// Coefficients of the differential-difference equation
///   (a_n x^2 - b_n) T_mu^2 P_n - c_n x T_mu P_n - d_n P_n = 0
/// characterizing the Dunkl-classical families:
///   a_n = theta_{n-1} - 1
///   b_n = (mu_{n+1} theta_{n-1} - mu_n)(mu_{n-1} theta_{n-1} - mu_{n-2})
///         gamma_n / (xi_n mu_n)
///   c_n = mu_{n-2} theta_{n-1} - mu_{n-1}
///   d_n = xi_n mu_n theta_{n-1}
/// b_n is evaluated in xi-cancelled form, so it stays exact when xi_n = 0
/// (every coefficient vanishes there and the equation is trivially satisfied).
struct DDECoefficients {
    int n = 0;
    Rational a, b, c, d;
};

DDECoefficients dde_coefficients(const ThetaSequence& theta, const SymmetricRecurrence& gammas,
                                 const DunklContext& ctx, int n);

/// The alternative expression for b_n in terms of gamma_{n+1}; must agree with
/// DDECoefficients::b whenever the propagation law holds.
Rational dde_b_alternative(const ThetaSequence& theta, const SymmetricRecurrence& gammas,
                           const DunklContext& ctx, int n);

/// Left-hand side of the equation; the zero polynomial for Dunkl-classical P_n.
Polynomial dde_residual(const Polynomial& p_n, const DDECoefficients& coeffs,
                        const DunklContext& ctx);

/// lambda_n = 2 mu_n, i.e. lambda_{2n} = 4n, lambda_{2n+1} = 2(2n + 2 mu + 1).
Rational hermite_eigenvalue(const DunklContext& ctx, int n);

/// lambda_n = mu_n (n + delta_{n+1} + 2 alpha + 1); equivalently
/// lambda_{2n} = 4n(n+alpha+beta+1), lambda_{2n+1} = 4(n+alpha+1)(n+beta+1).
Rational gegenbauer_eigenvalue(const Rational& alpha, const Rational& beta, int n);

/// Specialized equation for the generalized Hermite family,
///   T_mu^2 P_n - 2 x T_mu P_n + lambda_n P_n = 0,
/// plus the second-order differential equation in x-multiplied polynomial form
///   x^2 y'' + 2 x (mu - x^2) y' + (2 n x^2 - delta_n) y = 0,
/// and the classical reduction at mu = 0.
CheckList hermite_dde_check(const std::vector<Polynomial>& P, const DunklContext& ctx, int N);

/// Specialized equation for the generalized Gegenbauer family,
///   (1 - x^2) T_mu^2 P_n - 2 (alpha + 1) x T_mu P_n + lambda_n P_n = 0,
/// plus the second-order differential equation and the mu = 0 reduction.
CheckList gegenbauer_dde_check(const std::vector<Polynomial>& P, const Rational& alpha,
                               const Rational& beta, int N);

/// First-derivative structure relations of the two families, their equivalent
/// expansions in the P basis, and the mu = 0 reduction of the Hermite form.
CheckList structure_relation_check(const FamilySpec& family, const std::vector<Polynomial>& P,
                                   int N);

/// Full Theorem-2.2 record set for one family at horizon N: the general
/// residual, the two-forms-of-b identity, the coefficient consistency
/// identity, the converse gamma recovery and a perturbed negative control.
CheckList general_dde_check(const ThetaSequence& theta, const SymmetricRecurrence& gammas,
                            const std::vector<Polynomial>& P, const DunklContext& ctx, int N);

/// Recovers the gamma sequence from DDE coefficients alone (the sufficiency
/// direction): alpha_n = -mu_n mu_{n-1} b_n / (2 (mu_{n-1} theta_{n-1} -
/// mu_{n-2})) with theta_{n-1} = a_n + 1, then gamma_n = alpha_n - alpha_{n+1}.
/// Throws std::domain_error on a vanishing denominator.
SymmetricRecurrence converse_gamma_recovery(const std::vector<DDECoefficients>& coeffs,
                                            const DunklContext& ctx);

}  // namespace dunklpoly
