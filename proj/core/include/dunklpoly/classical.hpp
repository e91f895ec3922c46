#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dunklpoly/recurrence.hpp"

namespace dunklpoly {

/// A solution of the Riccati recursion xi_{n+1} theta_{n+1} + xi_n / theta_n = 2.
/// Exactly two families exist:
///   case A: theta_n = 1 (trivial solution),
///   case B: theta_n = (n + theta + 1 - mu (-1)^n) / (n + theta + mu (-1)^n)
/// with a free parameter theta avoiding theta != -n +- mu (-1)^n.
/// Conventions: theta_0 = 1 and theta_{-1} = 0.
class ThetaSequence {
public:
    enum class Case { A, B };

    static ThetaSequence trivial(Rational mu);
    static ThetaSequence with_parameter(Rational mu, Rational theta);

    Case riccati_case() const { return case_; }
    const Rational& mu() const { return mu_; }
    const Rational& parameter() const;  // case B only

    /// theta_n for n >= -1; throws std::domain_error when the parameter hits
    /// an exclusion at this index (zero or undefined value).
    Rational value(int n) const;

    /// (mu_{m+2} theta_m - mu_{m+1}) / xi_{m+1}, the xi-cancelled factor; finite
    /// for every admissible parameter, including xi = 0 (mu = 1/2).
    Rational a_factor(int m) const;

    /// (mu_m theta_m - mu_{m-1}) / xi_{m+1}, cancelled the same way.
    Rational b_factor(int m) const;

private:
    ThetaSequence(Case c, Rational mu, Rational theta)
        : case_(c), mu_(std::move(mu)), theta_(std::move(theta)) {}
    Rational case_b_denominator(int n) const;  // n + theta + mu (-1)^n

    Case case_;
    Rational mu_;
    Rational theta_;  // unused in case A
};

/// Verifies xi_{n+1} theta_{n+1} + xi_n theta_n^{-1} = 2 exactly for
/// 1 <= n <= N-1. Throws if some theta_n is undefined.
bool riccati_check(const ThetaSequence& theta, int N);

/// Propagates gamma_1 through the coefficient recursion
///   gamma_{n+2} = (xi_{n+2}/xi_{n+1}) (mu_{n+2}/mu_{n+1})
///                 (mu_n theta_n - mu_{n-1}) / (mu_{n+3} theta_{n+1} - mu_{n+2})
///                 gamma_{n+1}
/// in its xi-cancelled form, so parameters with vanishing xi (mu = 1/2) are
/// handled exactly. Reports the offending index on a vanishing denominator.
SymmetricRecurrence gamma_from_theta(const ThetaSequence& theta, const Rational& gamma1,
                                     const DunklContext& ctx, int N);

/// gamma~_n = (mu_n / mu_{n+1}) theta_n gamma_{n+1} for n = 1 .. size-1; these
/// are the recurrence coefficients of the Q sequence.
SymmetricRecurrence gamma_tilde(const ThetaSequence& theta, const SymmetricRecurrence& gammas,
                                const DunklContext& ctx);

/// Generalized Hermite: gamma_n = (n + delta_n)/2 with the default
/// normalization gamma_1 = mu_1/2.
Rational hermite_gamma(const Rational& mu, int n);

/// Generalized Gegenbauer (gamma_1 = (beta+1)/(alpha+beta+2)):
///   gamma_n = (n + 2 alpha + delta_n)(n + delta_n)
///             / (4 (n+1+alpha+beta)(n+alpha+beta)),  delta built from mu = beta + 1/2.
Rational gegenbauer_gamma(const Rational& alpha, const Rational& beta, int n);

/// Recurrence coefficients of the Gegenbauer Q sequence; equals
/// gegenbauer_gamma(alpha+1, beta, n).
Rational gegenbauer_gamma_tilde(const Rational& alpha, const Rational& beta, int n);

struct ThetaMuPair {
    Rational theta;
    Rational mu;
};
struct AlphaBetaPair {
    Rational alpha;
    Rational beta;
};

/// (alpha, beta) -> (theta, mu) via theta + mu = 2(alpha+beta+1),
/// theta - mu = 2 alpha + 1; so mu = beta + 1/2, theta = 2 alpha + beta + 3/2.
ThetaMuPair param_map(const Rational& alpha, const Rational& beta);
AlphaBetaPair param_map_inverse(const Rational& theta, const Rational& mu);

struct GeneralizedHermite {
    Rational mu;
};
struct GeneralizedGegenbauer {
    Rational alpha;
    Rational beta;
};
using FamilySpec = std::variant<GeneralizedHermite, GeneralizedGegenbauer>;

/// Checks the family's parameter exclusions up to the horizon; throws
/// std::domain_error naming the violated constraint.
void validate_family(const FamilySpec& family, int horizon);

std::string family_name(const FamilySpec& family);
Rational family_mu(const FamilySpec& family);
ThetaSequence family_theta(const FamilySpec& family);
Rational family_default_gamma1(const FamilySpec& family);

/// Closed-form gamma_n (n = 1..N) for the family.
SymmetricRecurrence family_gammas(const FamilySpec& family, int N);

/// Closed-form gamma~_n for the family's Q sequence.
Rational family_gamma_tilde(const FamilySpec& family, int n);

/// Fits a sequence theta_1 .. theta_N of Riccati-solution values to case A or
/// case B (recovering the free parameter from theta_1). Returns the matching
/// ThetaSequence, or nullopt if the values agree with neither family.
std::optional<ThetaSequence> classify_riccati_solution(const std::vector<Rational>& values,
                                                       const Rational& mu);

}  // namespace dunklpoly
