#pragma once

#include <optional>
#include <vector>

#include "dunklpoly/dunkl.hpp"

namespace dunklpoly {

/// Recurrence coefficients of a symmetric MOPS:
///   P_{n+2} = x P_{n+1} - gamma_{n+1} P_n,  P_0 = 1, P_1 = x.
/// gamma indexing starts at 1 (gamma_1 multiplies P_0); every stored gamma_n
/// must be nonzero (regularity).
class SymmetricRecurrence {
public:
    SymmetricRecurrence() = default;
    explicit SymmetricRecurrence(std::vector<Rational> gammas);

    int size() const { return static_cast<int>(gammas_.size()); }
    const Rational& gamma(int n) const;  // n in [1, size()]
    const std::vector<Rational>& gammas() const { return gammas_; }

    friend bool operator==(const SymmetricRecurrence& a, const SymmetricRecurrence& b) {
        return a.gammas_ == b.gammas_;
    }

private:
    std::vector<Rational> gammas_;
};

/// General three-term recurrence:
///   P_{n+2} = (x - beta_{n+1}) P_{n+1} - gamma_{n+1} P_n,  P_1 = x - beta_0.
class GeneralRecurrence {
public:
    GeneralRecurrence(std::vector<Rational> betas, std::vector<Rational> gammas);
    static GeneralRecurrence symmetric(const SymmetricRecurrence& rec);

    int beta_count() const { return static_cast<int>(betas_.size()); }
    int gamma_count() const { return static_cast<int>(gammas_.size()); }
    const Rational& beta(int n) const;   // n in [0, beta_count())
    const Rational& gamma(int n) const;  // n in [1, gamma_count()]
    bool is_symmetric() const;

    friend bool operator==(const GeneralRecurrence& a, const GeneralRecurrence& b) {
        return a.betas_ == b.betas_ && a.gammas_ == b.gammas_;
    }

private:
    std::vector<Rational> betas_;
    std::vector<Rational> gammas_;
};

/// Monic P_0 .. P_N from the recurrence. Requires betas through index N-1 and
/// gammas through index N-1.
std::vector<Polynomial> generate_mops(const GeneralRecurrence& rec, int N);
std::vector<Polynomial> generate_mops(const SymmetricRecurrence& rec, int N);

/// Q_n = T_mu P_{n+1} / mu_{n+1} for n = 0 .. len(P)-2; each Q_n is monic of
/// degree n.
std::vector<Polynomial> q_sequence(const std::vector<Polynomial>& P, const DunklContext& ctx);

/// Exact coefficients of f in a graded monic basis (deg basis[k] = k):
/// returns lambda_0 .. lambda_deg(f) with f = sum lambda_k basis[k].
std::vector<Rational> expand_in_basis(const Polynomial& f, const std::vector<Polynomial>& basis);

struct ThreeTermViolation {
    int n;           // x Q_n is the expansion that broke the pattern
    int nu;          // offending basis index
    Rational value;  // offending coefficient (zero for a vanishing gamma)
};

struct ThreeTermDetection {
    std::optional<SymmetricRecurrence> recurrence;
    std::optional<ThreeTermViolation> violation;
    bool ok() const { return recurrence.has_value(); }
};

/// Decides whether a graded monic sequence Q satisfies a symmetric three-term
/// recurrence by expanding x Q_n in the Q basis. On success the detected
/// gamma_n are returned; otherwise the first offending (n, nu) is reported.
/// Absence of the structure is a legitimate result, not an error.
ThreeTermDetection detect_three_term(const std::vector<Polynomial>& Q);

/// Connection identity between a symmetric MOPS and its normalized Dunkl
/// images: xi_{n+1} P_{n+1} = mu_{n+2} Q_{n+1} + mu_n gamma_{n+1} Q_{n-1}
///                            - mu_{n+1} x Q_n.
bool key_identity_check(const std::vector<Polynomial>& P, const std::vector<Polynomial>& Q,
                        const SymmetricRecurrence& rec, const DunklContext& ctx, int n);

/// Recurrence of the shifted polynomials a^{-n} P_n(a x + b):
/// beta_n -> (beta_n - b)/a, gamma_n -> gamma_n / a^2. Requires a != 0.
GeneralRecurrence affine_shift(const GeneralRecurrence& rec, const Rational& a, const Rational& b);

/// a^{-n} p(a x + b) for p of degree n.
Polynomial shifted_polynomial(const Polynomial& p, const Rational& a, const Rational& b);

/// Coefficient of x^{n-2} in a monic symmetric P_n, n >= 2.
Rational subleading_coefficient(const Polynomial& p_n);

}  // namespace dunklpoly
