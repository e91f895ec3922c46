#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "dunklpoly/classical.hpp"
#include "dunklpoly/report.hpp"

namespace dunklpoly {

/// Symmetric moment functional normalized to m_0 = 1: odd moments vanish and
/// the even ones are materialized lazily from the consecutive ratio
/// m_{2n+2}/m_{2n}. Extension of the cache is guarded for a single writer;
/// reads of materialized values are safe concurrently.
class MomentFunctional {
public:
    MomentFunctional(std::string family, std::function<Rational(int)> even_ratio);
    MomentFunctional(const MomentFunctional& other);
    MomentFunctional& operator=(const MomentFunctional& other);

    /// Ratio m_{2n+2}/m_{2n} = n + mu + 1/2 (gamma-function recursion of the
    /// weight |x|^{2 mu} e^{-x^2}).
    static MomentFunctional hermite(const Rational& mu);

    /// Ratio m_{2n+2}/m_{2n} = (n + beta + 1)/(n + alpha + beta + 2) for the
    /// weight |x|^{2 beta + 1} (1 - x^2)^alpha on (-1, 1).
    static MomentFunctional gegenbauer(const Rational& alpha, const Rational& beta);

    static MomentFunctional for_family(const FamilySpec& family);

    const std::string& family() const { return family_; }

    /// k-th moment; exact, zero for odd k.
    Rational moment(int k) const;

private:
    std::string family_;
    std::function<Rational(int)> ratio_;
    mutable std::mutex lock_;
    mutable std::vector<Rational> even_;  // even_[n] = m_{2n}
};

/// <u, f>: pairing of the functional against a polynomial, linear in f.
Rational pair(const MomentFunctional& u, const Polynomial& f);

/// <u, P_n P_m> = 0 for n != m and <u, P_n^2> = gamma_1 ... gamma_n != 0.
CheckList orthogonality_check(const MomentFunctional& u, const std::vector<Polynomial>& P,
                              const SymmetricRecurrence& rec, int N);

/// Exact determinant of a square matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
Rational determinant(std::vector<std::vector<Rational>> matrix);

/// Hankel determinant det(m_{i+j}), 0 <= i, j <= n.
Rational hankel(const MomentFunctional& u, int n);

/// Regularity (and optionally positivity) of Delta_n up to n_max, plus the
/// product structure Delta_n = Delta_{n-1} <u, P_n^2>.
CheckList hankel_check(const MomentFunctional& u, const SymmetricRecurrence& rec, int n_max,
                       bool expect_positive);

/// Pearson data (phi, psi) of a semi-classical functional: D(phi u) + psi u = 0.
struct PearsonPair {
    Polynomial phi;
    Polynomial psi;
};

/// Class s = max(deg phi - 2, deg psi - 1).
int pearson_class(const PearsonPair& pair);

/// Admissibility: deg phi - 1 != deg psi, or n lead(phi) != lead(psi) for all n.
bool pearson_admissible(const PearsonPair& pair);

struct PearsonScan {
    bool consistent = true;
    int first_fail_n = -1;
    Rational residual;
};

/// Moment-level reading of the Pearson equation:
/// <u, psi x^n - n phi x^{n-1}> = 0 for 0 <= n <= N.
PearsonScan pearson_moment_scan(const MomentFunctional& u, const PearsonPair& pair, int N);

/// Records for one candidate pair: the moment equation to horizon N, the class
/// (compared against expected_class when >= 0) and admissibility.
CheckList pearson_check(const MomentFunctional& u, const PearsonPair& pair, int N,
                        int expected_class = -1);

/// phi = x, psi = 2x^2 - (2 mu + 1); class one.
PearsonPair hermite_pearson_pair(const Rational& mu);

/// The pair as printed: psi = -(2(alpha+beta+2) x^2 + beta + 1).
PearsonPair gegenbauer_pearson_pair_printed(const Rational& alpha, const Rational& beta);

/// psi recomputed from the weight's logarithmic derivative,
/// psi = -(phi' + (2 beta + 1) phi/x - 2 alpha x phi/(1-x^2))
///     = -2(alpha+beta+2) x^2 + 2(beta+1).
PearsonPair gegenbauer_pearson_pair_derived(const Rational& alpha, const Rational& beta);

/// Two-candidate finding: the printed psi must be inconsistent with the
/// moments and the weight-derived psi consistent; the report carries the
/// per-n residual witness and the usual class/admissibility records.
CheckList gegenbauer_pearson_check(const Rational& alpha, const Rational& beta, int N);

/// General (possibly non-symmetric) moment list m_0 .. m_K used to build
/// oracle families straight from a weight's moment recursion.
class MomentTable {
public:
    explicit MomentTable(std::vector<Rational> moments);

    /// Moments of (1-x)^alpha (1+x)^beta on (-1, 1) from the recursion
    /// (n+alpha+beta+2) m_{n+1} = (beta-alpha) m_n + n m_{n-1}, m_0 = 1.
    static MomentTable jacobi(const Rational& alpha, const Rational& beta, int K);

    /// Moments of x^alpha e^{-x} on (0, inf): m_{n+1} = (n+alpha+1) m_n, m_0 = 1.
    static MomentTable laguerre(const Rational& alpha, int K);

    int max_order() const { return static_cast<int>(moments_.size()) - 1; }
    const Rational& moment(int k) const;
    Rational pair(const Polynomial& f) const;

private:
    std::vector<Rational> moments_;
};

/// Monic orthogonal polynomials of a moment table by Gram-Schmidt on the
/// monomials. Throws std::domain_error if some norm vanishes (irregular
/// functional).
std::vector<Polynomial> mops_from_moments(const MomentTable& table, int N);

/// Quadratic decompositions against moment-recursion oracles:
///   Hermite:    P_{2n}(x) = L_n(x^2),     P_{2n+1}(x) = x L*_n(x^2)
///               with monic Laguerre for alpha = mu - 1/2 and mu + 1/2;
///   Gegenbauer: P_{2n}(x) = 2^{-n} J_n(2x^2-1), P_{2n+1}(x) = 2^{-n} x J*_n(2x^2-1)
///               with monic Jacobi for (alpha, beta) and (alpha, beta+1).
CheckList quadratic_decomposition_check(const FamilySpec& family,
                                        const std::vector<Polynomial>& P, int N);

}  // namespace dunklpoly
