#include "dunklpoly/moments.hpp"

#include <algorithm>
#include <stdexcept>

namespace dunklpoly {

namespace {

std::string idx(int n) { return std::to_string(n); }

CheckRecord record(std::string name, std::string anchor, bool ok, std::string witness = {}) {
    return CheckRecord{std::move(name), std::move(anchor),
                       ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness)};
}

}  // namespace

// Fraction-free Gaussian elimination with row pivoting.
Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix is not square");
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Rational(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    const Rational det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MomentFunctional::MomentFunctional(std::string family, std::function<Rational(int)> even_ratio)
    : family_(std::move(family)), ratio_(std::move(even_ratio)), even_{Rational(1)} {}

MomentFunctional::MomentFunctional(const MomentFunctional& other)
    : family_(other.family_), ratio_(other.ratio_) {
    std::lock_guard<std::mutex> guard(other.lock_);
    even_ = other.even_;
}

MomentFunctional& MomentFunctional::operator=(const MomentFunctional& other) {
    if (this == &other) return *this;
    std::scoped_lock guard(lock_, other.lock_);
    family_ = other.family_;
    ratio_ = other.ratio_;
    even_ = other.even_;
    return *this;
}

MomentFunctional MomentFunctional::hermite(const Rational& mu) {
    return MomentFunctional("generalized-hermite", [mu](int n) {
        return Rational(n) + mu + Rational(1, 2);
    });
}

MomentFunctional MomentFunctional::gegenbauer(const Rational& alpha, const Rational& beta) {
    return MomentFunctional("generalized-gegenbauer", [alpha, beta](int n) {
        const Rational den = Rational(n) + alpha + beta + Rational(2);
        if (den.is_zero())
            throw std::domain_error("gegenbauer moments: alpha + beta = -(n+2) at n = " + idx(n));
        return (Rational(n) + beta + Rational(1)) / den;
    });
}

MomentFunctional MomentFunctional::for_family(const FamilySpec& family) {
    if (const auto* h = std::get_if<GeneralizedHermite>(&family))
        return hermite(h->mu);
    const auto& g = std::get<GeneralizedGegenbauer>(family);
    return gegenbauer(g.alpha, g.beta);
}

Rational MomentFunctional::moment(int k) const {
    if (k < 0) throw std::invalid_argument("MomentFunctional::moment: negative order");
    if (k % 2 == 1) return Rational(0);
    const std::size_t want = static_cast<std::size_t>(k / 2);
    std::lock_guard<std::mutex> guard(lock_);
    while (even_.size() <= want)
        even_.push_back(even_.back() * ratio_(static_cast<int>(even_.size()) - 1));
    return even_[want];
}

Rational pair(const MomentFunctional& u, const Polynomial& f) {
    Rational acc(0);
    for (int k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k).is_zero() || k % 2 == 1) continue;
        acc += f.coeff(k) * u.moment(k);
    }
    return acc;
}

CheckList orthogonality_check(const MomentFunctional& u, const std::vector<Polynomial>& P,
                              const SymmetricRecurrence& rec, int N) {
    if (static_cast<int>(P.size()) <= N)
        throw std::invalid_argument("orthogonality_check: P horizon too small");
    if (rec.size() < N)
        throw std::invalid_argument("orthogonality_check: gamma horizon too small");
    CheckList out;

    bool ok = true;
    std::string witness;
    for (int n = 0; n <= N && ok; ++n) {
        for (int m = 0; m < n && ok; ++m) {
            const Rational v = pair(u, P[static_cast<std::size_t>(n)] *
                                           P[static_cast<std::size_t>(m)]);
            if (!v.is_zero()) {
                ok = false;
                witness = "<u, P_" + idx(n) + " P_" + idx(m) + "> = " + v.str();
            }
        }
    }
    out.push_back(record("orthogonality", "Eq. (1.7a)", ok, witness));

    ok = true;
    witness.clear();
    Rational prod(1);
    for (int n = 0; n <= N && ok; ++n) {
        if (n >= 1) prod *= rec.gamma(n);
        const Rational norm = pair(u, P[static_cast<std::size_t>(n)] *
                                          P[static_cast<std::size_t>(n)]);
        if (norm.is_zero() || norm != prod) {
            ok = false;
            witness = "<u, P_" + idx(n) + "^2> = " + norm.str() + ", product of gammas = " +
                      prod.str();
        }
    }
    out.push_back(record("orthogonality-norms", "Eq. (1.7b)", ok, witness));
    return out;
}

Rational hankel(const MomentFunctional& u, int n) {
    if (n < 0) throw std::invalid_argument("hankel: negative order");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        m[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            m[static_cast<std::size_t>(i)].push_back(u.moment(i + j));
    }
    return determinant(std::move(m));
}

CheckList hankel_check(const MomentFunctional& u, const SymmetricRecurrence& rec, int n_max,
                       bool expect_positive) {
    CheckList out;
    std::vector<Rational> deltas;
    deltas.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) deltas.push_back(hankel(u, n));

    bool ok = true;
    std::string witness;
    for (int n = 0; n <= n_max && ok; ++n) {
        if (deltas[static_cast<std::size_t>(n)].is_zero()) {
            ok = false;
            witness = "Delta_" + idx(n) + " = 0";
        }
    }
    out.push_back(record("hankel-regularity", "Thm. 1.2", ok, witness));

    if (expect_positive) {
        ok = true;
        witness.clear();
        for (int n = 0; n <= n_max && ok; ++n) {
            if (deltas[static_cast<std::size_t>(n)].sign() <= 0) {
                ok = false;
                witness = "Delta_" + idx(n) + " = " + deltas[static_cast<std::size_t>(n)].str();
            }
        }
        out.push_back(record("hankel-positivity", "Thm. 1.2", ok, witness));
    }

    ok = true;
    witness.clear();
    Rational prod(1);  // <u, P_n^2> = gamma_1 ... gamma_n
    for (int n = 1; n <= std::min(n_max, rec.size()) && ok; ++n) {
        prod *= rec.gamma(n);
        const Rational ratio = deltas[static_cast<std::size_t>(n)] /
                               deltas[static_cast<std::size_t>(n - 1)];
        if (ratio != prod) {
            ok = false;
            witness = "Delta_" + idx(n) + "/Delta_" + idx(n - 1) + " = " + ratio.str() +
                      ", expected " + prod.str();
        }
    }
    out.push_back(record("hankel-norm-product", "Thm. 1.2", ok, witness));
    return out;
}

int pearson_class(const PearsonPair& pair) {
    if (pair.phi.is_zero() || pair.psi.degree() < 1)
        throw std::invalid_argument("pearson_class: need deg phi >= 0 and deg psi >= 1");
    return std::max(pair.phi.degree() - 2, pair.psi.degree() - 1);
}

bool pearson_admissible(const PearsonPair& pair) {
    if (pair.phi.degree() - 1 != pair.psi.degree()) return true;
    const Rational ratio = pair.psi.leading() / pair.phi.leading();
    return !(ratio.is_integer() && ratio.sign() > 0);
}

PearsonScan pearson_moment_scan(const MomentFunctional& u, const PearsonPair& pair, int N) {
    PearsonScan scan;
    for (int n = 0; n <= N; ++n) {
        Polynomial probe = pair.psi.times_x(n);
        if (n >= 1) probe -= Rational(n) * pair.phi.times_x(n - 1);
        const Rational v = dunklpoly::pair(u, probe);
        if (!v.is_zero()) {
            scan.consistent = false;
            scan.first_fail_n = n;
            scan.residual = v;
            return scan;
        }
    }
    return scan;
}

CheckList pearson_check(const MomentFunctional& u, const PearsonPair& pair, int N,
                        int expected_class) {
    CheckList out;
    const PearsonScan scan = pearson_moment_scan(u, pair, N);
    out.push_back(record("pearson-moment-equation", "Eq. (1.9)", scan.consistent,
                         scan.consistent ? std::string()
                                         : "residual at n = " + idx(scan.first_fail_n) + ": " +
                                               scan.residual.str()));
    const int s = pearson_class(pair);
    const bool class_ok = expected_class < 0 || s == expected_class;
    out.push_back(record("pearson-class", "Eq. (1.10)", class_ok, "s = " + idx(s)));
    out.push_back(record("pearson-admissibility", "Sec. 1", pearson_admissible(pair)));
    return out;
}

PearsonPair hermite_pearson_pair(const Rational& mu) {
    return PearsonPair{
        Polynomial::variable(),
        Polynomial(std::vector<Rational>{-(Rational(2) * mu + Rational(1)), Rational(0),
                                         Rational(2)})};
}

PearsonPair gegenbauer_pearson_pair_printed(const Rational& alpha, const Rational& beta) {
    const Polynomial phi(
        std::vector<Rational>{Rational(0), Rational(-1), Rational(0), Rational(1)});
    const Polynomial psi(std::vector<Rational>{
        -(beta + Rational(1)), Rational(0), Rational(-2) * (alpha + beta + Rational(2))});
    return PearsonPair{phi, psi};
}

PearsonPair gegenbauer_pearson_pair_derived(const Rational& alpha, const Rational& beta) {
    const Polynomial phi(
        std::vector<Rational>{Rational(0), Rational(-1), Rational(0), Rational(1)});
    // psi = -(phi' + (2 beta + 1) phi/x - 2 alpha x phi/(1-x^2)); both divisions
    // are exact for this phi.
    const Polynomial phi_over_x = divide_exact(phi, Polynomial::variable());
    const Polynomial one_minus_x2(
        std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
    const Polynomial phi_over_w = divide_exact(phi, one_minus_x2);
    const Polynomial psi = -(derivative(phi) +
                             (Rational(2) * beta + Rational(1)) * phi_over_x -
                             (Rational(2) * alpha) * phi_over_w.times_x());
    return PearsonPair{phi, psi};
}

CheckList gegenbauer_pearson_check(const Rational& alpha, const Rational& beta, int N) {
    const MomentFunctional u = MomentFunctional::gegenbauer(alpha, beta);
    CheckList out;

    const PearsonPair printed = gegenbauer_pearson_pair_printed(alpha, beta);
    const PearsonScan printed_scan = pearson_moment_scan(u, printed, N);
    if (!printed_scan.consistent) {
        out.push_back(record(
            "pearson-printed-psi", "Sec. 3, case B", true,
            "printed psi inconsistent with the moment ratios: residual at n = " +
                idx(printed_scan.first_fail_n) + " is " + printed_scan.residual.str() +
                "; weight-derived psi = " +
                gegenbauer_pearson_pair_derived(alpha, beta).psi.str() + " is consistent"));
    } else {
        out.push_back(record("pearson-printed-psi", "Sec. 3, case B", false,
                             "printed psi unexpectedly consistent with the moments"));
    }

    CheckList derived = pearson_check(u, gegenbauer_pearson_pair_derived(alpha, beta), N, 1);
    out.insert(out.end(), derived.begin(), derived.end());
    return out;
}

MomentTable::MomentTable(std::vector<Rational> moments) : moments_(std::move(moments)) {
    if (moments_.empty())
        throw std::invalid_argument("MomentTable: empty moment list");
}

MomentTable MomentTable::jacobi(const Rational& alpha, const Rational& beta, int K) {
    std::vector<Rational> m{Rational(1)};
    m.reserve(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n < K; ++n) {
        const Rational den = Rational(n) + alpha + beta + Rational(2);
        if (den.is_zero())
            throw std::domain_error("jacobi moments: alpha + beta = -(n+2) at n = " + idx(n));
        const Rational prev = (n >= 1) ? m[static_cast<std::size_t>(n - 1)] : Rational(0);
        m.push_back(((beta - alpha) * m.back() + Rational(n) * prev) / den);
    }
    return MomentTable(std::move(m));
}

MomentTable MomentTable::laguerre(const Rational& alpha, int K) {
    std::vector<Rational> m{Rational(1)};
    m.reserve(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n < K; ++n)
        m.push_back(m.back() * (Rational(n) + alpha + Rational(1)));
    return MomentTable(std::move(m));
}

const Rational& MomentTable::moment(int k) const {
    if (k < 0 || k > max_order())
        throw std::invalid_argument("MomentTable::moment: order out of range");
    return moments_[static_cast<std::size_t>(k)];
}

Rational MomentTable::pair(const Polynomial& f) const {
    if (f.degree() > max_order())
        throw std::invalid_argument("MomentTable::pair: moments not available to deg f");
    Rational acc(0);
    for (int k = 0; k <= f.degree(); ++k)
        if (!f.coeff(k).is_zero()) acc += f.coeff(k) * moment(k);
    return acc;
}

std::vector<Polynomial> mops_from_moments(const MomentTable& table, int N) {
    if (2 * N > table.max_order())
        throw std::invalid_argument("mops_from_moments: need moments to order 2N");
    std::vector<Polynomial> P;
    std::vector<Rational> norms;
    P.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Polynomial p = Polynomial::monomial(n);
        for (int k = 0; k < n; ++k) {
            const Rational coef =
                table.pair(P[static_cast<std::size_t>(k)].times_x(n)) /
                norms[static_cast<std::size_t>(k)];
            p -= coef * P[static_cast<std::size_t>(k)];
        }
        const Rational norm = table.pair(p * p);
        if (norm.is_zero())
            throw std::domain_error("mops_from_moments: <P_" + idx(n) +
                                    "^2> = 0, functional not regular");
        norms.push_back(norm);
        P.push_back(std::move(p));
    }
    return P;
}

CheckList quadratic_decomposition_check(const FamilySpec& family,
                                        const std::vector<Polynomial>& P, int N) {
    if (static_cast<int>(P.size()) <= 2 * N + 1)
        throw std::invalid_argument("quadratic_decomposition_check: P horizon too small");
    CheckList out;
    const Polynomial x2 = Polynomial::monomial(2);

    if (const auto* h = std::get_if<GeneralizedHermite>(&family)) {
        const Rational a = h->mu - Rational(1, 2);
        const auto even_oracle = mops_from_moments(MomentTable::laguerre(a, 2 * N + 2), N);
        const auto odd_oracle =
            mops_from_moments(MomentTable::laguerre(a + Rational(1), 2 * N + 2), N);
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= N && ok; ++n) {
            if (P[static_cast<std::size_t>(2 * n)] !=
                compose(even_oracle[static_cast<std::size_t>(n)], x2)) {
                ok = false;
                witness = "even part differs at n = " + idx(n);
            } else if (P[static_cast<std::size_t>(2 * n + 1)] !=
                       compose(odd_oracle[static_cast<std::size_t>(n)], x2).times_x()) {
                ok = false;
                witness = "odd part differs at n = " + idx(n);
            }
        }
        out.push_back(record("qdecomp-hermite-laguerre", "Sec. 3, case A", ok, witness));
        return out;
    }

    const auto& g = std::get<GeneralizedGegenbauer>(family);
    const auto even_oracle =
        mops_from_moments(MomentTable::jacobi(g.alpha, g.beta, 2 * N + 2), N);
    const auto odd_oracle =
        mops_from_moments(MomentTable::jacobi(g.alpha, g.beta + Rational(1), 2 * N + 2), N);
    const Polynomial two_x2_minus_1(
        std::vector<Rational>{Rational(-1), Rational(0), Rational(2)});
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= N && ok; ++n) {
        const Rational scale = pow(Rational(2), -n);
        if (P[static_cast<std::size_t>(2 * n)] !=
            scale * compose(even_oracle[static_cast<std::size_t>(n)], two_x2_minus_1)) {
            ok = false;
            witness = "even part differs at n = " + idx(n);
        } else if (P[static_cast<std::size_t>(2 * n + 1)] !=
                   scale * compose(odd_oracle[static_cast<std::size_t>(n)], two_x2_minus_1)
                               .times_x()) {
            ok = false;
            witness = "odd part differs at n = " + idx(n);
        }
    }
    out.push_back(record("qdecomp-gegenbauer-jacobi", "Eq. (3.9)", ok, witness));
    return out;
}

}  // namespace dunklpoly
