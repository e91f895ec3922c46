#include "dunklpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace dunklpoly {

namespace {

std::string idx(int n) { return std::to_string(n); }

const std::vector<std::string> kChecks = {
    "riccati", "theorem21", "dde",   "pearson", "orthogonality",
    "appell",  "shift",     "structure", "qdecomp", "hankel"};

struct FamilyData {
    FamilySpec family;
    int N;
    DunklContext ctx;
    SymmetricRecurrence gammas;       // gamma_1 .. gamma_{N+3}
    std::vector<Polynomial> P;        // P_0 .. P_{N+1}
    std::vector<Polynomial> Q;        // Q_0 .. Q_N
};

FamilyData make_family_data(const FamilySpec& family, int N) {
    validate_family(family, N + 6);
    DunklContext ctx(family_mu(family), N + 6);
    SymmetricRecurrence gammas = family_gammas(family, N + 3);
    std::vector<Polynomial> P = generate_mops(gammas, N + 1);
    std::vector<Polynomial> Q = q_sequence(P, ctx);
    return FamilyData{family, N, std::move(ctx), std::move(gammas), std::move(P), std::move(Q)};
}

CheckRecord make_record(std::string name, std::string anchor, bool ok,
                        std::string witness = {}) {
    return CheckRecord{std::move(name), std::move(anchor),
                       ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness)};
}

CheckList run_riccati(const FamilyData& d) {
    const ThetaSequence theta = family_theta(d.family);
    const bool ok = riccati_check(theta, d.N);
    return {make_record("riccati", "Eq. (2.2)", ok,
                        ok ? std::string() : "Riccati relation violated below N")};
}

CheckList run_theorem21(const FamilyData& d) {
    CheckList out;
    const ThetaSequence theta = family_theta(d.family);

    const auto detection = detect_three_term(d.Q);
    if (!detection.ok()) {
        const auto& v = *detection.violation;
        out.push_back(make_record("theorem21-detect", "Thm. 2.1", false,
                                  "x Q_" + idx(v.n) + " has coefficient " + v.value.str() +
                                      " at nu = " + idx(v.nu)));
        return out;
    }
    out.push_back(make_record("theorem21-detect", "Thm. 2.1", true));

    const SymmetricRecurrence& detected = *detection.recurrence;
    const SymmetricRecurrence tilde = gamma_tilde(theta, d.gammas, d.ctx);
    bool ok = true;
    std::string witness;
    for (int n = 1; n <= detected.size() && ok; ++n) {
        if (detected.gamma(n) != tilde.gamma(n)) {
            ok = false;
            witness = "n = " + idx(n) + ": detected " + detected.gamma(n).str() +
                      " vs map " + tilde.gamma(n).str();
        }
    }
    out.push_back(make_record("theorem21-gamma-tilde", "Eq. (2.3)", ok, witness));

    ok = true;
    witness.clear();
    const bool hermite = std::holds_alternative<GeneralizedHermite>(d.family);
    for (int n = 1; n <= detected.size() && ok; ++n) {
        const Rational closed = family_gamma_tilde(d.family, n);
        if (detected.gamma(n) != closed) {
            ok = false;
            witness = "n = " + idx(n) + ": detected " + detected.gamma(n).str() +
                      " vs closed form " + closed.str();
        }
    }
    out.push_back(make_record("theorem21-closed-form",
                              hermite ? "Eq. (3.1)" : "Eq. (3.10)", ok, witness));

    ok = true;
    witness.clear();
    const SymmetricRecurrence propagated =
        gamma_from_theta(theta, family_default_gamma1(d.family), d.ctx, d.gammas.size());
    for (int n = 1; n <= d.gammas.size() && ok; ++n) {
        if (propagated.gamma(n) != d.gammas.gamma(n)) {
            ok = false;
            witness = "n = " + idx(n) + ": propagated " + propagated.gamma(n).str() +
                      " vs closed form " + d.gammas.gamma(n).str();
        }
    }
    out.push_back(make_record("theorem21-propagation", "Eq. (2.1)", ok, witness));

    ok = true;
    witness.clear();
    for (int n = 0; n + 1 <= d.N && ok; ++n) {
        if (!key_identity_check(d.P, d.Q, d.gammas, d.ctx, n)) {
            ok = false;
            witness = "violated at n = " + idx(n);
        }
    }
    out.push_back(make_record("theorem21-key-identity", "Eq. (1.16)", ok, witness));
    return out;
}

CheckList run_dde(const FamilyData& d) {
    const ThetaSequence theta = family_theta(d.family);
    CheckList out = general_dde_check(theta, d.gammas, d.P, d.ctx, d.N);
    if (std::holds_alternative<GeneralizedHermite>(d.family)) {
        CheckList extra = hermite_dde_check(d.P, d.ctx, d.N);
        out.insert(out.end(), extra.begin(), extra.end());
    } else {
        const auto& g = std::get<GeneralizedGegenbauer>(d.family);
        CheckList extra = gegenbauer_dde_check(d.P, g.alpha, g.beta, d.N);
        out.insert(out.end(), extra.begin(), extra.end());
    }
    return out;
}

CheckList run_pearson(const FamilyData& d) {
    if (const auto* h = std::get_if<GeneralizedHermite>(&d.family)) {
        const MomentFunctional u = MomentFunctional::hermite(h->mu);
        return pearson_check(u, hermite_pearson_pair(h->mu), d.N, 1);
    }
    const auto& g = std::get<GeneralizedGegenbauer>(d.family);
    return gegenbauer_pearson_check(g.alpha, g.beta, d.N);
}

CheckList run_orthogonality(const FamilyData& d) {
    const MomentFunctional u = MomentFunctional::for_family(d.family);
    return orthogonality_check(u, d.P, d.gammas, d.N);
}

CheckList run_appell(const FamilyData& d) {
    bool ok = true;
    std::string witness;
    for (int n = 0; n + 1 <= d.N && ok; ++n) {
        const Polynomial lhs = dunkl(d.P[static_cast<std::size_t>(n + 1)], d.ctx);
        if (lhs != d.ctx.mu_n(n + 1) * d.P[static_cast<std::size_t>(n)]) {
            ok = false;
            witness = "T_mu P_" + idx(n + 1) + " != mu_" + idx(n + 1) + " P_" + idx(n);
        }
    }
    return {make_record("appell", "Sec. 3, case A", ok, witness)};
}

CheckList run_shift(const FamilyData& d) {
    const auto& g = std::get<GeneralizedGegenbauer>(d.family);
    const FamilySpec raised = GeneralizedGegenbauer{g.alpha + Rational(1), g.beta};
    validate_family(raised, d.N + 3);
    const auto P_raised = generate_mops(family_gammas(raised, d.N + 1), d.N);
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= d.N && ok; ++n) {
        if (d.Q[static_cast<std::size_t>(n)] != P_raised[static_cast<std::size_t>(n)]) {
            ok = false;
            witness = "Q_" + idx(n) + "(alpha, beta) != P_" + idx(n) + "(alpha+1, beta)";
        }
    }
    return {make_record("shift", "Eq. (3.12)", ok, witness)};
}

CheckList run_structure(const FamilyData& d) {
    return structure_relation_check(d.family, d.P, d.N);
}

CheckList run_qdecomp(const FamilyData& d) {
    return quadratic_decomposition_check(d.family, d.P, d.N / 2);
}

CheckList run_hankel(const FamilyData& d) {
    const MomentFunctional u = MomentFunctional::for_family(d.family);
    bool positive = false;
    if (const auto* h = std::get_if<GeneralizedHermite>(&d.family)) {
        positive = h->mu > Rational(-1, 2);
    } else {
        const auto& g = std::get<GeneralizedGegenbauer>(d.family);
        positive = g.alpha > Rational(-1) && g.beta > Rational(-1);
    }
    return hankel_check(u, d.gammas, std::min(d.N, 15), positive);
}

CheckList run_check(const std::string& name, const FamilyData& d) {
    try {
        if (name == "riccati") return run_riccati(d);
        if (name == "theorem21") return run_theorem21(d);
        if (name == "dde") return run_dde(d);
        if (name == "pearson") return run_pearson(d);
        if (name == "orthogonality") return run_orthogonality(d);
        if (name == "appell") return run_appell(d);
        if (name == "shift") return run_shift(d);
        if (name == "structure") return run_structure(d);
        if (name == "qdecomp") return run_qdecomp(d);
        if (name == "hankel") return run_hankel(d);
    } catch (const std::exception& e) {
        return {make_record(name, "-", false, std::string("check aborted: ") + e.what())};
    }
    throw std::invalid_argument("unknown check name: " + name);
}

std::vector<std::string> expand_checks(const std::vector<std::string>& requested,
                                       const FamilySpec* family) {
    std::vector<std::string> names;
    for (const auto& r : requested) {
        if (r == "all") {
            for (const auto& k : kChecks)
                if (!family || check_applicable(k, *family)) names.push_back(k);
            continue;
        }
        if (std::find(kChecks.begin(), kChecks.end(), r) == kChecks.end())
            throw std::invalid_argument("unknown check name: " + r);
        names.push_back(r);
    }
    return names;
}

}  // namespace

const std::vector<std::string>& known_checks() { return kChecks; }

bool check_applicable(const std::string& name, const FamilySpec& family) {
    if (name == "appell") return std::holds_alternative<GeneralizedHermite>(family);
    if (name == "shift") return std::holds_alternative<GeneralizedGegenbauer>(family);
    return true;
}

VerificationReport verify_family(const FamilySpec& family, int N,
                                 const std::vector<std::string>& checks) {
    if (N < 4) throw std::invalid_argument("verify_family: horizon must be at least 4");
    const auto started = std::chrono::steady_clock::now();

    VerificationReport report;
    report.family = family_name(family);
    if (const auto* h = std::get_if<GeneralizedHermite>(&family)) {
        report.params.emplace_back("mu", h->mu.str());
    } else {
        const auto& g = std::get<GeneralizedGegenbauer>(family);
        report.params.emplace_back("alpha", g.alpha.str());
        report.params.emplace_back("beta", g.beta.str());
    }
    report.horizon = N;

    const FamilyData data = make_family_data(family, N);
    for (const auto& name : expand_checks(checks, &family)) {
        if (!check_applicable(name, family)) {
            report.checks.push_back(CheckRecord{name, "-", CheckStatus::skip,
                                                "not applicable to " + family_name(family)});
            continue;
        }
        CheckList records = run_check(name, data);
        report.checks.insert(report.checks.end(), records.begin(), records.end());
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

VerificationReport verify_custom(const Rational& mu, const SymmetricRecurrence& gammas, int N,
                                 const std::vector<std::string>& checks) {
    if (N < 4) throw std::invalid_argument("verify_custom: horizon must be at least 4");
    if (gammas.size() < N)
        throw std::invalid_argument("verify_custom: need gamma_1..gamma_N");
    const auto started = std::chrono::steady_clock::now();

    VerificationReport report;
    report.family = "custom-symmetric";
    report.params.emplace_back("mu", mu.str());
    report.horizon = N;

    std::vector<std::string> names = expand_checks(checks, nullptr);
    const DunklContext ctx(mu, N + 2);
    const auto P = generate_mops(gammas, N);
    const auto Q = q_sequence(P, ctx);

    for (const auto& name : names) {
        if (name != "theorem21") {
            report.checks.push_back(
                CheckRecord{name, "-", CheckStatus::skip,
                            "only theorem21 applies to a custom recurrence"});
            continue;
        }
        const auto detection = detect_three_term(Q);
        if (detection.ok()) {
            report.checks.push_back(make_record("theorem21-detect", "Thm. 2.1", true,
                                                "Q satisfies a symmetric three-term recurrence"));
        } else {
            const auto& v = *detection.violation;
            report.checks.push_back(make_record("theorem21-detect", "Thm. 2.1", false,
                                                "x Q_" + idx(v.n) + " has coefficient " +
                                                    v.value.str() + " at nu = " + idx(v.nu)));
        }
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

}  // namespace dunklpoly
