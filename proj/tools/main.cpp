// Command line front end: coefficient tables, moment tables, Theorem-2.1
// construction and the identity verification suites. All values are exact
// rationals serialized as "p/q"; outputs are deterministic byte for byte.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters/guards.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dunklpoly/moments.hpp"
#include "dunklpoly/verify.hpp"

namespace {

using dunklpoly::FamilySpec;
using dunklpoly::Polynomial;
using dunklpoly::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidParameters = 2;

struct CommonOptions {
    std::string family;
    std::string mu;
    std::string alpha;
    std::string beta;
    std::string out;
    std::string format = "csv";
    int n = 0;
};

void add_family_options(CLI::App* cmd, CommonOptions* opts) {
    cmd->add_option("--family", opts->family, "hermite or gegenbauer")->required();
    cmd->add_option("--mu", opts->mu, "Dunkl parameter (rational, e.g. 1/2)");
    cmd->add_option("--alpha", opts->alpha, "Gegenbauer alpha (rational)");
    cmd->add_option("--beta", opts->beta, "Gegenbauer beta (rational)");
}

FamilySpec parse_family(const CommonOptions& opts) {
    if (opts.family == "hermite") {
        if (opts.mu.empty())
            throw std::invalid_argument("--family hermite requires --mu");
        return dunklpoly::GeneralizedHermite{Rational::parse(opts.mu)};
    }
    if (opts.family == "gegenbauer") {
        if (opts.alpha.empty() || opts.beta.empty())
            throw std::invalid_argument("--family gegenbauer requires --alpha and --beta");
        return dunklpoly::GeneralizedGegenbauer{Rational::parse(opts.alpha),
                                                Rational::parse(opts.beta)};
    }
    throw std::invalid_argument("unknown family: " + opts.family);
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("unknown format: " + format);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output file: " + path);
    file << payload;
}

std::string coeffs_to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) out += ' ';
        out += p.coeff(k).str();
    }
    return out;
}

json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
    json j = json::object();
    for (const auto& [key, value] : params) j[key] = value;
    return j;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_gen(const CommonOptions& opts, const std::string& gamma1_text) {
    check_format(opts.format);
    if (opts.n < 1) throw std::invalid_argument("--n must be at least 1");
    const FamilySpec family = parse_family(opts);
    dunklpoly::validate_family(family, opts.n + 3);
    const dunklpoly::DunklContext ctx(dunklpoly::family_mu(family), opts.n + 3);

    dunklpoly::SymmetricRecurrence gammas;
    if (gamma1_text.empty()) {
        gammas = dunklpoly::family_gammas(family, opts.n + 1);
    } else {
        // Custom normalization: propagate gamma_1 through the family's theta.
        gammas = dunklpoly::gamma_from_theta(dunklpoly::family_theta(family),
                                             Rational::parse(gamma1_text), ctx, opts.n + 1);
    }
    const auto tilde = dunklpoly::gamma_tilde(dunklpoly::family_theta(family), gammas, ctx);
    const auto P = dunklpoly::generate_mops(gammas, opts.n);
    const dunklpoly::MomentFunctional u = dunklpoly::MomentFunctional::for_family(family);

    std::vector<std::pair<std::string, std::string>> params;
    if (const auto* h = std::get_if<dunklpoly::GeneralizedHermite>(&family)) {
        params.emplace_back("mu", h->mu.str());
    } else {
        const auto& g = std::get<dunklpoly::GeneralizedGegenbauer>(family);
        params.emplace_back("alpha", g.alpha.str());
        params.emplace_back("beta", g.beta.str());
    }
    if (!gamma1_text.empty())
        params.emplace_back("gamma1", Rational::parse(gamma1_text).str());

    std::string payload;
    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "n,gamma,gamma_tilde,moment,p_coeffs\n";
        for (int n = 0; n <= opts.n; ++n) {
            csv << n << ',';
            if (n >= 1) csv << gammas.gamma(n).str();
            csv << ',';
            if (n >= 1) csv << tilde.gamma(n).str();
            csv << ',' << u.moment(n).str() << ','
                << coeffs_to_string(P[static_cast<std::size_t>(n)]) << '\n';
        }
        payload = csv.str();
    } else {
        json j;
        j["family"] = dunklpoly::family_name(family);
        j["params"] = params_json(params);
        j["horizon"] = opts.n;
        json rows = json::array();
        for (int n = 0; n <= opts.n; ++n) {
            json row;
            row["n"] = n;
            if (n >= 1) {
                row["gamma"] = gammas.gamma(n).str();
                row["gamma_tilde"] = tilde.gamma(n).str();
            }
            row["moment"] = u.moment(n).str();
            json coeffs = json::array();
            for (int k = 0; k <= P[static_cast<std::size_t>(n)].degree(); ++k)
                coeffs.push_back(P[static_cast<std::size_t>(n)].coeff(k).str());
            row["coeffs"] = coeffs;
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["version"] = "0.1.0";
        payload = j.dump(2) + "\n";
    }
    write_output(opts.out, payload);
    return 0;
}

int run_moments(const CommonOptions& opts) {
    check_format(opts.format);
    if (opts.n < 0) throw std::invalid_argument("--n must be nonnegative");
    const FamilySpec family = parse_family(opts);
    dunklpoly::validate_family(family, opts.n / 2 + 2);
    const dunklpoly::MomentFunctional u = dunklpoly::MomentFunctional::for_family(family);

    std::string payload;
    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "k,moment\n";
        for (int k = 0; k <= opts.n; ++k) csv << k << ',' << u.moment(k).str() << '\n';
        payload = csv.str();
    } else {
        json j;
        j["family"] = dunklpoly::family_name(family);
        json moments = json::array();
        for (int k = 0; k <= opts.n; ++k) moments.push_back(u.moment(k).str());
        j["order"] = opts.n;
        j["moments"] = moments;
        j["version"] = "0.1.0";
        payload = j.dump(2) + "\n";
    }
    write_output(opts.out, payload);
    return 0;
}

int run_construct(const std::string& riccati_case, const std::string& mu_text,
                  const std::string& theta_text, const std::string& gamma1_text,
                  const CommonOptions& opts) {
    check_format(opts.format);
    if (opts.n < 1) throw std::invalid_argument("--n must be at least 1");
    if (mu_text.empty()) throw std::invalid_argument("construct requires --mu");
    const Rational mu = Rational::parse(mu_text);
    const dunklpoly::DunklContext ctx(mu, opts.n + 3);

    std::optional<dunklpoly::AlphaBetaPair> read_back;
    dunklpoly::ThetaSequence theta = dunklpoly::ThetaSequence::trivial(mu);
    Rational gamma1 = ctx.mu_n(1) / Rational(2);
    if (riccati_case == "A") {
        if (!theta_text.empty())
            throw std::invalid_argument("case A has no --theta parameter");
    } else if (riccati_case == "B") {
        if (theta_text.empty())
            throw std::invalid_argument("case B requires --theta");
        const Rational theta_param = Rational::parse(theta_text);
        theta = dunklpoly::ThetaSequence::with_parameter(mu, theta_param);
        read_back = dunklpoly::param_map_inverse(theta_param, mu);
        const Rational den = read_back->alpha + read_back->beta + Rational(2);
        if (den.is_zero())
            throw std::domain_error("excluded parameters: alpha + beta = -2");
        gamma1 = (read_back->beta + Rational(1)) / den;
    } else {
        throw std::invalid_argument("--case must be A or B");
    }
    if (!gamma1_text.empty()) gamma1 = Rational::parse(gamma1_text);

    const auto gammas = dunklpoly::gamma_from_theta(theta, gamma1, ctx, opts.n + 1);
    const auto tilde = dunklpoly::gamma_tilde(theta, gammas, ctx);

    std::string payload;
    if (opts.format == "csv") {
        std::ostringstream csv;
        if (read_back) {
            csv << "# alpha = " << read_back->alpha.str() << '\n';
            csv << "# beta = " << read_back->beta.str() << '\n';
        }
        csv << "n,theta,gamma,gamma_tilde\n";
        for (int n = 1; n <= opts.n; ++n) {
            csv << n << ',' << theta.value(n).str() << ',' << gammas.gamma(n).str() << ','
                << tilde.gamma(n).str() << '\n';
        }
        payload = csv.str();
    } else {
        json j;
        j["case"] = riccati_case;
        json params = json::object();
        params["mu"] = mu.str();
        if (riccati_case == "B") params["theta"] = Rational::parse(theta_text).str();
        params["gamma1"] = gamma1.str();
        if (read_back) {
            params["alpha"] = read_back->alpha.str();
            params["beta"] = read_back->beta.str();
        }
        j["params"] = params;
        j["horizon"] = opts.n;
        json rows = json::array();
        for (int n = 1; n <= opts.n; ++n) {
            json row;
            row["n"] = n;
            row["theta"] = theta.value(n).str();
            row["gamma"] = gammas.gamma(n).str();
            row["gamma_tilde"] = tilde.gamma(n).str();
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["version"] = "0.1.0";
        payload = j.dump(2) + "\n";
    }
    write_output(opts.out, payload);
    return 0;
}

int run_verify(const CommonOptions& opts, const std::string& checks_text,
               const std::string& gammas_text, const std::string& gamma_const_text) {
    if (opts.n < 4) throw std::invalid_argument("--n must be at least 4");
    const std::vector<std::string> checks = split_list(checks_text);
    if (checks.empty()) throw std::invalid_argument("--checks must not be empty");

    dunklpoly::VerificationReport report;
    if (opts.family == "custom") {
        if (opts.mu.empty())
            throw std::invalid_argument("--family custom requires --mu");
        std::vector<Rational> gammas;
        if (!gamma_const_text.empty()) {
            gammas.assign(static_cast<std::size_t>(opts.n),
                          Rational::parse(gamma_const_text));
        } else if (!gammas_text.empty()) {
            for (const auto& item : split_list(gammas_text))
                gammas.push_back(Rational::parse(item));
            if (static_cast<int>(gammas.size()) < opts.n)
                throw std::invalid_argument("--gammas must list at least n values");
        } else {
            throw std::invalid_argument("--family custom requires --gammas or --gamma-const");
        }
        report = dunklpoly::verify_custom(Rational::parse(opts.mu),
                                          dunklpoly::SymmetricRecurrence(std::move(gammas)),
                                          opts.n, checks);
    } else {
        report = dunklpoly::verify_family(parse_family(opts), opts.n, checks);
    }

    write_output(opts.out, dunklpoly::report_to_json(report));
    std::cerr << "# elapsed_ms: " << report.elapsed_ms << "\n";
    return report.all_passed() ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables and machine verification for the symmetric Dunkl-classical "
                 "orthogonal polynomial families"};
    app.require_subcommand(1);

    CommonOptions gen_opts;
    std::string gen_gamma1;
    CLI::App* gen = app.add_subcommand("gen", "Emit gamma/gamma~/moment/polynomial tables");
    add_family_options(gen, &gen_opts);
    gen->add_option("--n", gen_opts.n, "horizon")->required();
    gen->add_option("--gamma1", gen_gamma1, "override the gamma_1 normalization");
    gen->add_option("--out", gen_opts.out, "output file (default stdout)");
    gen->add_option("--format", gen_opts.format, "csv or json");

    CommonOptions moments_opts;
    CLI::App* moments = app.add_subcommand("moments", "Emit the moment table m_0..m_n");
    add_family_options(moments, &moments_opts);
    moments->add_option("--n", moments_opts.n, "highest moment order")->required();
    moments->add_option("--out", moments_opts.out, "output file (default stdout)");
    moments->add_option("--format", moments_opts.format, "csv or json");

    CommonOptions construct_opts;
    std::string construct_case, construct_mu, construct_theta, construct_gamma1;
    CLI::App* construct =
        app.add_subcommand("construct", "Solve the coefficient system for a Riccati solution");
    construct->add_option("--case", construct_case, "A or B")->required();
    construct->add_option("--mu", construct_mu, "Dunkl parameter (rational)")->required();
    construct->add_option("--theta", construct_theta, "case-B free parameter (rational)");
    construct->add_option("--gamma1", construct_gamma1, "gamma_1 normalization override");
    construct->add_option("--n", construct_opts.n, "horizon")->required();
    construct->add_option("--out", construct_opts.out, "output file (default stdout)");
    construct->add_option("--format", construct_opts.format, "csv or json");

    CommonOptions verify_opts;
    verify_opts.n = 25;
    std::string verify_checks = "all";
    std::string verify_gammas, verify_gamma_const;
    CLI::App* verify = app.add_subcommand("verify", "Run identity check suites, emit JSON report");
    verify->add_option("--family", verify_opts.family, "hermite, gegenbauer or custom")
        ->required();
    verify->add_option("--mu", verify_opts.mu, "Dunkl parameter (rational)");
    verify->add_option("--alpha", verify_opts.alpha, "Gegenbauer alpha");
    verify->add_option("--beta", verify_opts.beta, "Gegenbauer beta");
    verify->add_option("--n", verify_opts.n, "horizon (default 25)");
    verify->add_option("--checks", verify_checks,
                       "comma separated check names, or \"all\" (default)");
    verify->add_option("--gammas", verify_gammas, "custom family: comma separated gamma list");
    verify->add_option("--gamma-const", verify_gamma_const,
                       "custom family: constant gamma value");
    verify->add_option("--out", verify_opts.out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidParameters;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opts, gen_gamma1);
        if (moments->parsed()) return run_moments(moments_opts);
        if (construct->parsed())
            return run_construct(construct_case, construct_mu, construct_theta,
                                 construct_gamma1, construct_opts);
        if (verify->parsed())
            return run_verify(verify_opts, verify_checks, verify_gammas, verify_gamma_const);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParameters;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParameters;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalidParameters;
    }
    return 0;
}
