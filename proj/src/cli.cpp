#include "gueindex/cli.hpp"

#include "gueindex/identity_checks.hpp"
#include "gueindex/sampler.hpp"
#include "gueindex/variance.hpp"
#include "gueindex/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace gueindex {

namespace {

using json = nlohmann::ordered_json;

struct OutputConfig {
    std::string format = "text"; // text | json | csv
    unsigned digits = 64;
    std::string out_path;
};

int write_output(const OutputConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream os(cfg.out_path);
    if (!os) {
        std::cerr << "error: cannot open output file " << cfg.out_path << "\n";
        return 2;
    }
    os << payload;
    return 0;
}

// "a + b/pi" with reduced fractions, e.g. "1/2 - 1/π" or "1 - 29/(12π)".
std::string format_exact(const VarianceValue& v) {
    std::ostringstream os;
    os << v.rat;
    if (v.inv_pi != Rational(0)) {
        Rational a = abs(v.inv_pi);
        os << (v.inv_pi < 0 ? " - " : " + ");
        if (denominator(a) == 1) {
            if (numerator(a) == 1) os << "1/π";
            else os << numerator(a) << "/π";
        } else {
            os << numerator(a) << "/(" << denominator(a) << "π)";
        }
    }
    return os.str();
}

std::string decimal_of(const VarianceValue& v, const PrecisionContext& ctx) {
    return decimal_string(to_real(v, ctx), ctx.working_digits);
}

struct MethodOutput {
    std::string method;
    bool exact = false;
    VarianceValue value;  // when exact
    std::string decimal;
};

std::vector<MethodOutput> run_variance(long n, const std::string& method,
                                       const PrecisionContext& ctx) {
    std::vector<MethodOutput> rows;
    auto add_exact = [&](const std::string& name, const VarianceValue& v) {
        rows.push_back({name, true, v, decimal_of(v, ctx)});
    };
    bool all = method == "all";
    if (all || method == "sum") add_exact("sum", delta_sum(n));
    if (all || method == "voisum") add_exact("voisum", delta_voisum(n));
    if (all || method == "tau") {
        if (n > 24 && !all)
            throw std::domain_error("tau route is limited to n <= 24 (Hankel feasibility)");
        if (n <= 24) {
            TauSequence seq = build_tau(static_cast<int>(n));
            add_exact("tau", delta_from_distribution(seq, static_cast<int>(n)));
        }
    }
    if (all || method == "recurrence") {
        if (n >= 5) {
            auto table = delta_recurrence_table(n);
            add_exact("recurrence", table[static_cast<std::size_t>(n)]);
        } else {
            add_exact("recurrence", delta_sum(n)); // chain seeds cover n <= 4
        }
    }
    if (all || method == "closed") {
        if (n >= 2) {
            Real v = delta_closed_form(n, ctx);
            rows.push_back({"closed", false, {}, decimal_string(v, ctx.working_digits)});
        } else if (!all) {
            throw std::domain_error("closed route needs n >= 2");
        }
    }
    if (all || method == "asymptotic") {
        if (n >= 6) {
            Real v = delta_asymptotic(n, ctx);
            rows.push_back({"asymptotic", false, {}, decimal_string(v, ctx.working_digits)});
        } else if (!all) {
            throw std::domain_error("asymptotic route needs n >= 6");
        }
    }
    if (rows.empty()) throw std::domain_error("unknown method: " + method);
    return rows;
}

int cmd_variance(long n, const std::string& method, const OutputConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    auto rows = run_variance(n, method, ctx);
    std::ostringstream os;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json o;
            o["n"] = n;
            o["rat"] = r.exact ? to_string(r.value.rat) : nullptr;
            o["inv_pi"] = r.exact ? to_string(r.value.inv_pi) : nullptr;
            o["decimal"] = r.decimal;
            o["method"] = r.method;
            arr.push_back(std::move(o));
        }
        os << arr.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "n,a,b,decimal,method\n";
        for (const auto& r : rows)
            os << n << "," << (r.exact ? to_string(r.value.rat) : "") << ","
               << (r.exact ? to_string(r.value.inv_pi) : "") << "," << r.decimal << ","
               << r.method << "\n";
    } else {
        for (const auto& r : rows) {
            os << "Δ_" << n << " [" << r.method << "] = ";
            if (r.exact) os << format_exact(r.value) << " = ";
            os << r.decimal << "\n";
        }
    }
    return write_output(cfg, os.str());
}

int cmd_dist(int n, const OutputConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    TauSequence seq = build_tau(n);
    IndexDistribution dist = index_distribution(seq, n);
    std::ostringstream os;
    if (cfg.format == "json") {
        json o;
        o["n"] = n;
        json probs = json::array();
        for (int k = 0; k <= n; ++k) {
            json p;
            p["k"] = k;
            p["exact"] = dist.probs[static_cast<std::size_t>(k)].str();
            p["decimal"] = decimal_string(
                eval_numeric(dist.probs[static_cast<std::size_t>(k)], ctx), ctx.working_digits);
            probs.push_back(std::move(p));
        }
        o["probs"] = std::move(probs);
        os << o.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "k,exact,decimal\n";
        for (int k = 0; k <= n; ++k)
            os << k << ",\"" << dist.probs[static_cast<std::size_t>(k)].str() << "\","
               << decimal_string(eval_numeric(dist.probs[static_cast<std::size_t>(k)], ctx),
                                 ctx.working_digits)
               << "\n";
    } else {
        os << "index distribution, n = " << n << "\n";
        for (int k = 0; k <= n; ++k)
            os << "  p(" << k << "," << n
               << ") = " << dist.probs[static_cast<std::size_t>(k)].str() << " = "
               << decimal_string(eval_numeric(dist.probs[static_cast<std::size_t>(k)], ctx),
                                 ctx.working_digits)
               << "\n";
    }
    return write_output(cfg, os.str());
}

int cmd_tau(int n, const OutputConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    TauSequence seq = build_tau(n);
    const XiPoly& tau = seq.tau(n);
    std::ostringstream os;
    if (cfg.format == "json") {
        json o;
        o["n"] = n;
        json coeffs = json::array();
        for (int k = 0; k <= n; ++k) coeffs.push_back(tau.coeff(k).str());
        o["coeffs"] = std::move(coeffs);
        os << o.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "k,coeff,decimal\n";
        for (int k = 0; k <= n; ++k)
            os << k << ",\"" << tau.coeff(k).str() << "\","
               << decimal_string(eval_numeric(tau.coeff(k), ctx), ctx.working_digits) << "\n";
    } else {
        os << "τ_" << n << "(ξ) = " << to_string(tau) << "\n";
    }
    return write_output(cfg, os.str());
}

int cmd_verify(int max_n, const OutputConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    CheckReport rep = verify_all(max_n, ctx);
    std::ostringstream os;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : rep.checks) {
            json o;
            o["name"] = c.name;
            o["pass"] = c.pass;
            if (!c.detail.empty()) o["detail"] = c.detail;
            arr.push_back(std::move(o));
        }
        os << arr.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks)
            os << (c.pass ? "PASS " : "FAIL ") << c.name
               << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        os << (rep.all_pass() ? "all checks passed\n" : "VERIFICATION FAILED\n");
    }
    int rc = write_output(cfg, os.str());
    if (rc != 0) return rc;
    if (!rep.all_pass()) {
        const CheckResult* f = rep.first_failure();
        std::cerr << "verification failed: " << f->name
                  << (f->detail.empty() ? "" : " (" + f->detail + ")") << "\n";
        return 1;
    }
    return 0;
}

int cmd_mc(int n, std::uint64_t samples, std::uint64_t seed, const OutputConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    McEstimate est = estimate(n, samples, seed);
    bool have_exact = n <= 24;
    ChiSquareResult chi;
    VarianceValue exact_var;
    if (have_exact) {
        TauSequence seq = build_tau(n);
        chi = chi_square(est, index_distribution(seq, n), ctx);
        exact_var = delta_from_distribution(seq, n);
    }
    std::ostringstream os;
    if (cfg.format == "json") {
        json o;
        o["n"] = est.n;
        o["samples"] = est.samples;
        o["seed"] = est.seed;
        o["counts"] = est.counts;
        o["mean"] = est.mean;
        o["variance"] = est.variance;
        o["stderr"] = est.stderr_variance;
        o["flagged"] = est.flagged;
        if (have_exact) {
            o["chi2"] = chi.statistic;
            o["p_value"] = chi.p_value;
            o["exact_variance"] = decimal_of(exact_var, ctx);
        } else {
            o["chi2"] = nullptr;
            o["p_value"] = nullptr;
        }
        os << o.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "k,count\n";
        for (std::size_t k = 0; k < est.counts.size(); ++k) os << k << "," << est.counts[k] << "\n";
    } else {
        os << "n = " << est.n << ", samples = " << est.samples << ", seed = " << est.seed << "\n";
        os << "mean(n+) = " << est.mean << "\n";
        os << "variance = " << est.variance << " (stderr " << est.stderr_variance << ")\n";
        if (est.flagged) os << "flagged zero-pivot samples: " << est.flagged << "\n";
        if (have_exact) {
            os << "exact variance = " << format_exact(exact_var) << " = " << decimal_of(exact_var, ctx)
               << "\n";
            os << "chi2 = " << chi.statistic << " (dof " << chi.dof << "), p = " << chi.p_value
               << "\n";
        }
    }
    return write_output(cfg, os.str());
}

int cmd_integrals(long m, const OutputConfig& cfg) {
    PrecisionContext ctx(cfg.digits);
    Real closed = j_m_closed(m, ctx);
    Real beta = j_m_quadrature(m, JmRoute::beta, ctx);
    Real sinh_route = j_m_quadrature(m, JmRoute::sinh, ctx);
    std::ostringstream os;
    if (cfg.format == "json") {
        json o;
        o["m"] = m;
        o["closed"] = decimal_string(closed, ctx.working_digits);
        o["beta"] = decimal_string(beta, ctx.working_digits);
        o["sinh"] = decimal_string(sinh_route, ctx.working_digits);
        o["beta_deviation"] = static_cast<double>(abs(beta - closed));
        o["sinh_deviation"] = static_cast<double>(abs(sinh_route - closed));
        os << o.dump(2) << "\n";
    } else {
        os << "J_" << m << " closed form   = " << decimal_string(closed, ctx.working_digits) << "\n";
        os << "J_" << m << " beta route    = " << decimal_string(beta, ctx.working_digits) << "\n";
        os << "J_" << m << " sinh route    = " << decimal_string(sinh_route, ctx.working_digits)
           << "\n";
        os << "|beta - closed| = " << static_cast<double>(abs(beta - closed)) << "\n";
        os << "|sinh - closed| = " << static_cast<double>(abs(sinh_route - closed)) << "\n";
    }
    return write_output(cfg, os.str());
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Exact and numeric index statistics of the Gaussian unitary ensemble"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--digits", cfg.digits, "Working decimal digits")
        ->check(CLI::Range(16u, 1000u))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "Write output to a file instead of stdout");

    long var_n = 0;
    std::string method = "all";
    auto* variance = app.add_subcommand("variance", "Variance of the index, by any route");
    variance->add_option("--n", var_n, "Matrix dimension")->required()->check(CLI::NonNegativeNumber);
    variance->add_option("--method", method, "sum|voisum|tau|recurrence|closed|asymptotic|all")
        ->check(CLI::IsMember({"sum", "voisum", "tau", "recurrence", "closed", "asymptotic", "all"}))
        ->capture_default_str();

    int dist_n = 0;
    auto* dist = app.add_subcommand("dist", "Exact index distribution");
    dist->add_option("--n", dist_n, "Matrix dimension")->required()->check(CLI::Range(0, 24));

    int tau_n = 0;
    auto* tau = app.add_subcommand("tau", "Generating polynomial tau_n(xi)");
    tau->add_option("--n", tau_n, "Index n")->required()->check(CLI::Range(0, 26));

    int verify_n = 8;
    auto* verify = app.add_subcommand("verify", "Run the full identity and invariant suite");
    verify->add_option("--max-n", verify_n, "Largest n for the recurrence checks")
        ->check(CLI::Range(3, 24))
        ->capture_default_str();

    int mc_n = 0;
    std::uint64_t mc_samples = 100'000;
    std::uint64_t mc_seed = 1;
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the index distribution");
    mc->add_option("--n", mc_n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
    mc->add_option("--samples", mc_samples, "Number of samples")->capture_default_str();
    mc->add_option("--seed", mc_seed, "Master seed")->capture_default_str();

    long int_m = 1;
    auto* integrals = app.add_subcommand("integrals", "Quadrature cross-checks of J_m");
    integrals->add_option("--m", int_m, "Index m")->required()->check(CLI::Range(1l, 64l));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*variance) return cmd_variance(var_n, method, cfg);
        if (*dist) return cmd_dist(dist_n, cfg);
        if (*tau) return cmd_tau(tau_n, cfg);
        if (*verify) return cmd_verify(verify_n, cfg);
        if (*mc) return cmd_mc(mc_n, mc_samples, mc_seed, cfg);
        if (*integrals) return cmd_integrals(int_m, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace gueindex
