#include "logsine/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>

#include "logsine/errors.hpp"
#include "logsine/lehmer.hpp"
#include "logsine/polybernoulli.hpp"
#include "logsine/quadrature.hpp"
#include "logsine/series.hpp"
#include "logsine/special.hpp"
#include "logsine/verification.hpp"

namespace logsine {

namespace {

using json = nlohmann::ordered_json;
using Input = std::map<std::string, std::string>;

json record(const std::string& op, const Input& input, json value) {
    json r;
    r["op"] = op;
    r["input"] = input;
    r["value"] = std::move(value);
    return r;
}

json real_value(double v, double abs_err) { return {{"real", {{"value", v}, {"abs_err", abs_err}}}}; }

json coefficients_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(c.get_str());
    }
    return arr;
}

json report_json(const EvalReport& r) {
    json j;
    j["identity_id"] = r.identity_id;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_diff"] = r.abs_diff;
    if (r.exact)
        j["tolerance"] = "exact";
    else
        j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

// RFC 4180: quote fields holding a comma, quote or line break.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

long default_max_terms() {
    const char* env = std::getenv("LOGSINE_MAX_TERMS");
    if (env == nullptr || *env == '\0') return SeriesConfig{}.max_terms;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw DomainError(std::string("LOGSINE_MAX_TERMS must be a positive integer, got ") + env);
    return v;
}

struct PbOptions {
    int n_max = 0;
    int k_min = 0;
    int k_max = 0;
    int order = 64;
    std::string format = "csv";
};

int cmd_pb(const PbOptions& o, std::ostream& out) {
    if (o.n_max < 0) throw DomainError("n_max must be >= 0");
    if (o.k_min > o.k_max) throw DomainError("k_min must not exceed k_max");
    if (o.n_max >= o.order) throw DomainError("n_max must be below the truncation order " + std::to_string(o.order));
    const PolyBernoulliTable table(o.n_max, o.k_min, o.k_max);
    if (o.format == "csv") {
        out << "n,k,value\n";
        for (int n = 0; n <= o.n_max; ++n)
            for (int k = o.k_min; k <= o.k_max; ++k)
                out << n << ',' << k << ',' << csv_field(table.value(n, k).to_string()) << '\n';
        return 0;
    }
    json doc = json::array();
    for (int n = 0; n <= o.n_max; ++n)
        for (int k = o.k_min; k <= o.k_max; ++k)
            doc.push_back(record("pb",
                                 {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"order", std::to_string(o.order)}},
                                 {{"rational", table.value(n, k).to_string()}}));
    out << doc.dump(2) << '\n';
    return 0;
}

int cmd_lehmer(int n_max, const std::string& format, std::ostream& out) {
    if (n_max < -1) throw DomainError("n_max must be >= -1");
    if (format == "csv") {
        out << "n,p,q\n";
        for (int n = -1; n <= n_max; ++n) {
            const LehmerPair lp = lehmer_pair(n);
            out << n << ',' << csv_field(coefficients_json(lp.p).dump()) << ','
                << csv_field(coefficients_json(lp.q).dump()) << '\n';
        }
        return 0;
    }
    json doc = json::array();
    for (int n = -1; n <= n_max; ++n) {
        const LehmerPair lp = lehmer_pair(n);
        doc.push_back(record("lehmer", {{"n", std::to_string(n)}},
                             {{"p", coefficients_json(lp.p)}, {"q", coefficients_json(lp.q)}}));
    }
    out << doc.dump(2) << '\n';
    return 0;
}

struct EvalOptions {
    std::string what;
    double s_re = 0.0;
    double s_im = 0.0;
    std::optional<double> sigma;
    std::optional<double> z;
    long max_terms = 0;
    double tol = SeriesConfig{}.tail_tolerance;
    double z_cap = SeriesConfig{}.z_cap;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
    SeriesConfig cfg;
    cfg.max_terms = o.max_terms;
    cfg.tail_tolerance = o.tol;
    cfg.z_cap = o.z_cap;
    cfg.validate();
    const std::complex<double> s(o.s_re, o.s_im);
    Input input{{"what", o.what},
                {"s_re", format_real(o.s_re)},
                {"s_im", format_real(o.s_im)},
                {"max_terms", std::to_string(o.max_terms)},
                {"tol", format_real(o.tol)},
                {"z_cap", format_real(o.z_cap)}};
    ComplexValue v;
    if (o.sigma) {
        input["sigma"] = format_real(*o.sigma);
        if (o.what == "sls") {
            v = sls_continued(s, *o.sigma, cfg);
        } else {
            if (!(*o.sigma > 0.0 && *o.sigma < kPi)) throw DomainError("sigma must lie in (0, pi)");
            const double z = std::sin(*o.sigma / 2.0);
            v = o.what == "zcb" ? zeta_cb_series(s, z, cfg) : eta_cb_series(s, z, cfg);
        }
    } else {
        input["z"] = format_real(*o.z);
        if (o.what == "sls")
            v = sls_continued_from_z(s, *o.z, cfg);
        else
            v = o.what == "zcb" ? zeta_cb_series(s, *o.z, cfg) : eta_cb_series(s, *o.z, cfg);
    }
    json doc = record("eval", input, {{"complex", {{"re", v.re}, {"im", v.im}, {"abs_err", v.abs_err}}}});
    doc["value_re"] = v.re;
    doc["value_im"] = v.im;
    doc["abs_err"] = v.abs_err;
    doc["terms_used"] = v.terms;
    out << doc.dump(2) << '\n';
    return 0;
}

struct QuadOptions {
    std::string what;
    double s = 0.0;
    double sigma = 0.0;
    QuadConfig config;
};

int cmd_quad(const QuadOptions& o, std::ostream& out) {
    IntegralResult r;
    if (o.what == "sls")
        r = sls_integral(o.s, o.sigma, o.config);
    else if (o.what == "zcb")
        r = zcb_integral(o.s, o.sigma, o.config);
    else
        r = ecb_integral(o.s, o.sigma, o.config);
    const Input input{{"what", o.what},
                      {"s", format_real(o.s)},
                      {"sigma", format_real(o.sigma)},
                      {"levels", std::to_string(o.config.levels)},
                      {"abs_tol", format_real(o.config.abs_tol)}};
    json doc = record("quad", input, real_value(r.value, r.est_err));
    doc["evaluations"] = r.evaluations;
    out << doc.dump(2) << '\n';
    return 0;
}

struct VerifyOptions {
    std::string suite = "all";
    SuiteConfig config;
    std::string json_path;
};

int cmd_verify(VerifyOptions o, std::ostream& out) {
    if (o.suite == "none")
        o.config.selection = SuiteSelection::none();
    else if (o.suite != "all")
        o.config.selection = {o.suite == "exact", o.suite == "series", o.suite == "quad"};
    const std::vector<EvalReport> reports = run_full_suite(o.config);
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(report_json(r));
    const std::string text = doc.dump(2);
    out << text << '\n';
    if (!o.json_path.empty()) {
        std::ofstream f(o.json_path);
        if (!f) throw NumericError("cannot write " + o.json_path);
        f << text << '\n';
    }
    return all_pass(reports) ? 0 : 1;
}

int fail(std::ostream& out, const std::string& message) {
    out << json{{"error", message}}.dump() << '\n';
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shifted log-sine integrals, central binomial series and poly-Bernoulli numbers"};
    app.require_subcommand(1);

    PbOptions pb;
    auto* pb_cmd = app.add_subcommand("pb", "Poly-Bernoulli table B_n^(k)");
    pb_cmd->add_option("--n-max", pb.n_max, "Largest n")->required();
    pb_cmd->add_option("--k-min", pb.k_min, "Smallest k")->required();
    pb_cmd->add_option("--k-max", pb.k_max, "Largest k")->required();
    pb_cmd->add_option("--order", pb.order, "Series truncation order")->capture_default_str();
    pb_cmd->add_option("--format", pb.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    int lehmer_n = 0;
    std::string lehmer_format = "json";
    auto* lehmer_cmd = app.add_subcommand("lehmer", "Lehmer polynomials p_n, q_n");
    lehmer_cmd->add_option("--n-max", lehmer_n, "Largest n (>= -1)")->required();
    lehmer_cmd->add_option("--format", lehmer_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    EvalOptions ev;
    double ev_sigma = 0.0;
    double ev_z = 0.0;
    long ev_max_terms = 0;
    auto* eval_cmd = app.add_subcommand("eval", "Central binomial series and continued SLs");
    eval_cmd->add_option("--what", ev.what)->required()->check(CLI::IsMember({"zcb", "ecb", "sls"}));
    eval_cmd->add_option("--s-re", ev.s_re)->required();
    eval_cmd->add_option("--s-im", ev.s_im)->capture_default_str();
    auto* sigma_opt = eval_cmd->add_option("--sigma", ev_sigma);
    auto* z_opt = eval_cmd->add_option("--z", ev_z);
    sigma_opt->excludes(z_opt);
    auto* max_terms_opt = eval_cmd->add_option("--max-terms", ev_max_terms, "Overrides LOGSINE_MAX_TERMS");
    eval_cmd->add_option("--tol", ev.tol)->capture_default_str();
    eval_cmd->add_option("--z-cap", ev.z_cap)->capture_default_str();

    QuadOptions qd;
    auto* quad_cmd = app.add_subcommand("quad", "Log-sine integrals by double-exponential quadrature");
    quad_cmd->add_option("--what", qd.what)->check(CLI::IsMember({"sls", "zcb", "ecb"}))->default_val("sls");
    quad_cmd->add_option("--s", qd.s)->required();
    quad_cmd->add_option("--sigma", qd.sigma)->required();
    quad_cmd->add_option("--levels", qd.config.levels)->capture_default_str();
    quad_cmd->add_option("--abs-tol", qd.config.abs_tol)->capture_default_str();

    VerifyOptions vf;
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
    verify_cmd->add_option("--suite", vf.suite)
        ->check(CLI::IsMember({"exact", "series", "quad", "all", "none"}))
        ->capture_default_str();
    verify_cmd->add_option("--n-max", vf.config.n_max_exact, "Largest n for the exact checks")->capture_default_str();
    verify_cmd->add_option("--n-max-series", vf.config.n_max_series)->capture_default_str();
    verify_cmd->add_option("--levels", vf.config.quad.levels)->capture_default_str();
    verify_cmd->add_option("--json", vf.json_path, "Also write the reports to this file");

    std::vector<std::string> argv_store{"logsine"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        err << "run with --help for usage\n";
        return 2;
    }

    try {
        if (pb_cmd->parsed()) return cmd_pb(pb, out);
        if (lehmer_cmd->parsed()) return cmd_lehmer(lehmer_n, lehmer_format, out);
        if (eval_cmd->parsed()) {
            if (sigma_opt->count() == 0 && z_opt->count() == 0) {
                err << "eval needs one of --sigma or --z\n";
                return 2;
            }
            if (sigma_opt->count() > 0) ev.sigma = ev_sigma;
            if (z_opt->count() > 0) ev.z = ev_z;
            ev.max_terms = max_terms_opt->count() > 0 ? ev_max_terms : default_max_terms();
            return cmd_eval(ev, out);
        }
        if (quad_cmd->parsed()) return cmd_quad(qd, out);
        return cmd_verify(vf, out);
    } catch (const BudgetExceeded& e) {
        json j{{"error", e.what()}, {"partial_re", e.partial_re}, {"partial_im", e.partial_im}, {"terms", e.terms}};
        out << j.dump() << '\n';
        return 1;
    } catch (const DomainError& e) {
        return fail(out, e.what());
    } catch (const NumericError& e) {
        return fail(out, e.what());
    }
}

}  // namespace logsine
