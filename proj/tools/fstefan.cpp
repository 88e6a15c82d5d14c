#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fstefan/erf.hpp"
#include "fstefan/errors.hpp"
#include "fstefan/stefan.hpp"
#include "fstefan/verify.hpp"

namespace {

struct Range {
    double min = 0.0;
    double max = 1.0;
    int count = 2;
};

struct CliConfig {
    std::string command;
    std::vector<double> alpha;
    Range t_range{0.5, 2.0, 4};
    Range x_range{0.0, 1.0, 11};
    double tol = 1e-12;
    int mesh_n = 512;
    double grading = 0.0; // 0 = per-alpha default
    std::string format;   // csv | json; per-command default when empty
    std::string output;   // path; stdout when empty or "-"
    bool t_range_given = false;
    bool alpha_given = false;
};

std::string num(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::vector<double> linspace(const Range& r) {
    if (!(r.min < r.max) || r.count < 2)
        throw fstefan::DomainError("range needs min < max and count >= 2");
    std::vector<double> v(r.count);
    for (int i = 0; i < r.count; ++i)
        v[i] = r.min + (r.max - r.min) * i / (r.count - 1);
    v.back() = r.max;
    return v;
}

void check_alphas(const std::vector<double>& as) {
    if (as.empty())
        throw fstefan::DomainError("at least one --alpha is required");
    for (double a : as)
        if (!(a > 0.0) || a > 1.0)
            throw fstefan::DomainError("alpha out of (0,1]");
}

void load_config(const std::string& path, CliConfig& c) {
    std::ifstream in(path);
    if (!in) throw fstefan::DomainError("cannot read config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw fstefan::DomainError(std::string("config is not valid JSON: ") +
                                   e.what());
    }
    const auto range = [&](const char* key, Range& r) {
        if (!j.contains(key)) return false;
        const auto& o = j.at(key);
        r.min = o.at("min").get<double>();
        r.max = o.at("max").get<double>();
        r.count = o.at("count").get<int>();
        return true;
    };
    try {
        if (j.contains("command")) c.command = j.at("command").get<std::string>();
        if (j.contains("alpha")) {
            const auto& a = j.at("alpha");
            if (a.is_array())
                c.alpha = a.get<std::vector<double>>();
            else
                c.alpha = {a.get<double>()};
            c.alpha_given = true;
        }
        c.t_range_given = range("t_range", c.t_range) || c.t_range_given;
        range("x_range", c.x_range);
        if (j.contains("tol")) c.tol = j.at("tol").get<double>();
        if (j.contains("mesh_n")) c.mesh_n = j.at("mesh_n").get<int>();
        if (j.contains("grading")) c.grading = j.at("grading").get<double>();
        if (j.contains("format")) c.format = j.at("format").get<std::string>();
        if (j.contains("output")) c.output = j.at("output").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw fstefan::DomainError(std::string("bad config field: ") +
                                   e.what());
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw fstefan::DomainError("cannot open output path: " + out);
    f << text;
}

std::string pick_format(const CliConfig& c, const char* fallback) {
    const std::string f = c.format.empty() ? fallback : c.format;
    if (f != "csv" && f != "json")
        throw fstefan::DomainError("format must be csv or json");
    return f;
}

int cmd_xi(const CliConfig& cfg) {
    check_alphas(cfg.alpha);
    if (!(cfg.tol > 0.0)) throw fstefan::DomainError("tol must be positive");
    auto as = cfg.alpha;
    std::sort(as.begin(), as.end());

    bool ok = true;
    std::string csv = "alpha,xi,denom,residual\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double a : as) {
        const auto sol = fstefan::solve_xi(a, cfg.tol);
        const double res = std::fabs(fstefan::xi_residual(sol.xi, a));
        ok = ok && res <= cfg.tol;
        csv += num(a) + ',' + num(sol.xi) + ',' + num(sol.denom) + ',' +
               num(res) + '\n';
        rows.push_back({{"alpha", a},
                        {"xi", sol.xi},
                        {"denom", sol.denom},
                        {"residual", res}});
    }
    const auto f = pick_format(cfg, "csv");
    emit(f == "csv" ? csv : rows.dump(2) + "\n", cfg.output);
    return ok ? 0 : 1;
}

int cmd_sweep(const CliConfig& cfg) {
    check_alphas(cfg.alpha);
    auto as = cfg.alpha;
    std::sort(as.begin(), as.end());

    std::string csv = "alpha,xi\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double a : as) {
        const auto sol = fstefan::solve_xi(a, cfg.tol);
        csv += num(a) + ',' + num(sol.xi) + '\n';
        rows.push_back({{"alpha", a}, {"xi", sol.xi}});
    }
    const auto f = pick_format(cfg, "csv");
    emit(f == "csv" ? csv : rows.dump(2) + "\n", cfg.output);
    return 0;
}

int cmd_eval(const CliConfig& cfg) {
    check_alphas(cfg.alpha);
    if (cfg.alpha.size() != 1)
        throw fstefan::DomainError("eval takes a single alpha");
    if (!(cfg.t_range.min > 0.0))
        throw fstefan::DomainError("t range must be positive");
    if (cfg.x_range.min < 0.0)
        throw fstefan::DomainError("x range must be nonnegative");
    const auto ts = linspace(cfg.t_range);
    const auto xs = linspace(cfg.x_range);
    const auto sol = fstefan::solve_xi(cfg.alpha[0], cfg.tol);

    std::string csv = "x,t,u,s,flux\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double t : ts) {
        const double s = fstefan::free_boundary(sol, t);
        for (double x : xs) {
            const double u = fstefan::temperature(sol, x, t);
            const double flux = fstefan::fractional_flux(sol, x, t);
            csv += num(x) + ',' + num(t) + ',' + num(u) + ',' + num(s) + ',' +
                   num(flux) + '\n';
            rows.push_back({{"x", x},
                            {"t", t},
                            {"u", u},
                            {"s", s},
                            {"flux", flux}});
        }
    }
    const auto f = pick_format(cfg, "csv");
    emit(f == "csv" ? csv : rows.dump(2) + "\n", cfg.output);
    return 0;
}

int cmd_verify(const CliConfig& cfg, bool ts_given) {
    fstefan::verify::SuiteConfig sc;
    if (cfg.alpha_given || !cfg.alpha.empty()) {
        for (double a : cfg.alpha)
            if (!(a > 0.0) || a > 1.0)
                throw fstefan::DomainError("alpha out of (0,1]");
        sc.alphas = cfg.alpha; // an explicit empty list yields an empty report
    }
    if (ts_given) sc.ts = linspace(cfg.t_range);
    if (cfg.mesh_n < 8)
        throw fstefan::DomainError("mesh-n must be at least 8");
    if (cfg.grading != 0.0 && !(cfg.grading >= 1.0))
        throw fstefan::DomainError("grading must be >= 1");
    sc.n_quad = cfg.mesh_n;
    sc.nx = cfg.mesh_n;
    sc.n_fde = 2 * cfg.mesh_n;
    sc.n_caputo = 2 * cfg.mesh_n;
    sc.grading = cfg.grading;

    const auto report = fstefan::verify::run_suite(sc);
    const auto f = pick_format(cfg, "json");
    emit(f == "csv" ? fstefan::verify::to_csv(report)
                    : fstefan::verify::to_json(report),
         cfg.output);
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CliConfig cfg;

    // The config file seeds the defaults, so it has to be read before
    // CLI11 binds flag values over them.
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        std::string path;
        if (a == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0) path = a.substr(9);
        if (!path.empty()) {
            try {
                load_config(path, cfg);
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"Similarity solution toolkit for fractional melting"};
    app.require_subcommand(0, 1);
    std::string cfg_path;
    app.add_option("--config", cfg_path, "JSON config file");

    auto* xi = app.add_subcommand("xi", "solve the free-boundary root");
    auto* eval = app.add_subcommand("eval", "evaluate u, s, flux on a grid");
    auto* sweep = app.add_subcommand("sweep", "xi across an alpha list");
    auto* verify = app.add_subcommand("verify", "run the verification suite");

    for (auto* sub : {xi, eval, sweep, verify}) {
        sub->add_option("--config", cfg_path, "JSON config file");
        sub->add_option("--alpha", cfg.alpha, "fractional order(s) in (0,1]");
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--output", cfg.output, "output path ('-' = stdout)");
        sub->add_option("--tol", cfg.tol, "root-solve tolerance");
    }
    for (auto* sub : {eval, verify}) {
        sub->add_option("--t-min", cfg.t_range.min, "start of the t grid");
        sub->add_option("--t-max", cfg.t_range.max, "end of the t grid");
        sub->add_option("--t-count", cfg.t_range.count, "t grid size");
    }
    eval->add_option("--x-min", cfg.x_range.min, "start of the x grid");
    eval->add_option("--x-max", cfg.x_range.max, "end of the x grid");
    eval->add_option("--x-count", cfg.x_range.count, "x grid size");
    verify->add_option("--mesh-n", cfg.mesh_n,
                       "temporal mesh size (operators use 2x)");
    verify->add_option("--grading", cfg.grading,
                       "mesh grading exponent (0 = per-alpha default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help exits clean, anything else is usage
    }

    std::string command = cfg.command;
    for (auto* sub : {xi, eval, sweep, verify})
        if (app.got_subcommand(sub)) command = sub->get_name();
    if (command.empty()) {
        std::cerr << "no command given (xi, eval, sweep, verify)\n";
        return 2;
    }

    try {
        if (command == "xi") return cmd_xi(cfg);
        if (command == "eval") return cmd_eval(cfg);
        if (command == "sweep") return cmd_sweep(cfg);
        if (command == "verify") {
            const bool ts_given = cfg.t_range_given ||
                                  verify->count("--t-min") ||
                                  verify->count("--t-max") ||
                                  verify->count("--t-count");
            return cmd_verify(cfg, ts_given);
        }
        std::cerr << "unknown command: " << command << "\n";
        return 2;
    } catch (const fstefan::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const fstefan::NonConvergenceError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
