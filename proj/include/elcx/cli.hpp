#pragma once

// Command-line front end: verify, reconstruct and sweep subcommands.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 ellipticity
// violation, 3 evaluation point outside the domain, 64 malformed invocation.

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elcx/io.hpp"
#include "elcx/verify.hpp"

namespace elcx::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_ellipticity = 2,
    exit_outside_domain = 3,
    exit_usage = 64,
};

enum class OutputFormat { json, csv };

struct RunConfig {
    std::string command;
    double alpha = 1.0;
    double beta = 0.0;
    std::string function = R"({"kind":"identity"})";
    std::string zeta = "0.2,0.1";
    std::string domain = "disk:1";
    int n_theta = 512;
    int n_r = 64;
    std::string format = "json";
    std::string output_path;
    std::string checks;
    std::string alphas;
    std::string betas;
    std::string points;
};

inline constexpr int max_nodes = 1 << 20;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

inline double parse_number(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw FormatError("not a number: \"" + s + "\"");
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw FormatError("not a number: \"" + s + "\"");
    return v;
}

inline std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_number(part));
    return out;
}

/// "re,im"
inline ElComplex parse_point(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw FormatError("expected a point \"re,im\", got \"" + s + "\"");
    return {parse_number(parts[0]), parse_number(parts[1])};
}

/// "disk:<r>" or "ellipse:<r>", optionally followed by "@<cx>,<cy>".
/// An ellipse is {z : ||(z - c)~||_(alpha,beta) < r} for the run's parameters.
inline StarDomain parse_domain(const std::string& s, const AlgebraParams& p) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw FormatError("domain must look like disk:<r>");
    const std::string kind = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    ElComplex center{};
    if (const auto at = rest.find('@'); at != std::string::npos) {
        center = parse_point(rest.substr(at + 1));
        rest = rest.substr(0, at);
    }
    const double r = parse_number(rest);
    if (!(r > 0.0) || !std::isfinite(r)) throw FormatError("domain radius must be positive");
    if (kind == "disk") return StarDomain{Disk{center, r}};
    if (kind == "ellipse") return StarDomain{AlgEllipseDisk{center, r, p}};
    throw FormatError("unknown domain kind \"" + kind + "\"");
}

inline std::vector<CheckKind> parse_checks(const std::string& s) {
    if (s.empty() || s == "all") return all_checks();
    std::vector<CheckKind> out;
    for (const auto& name : split(s, ',')) {
        const auto k = parse_check(name);
        if (!k) throw FormatError("unknown check \"" + name + "\"");
        out.push_back(*k);
    }
    return out;
}

inline QuadratureSpec make_spec(const RunConfig& cfg) {
    if (cfg.n_theta < 8 || cfg.n_theta > max_nodes || cfg.n_r < 8 || cfg.n_r > max_nodes) {
        throw FormatError("node counts must lie in [8, 2^20]");
    }
    return {cfg.n_theta, cfg.n_r};
}

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw FormatError("format must be json or csv");
}

/// Newline-delimited JSON, or CSV with a header row.
inline void write_reports(std::ostream& os, const std::vector<VerificationReport>& rows,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::csv) os << csv_header() << '\n';
    for (const auto& r : rows) {
        if (fmt == OutputFormat::json) {
            os << report_to_json(r).dump() << '\n';
        } else {
            os << report_to_csv(r) << '\n';
        }
    }
}

inline bool all_passed(const std::vector<VerificationReport>& rows) {
    for (const auto& r : rows) {
        if (!r.passed) return false;
    }
    return true;
}

} // namespace detail

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto fmt = detail::parse_format(cfg.format);
    const auto spec = detail::make_spec(cfg);
    const auto checks = detail::parse_checks(cfg.checks);
    const AlgebraParams p = make_params(cfg.alpha, cfg.beta);
    const auto rows = run_checks(p, checks, spec);
    detail::write_reports(out, rows, fmt);
    return detail::all_passed(rows) ? exit_ok : exit_check_failed;
}

inline int cmd_reconstruct(const RunConfig& cfg, std::ostream& out) {
    const auto fmt = detail::parse_format(cfg.format);
    const auto spec = detail::make_spec(cfg);
    json fj;
    try {
        fj = json::parse(cfg.function);
    } catch (const json::exception& e) {
        throw FormatError(std::string("--function is not valid JSON: ") + e.what());
    }
    const TestFunction f = function_from_json(fj);
    const ElComplex zeta = detail::parse_point(cfg.zeta);
    const AlgebraParams p = make_params(cfg.alpha, cfg.beta);
    const StarDomain d = detail::parse_domain(cfg.domain, p);
    const auto r = cauchy_pompeiu(f, d, zeta, p, spec);
    detail::write_reports(out, {r}, fmt);
    return r.passed ? exit_ok : exit_check_failed;
}

/// Grid = cartesian product of --alphas and --betas, followed by the explicit
/// --points "a,b;a,b". Ellipticity failures become rows and do not affect the
/// exit status.
inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const auto fmt = detail::parse_format(cfg.format);
    const auto spec = detail::make_spec(cfg);
    const auto checks = detail::parse_checks(cfg.checks);
    std::vector<std::pair<double, double>> grid;
    if (!cfg.alphas.empty() || !cfg.betas.empty()) {
        const auto as = detail::parse_list(cfg.alphas.empty() ? "1" : cfg.alphas);
        const auto bs = detail::parse_list(cfg.betas.empty() ? "0" : cfg.betas);
        for (double a : as) {
            for (double b : bs) grid.emplace_back(a, b);
        }
    }
    if (!cfg.points.empty()) {
        for (const auto& pt : detail::split(cfg.points, ';')) {
            const ElComplex ab = detail::parse_point(pt);
            grid.emplace_back(ab.re, ab.im);
        }
    }
    if (grid.empty()) throw FormatError("sweep grid is empty");
    const auto rows = sweep(grid, checks, spec);
    detail::write_reports(out, rows, fmt);
    for (const auto& r : rows) {
        if (!r.passed && !r.reason) return exit_check_failed;
    }
    return exit_ok;
}

/// Parses argv and dispatches. All output goes to `out`/`err` unless --out
/// names a file.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Elliptic complex algebras: Cauchy-Pompeiu and Cauchy formula verification",
                 "elcx"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "structure polynomial constant term")
            ->capture_default_str();
        sub->add_option("--beta", cfg.beta, "structure polynomial linear coefficient")
            ->capture_default_str();
        sub->add_option("--n-theta", cfg.n_theta, "angular / contour nodes")->capture_default_str();
        sub->add_option("--n-r", cfg.n_r, "radial Gauss-Legendre nodes")->capture_default_str();
        sub->add_option("--format", cfg.format, "json or csv")->capture_default_str();
        sub->add_option("--out", cfg.output_path, "write output to this file");
    };

    auto* verify = app.add_subcommand("verify", "run the check battery at one (alpha, beta)");
    add_common(verify);
    verify->add_option("--checks", cfg.checks, "comma-separated subset of checks (default all)");

    auto* reconstruct =
        app.add_subcommand("reconstruct", "rebuild f(zeta) from the two-term representation");
    add_common(reconstruct);
    reconstruct->add_option("--function", cfg.function, "function descriptor (JSON)")
        ->capture_default_str();
    reconstruct->add_option("--zeta", cfg.zeta, "evaluation point re,im")->capture_default_str();
    reconstruct->add_option("--domain", cfg.domain, "disk:<r>[@cx,cy] or ellipse:<r>[@cx,cy]")
        ->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "run checks over a parameter grid (CSV by default)");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--checks", cfg.checks, "comma-separated subset of checks (default all)");
    sweep_cmd->add_option("--alphas", cfg.alphas, "comma-separated alpha values");
    sweep_cmd->add_option("--betas", cfg.betas, "comma-separated beta values");
    sweep_cmd->add_option("--points", cfg.points, "explicit points a,b;a,b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    if (*sweep_cmd && sweep_cmd->count("--format") == 0) cfg.format = "csv";

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!cfg.output_path.empty()) {
        file = std::make_unique<std::ofstream>(cfg.output_path, std::ios::binary);
        if (!*file) {
            err << "error: cannot open " << cfg.output_path << '\n';
            return exit_usage;
        }
        sink = file.get();
    }

    try {
        if (*verify) return cmd_verify(cfg, *sink);
        if (*reconstruct) return cmd_reconstruct(cfg, *sink);
        return cmd_sweep(cfg, *sink);
    } catch (const EllipticityViolation& e) {
        err << "error: " << e.what() << '\n';
        return exit_ellipticity;
    } catch (const PoleOutsideDomain& e) {
        err << "error: " << e.what() << '\n';
        return exit_outside_domain;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace elcx::cli
