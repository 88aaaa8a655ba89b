// Command-line front end: point evaluation, zero finding and ingestion,
// the verification suite and |chi| surface export.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "zetaverify/chi.hpp"
#include "zetaverify/errors.hpp"
#include "zetaverify/verify.hpp"
#include "zetaverify/zeros.hpp"
#include "zetaverify/zeta.hpp"

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// `key = value` lines; '#' starts a comment. Keys may repeat.
std::multimap<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw zv::MissingDataError("cannot open config file '" + path + "'");
    std::multimap<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw zv::FormatError(path + ":" + std::to_string(lineno) + ": expected key = value");
        kv.emplace(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return kv;
}

// Fills options of `sub` that were not given on the command line.
void apply_config(CLI::App& sub, const std::multimap<std::string, std::string>& kv) {
    for (auto it = kv.begin(); it != kv.end();) {
        const std::string key = it->first;
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (!opt || key == "config")
            throw zv::FormatError("config key '" + key + "' is not an option of '" +
                                  sub.get_name() + "'");
        const auto range = kv.equal_range(key);
        if (opt->count() == 0) {
            for (auto r = range.first; r != range.second; ++r)
                opt->add_result(r->second);
            opt->run_callback();
        }
        it = range.second;
    }
}

std::string fmt_complex(zv::Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

std::string fmt_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks of zeta/chi functional-equation identities"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value file supplying defaults for the subcommand's flags");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a function at one point");
    std::string point_text, what = "zeta";
    eval->add_option("--s", point_text, "point, e.g. 0.5+200i")->required();
    eval->add_option("--what", what, "quantity")
        ->check(CLI::IsMember({"zeta", "chi", "abs-chi-slope", "phi"}));

    // zeros
    auto* zeros = app.add_subcommand("zeros", "zero finding and zero-table ingestion");
    zeros->require_subcommand(1);
    auto* find = zeros->add_subcommand("find", "locate critical-line zeros in [from, to]");
    double t_from = 0, t_to = 0, step = 0.25;
    find->add_option("--from", t_from)->required();
    find->add_option("--to", t_to)->required();
    find->add_option("--step", step, "scan step");
    auto* ingest = zeros->add_subcommand("ingest", "validate a zero-table file and summarise it");
    std::string ingest_path;
    ingest->add_option("--file", ingest_path)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity checks");
    std::vector<std::string> check_ids;
    std::string zeros_path, format_name = "json", report_path;
    std::vector<std::string> tol_specs;
    verify->add_option("--check", check_ids, "run only these checks (repeatable)");
    verify->add_option("--zeros", zeros_path, "zero table (default: $ZETA_ZEROS_PATH)");
    verify->add_option("--format", format_name)->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--tol", tol_specs, "tolerance override ID=V (repeatable)");
    verify->add_option("--out", report_path, "write the report here instead of stdout");
    bool list_checks = false;
    verify->add_flag("--list", list_checks, "list registered checks and exit");

    // surface
    auto* surface = app.add_subcommand("surface", "export |chi| on a (sigma, t) grid");
    zv::GridSpec grid;
    std::string surface_path, surface_format = "csv";
    surface->add_option("--sigma-from", grid.sigma_from);
    surface->add_option("--sigma-to", grid.sigma_to);
    surface->add_option("--sigma-step", grid.sigma_step);
    surface->add_option("--t-from", grid.t_from);
    surface->add_option("--t-to", grid.t_to);
    surface->add_option("--t-step", grid.t_step);
    surface->add_option("--out", surface_path)->required();
    surface->add_option("--format", surface_format)->check(CLI::IsMember({"json", "csv"}));

    try {
        // required() would fire before the config file can fill a flag in
        if (std::any_of(argv, argv + argc, [](const char* a) {
                return std::string(a).rfind("--config", 0) == 0;
            }))
            for (auto* sub : {verify, surface, eval})
                for (auto* opt : sub->get_options())
                    opt->required(false);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (!config_path.empty()) {
            const auto kv = read_config(config_path);
            for (auto* sub : app.get_subcommands())
                apply_config(*sub, kv);
            if (eval->parsed() && point_text.empty())
                throw zv::FormatError("eval needs --s");
            if (surface->parsed() && surface_path.empty())
                throw zv::FormatError("surface needs --out");
        }

        if (eval->parsed()) {
            const zv::ComplexPoint s = zv::parse_point(point_text);
            if (what == "zeta")
                std::cout << fmt_complex(zv::zeta(s)) << "\n";
            else if (what == "chi")
                std::cout << fmt_complex(zv::chi(s)) << "\n";
            else if (what == "abs-chi-slope")
                std::cout << fmt_real(zv::abs_chi_slope(s)) << "\n";
            else
                std::cout << fmt_real(zv::phi(s)) << "\n";
            return 0;
        }

        if (find->parsed()) {
            for (double t : zv::find_zeros(t_from, t_to, step)) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.10f\n", t);
                std::cout << buf;
            }
            return 0;
        }

        if (ingest->parsed()) {
            const zv::ZeroTable table = zv::load_zero_table(ingest_path);
            std::cout << "source " << ingest_path << "\n"
                      << "count " << table.count() << "\n"
                      << "first " << fmt_real(table.ordinates().front()) << "\n"
                      << "last " << fmt_real(table.ordinates().back()) << "\n"
                      << "mean_sigma " << fmt_real(table.mean_sigma(table.count())) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            if (list_checks) {
                for (const auto& c : zv::check_registry())
                    std::cout << c.id << (c.needs_zeros ? "  [zeros]  " : "  ") << c.description
                              << "\n";
                return 0;
            }
            zv::RunConfig config;
            if (!zeros_path.empty())
                config.zero_table_path = zeros_path;
            else if (const char* env = std::getenv("ZETA_ZEROS_PATH"); env && *env)
                config.zero_table_path = env;
            config.output_format = zv::parse_output_format(format_name);
            for (const auto& spec : tol_specs) {
                const auto eq = spec.find('=');
                if (eq == std::string::npos)
                    throw zv::FormatError("--tol expects ID=V, got '" + spec + "'");
                std::size_t used = 0;
                const std::string v = spec.substr(eq + 1);
                double tol = 0;
                try {
                    tol = std::stod(v, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != v.size())
                    throw zv::FormatError("--tol value '" + v + "' is not a number");
                config.tolerance_overrides[spec.substr(0, eq)] = tol;
            }

            std::vector<zv::CheckRow> rows;
            if (check_ids.empty()) {
                rows = zv::run_all(config);
            } else {
                for (const auto& id : check_ids)
                    rows.push_back(zv::run_check(id, config));
            }
            if (report_path.empty()) {
                zv::write_report(rows, config.output_format, std::cout);
            } else {
                std::ofstream out(report_path);
                if (!out)
                    throw zv::MissingDataError("cannot write '" + report_path + "'");
                zv::write_report(rows, config.output_format, out);
            }
            return zv::all_passed(rows) ? 0 : 1;
        }

        if (surface->parsed()) {
            zv::RunConfig config;
            config.grid = grid;
            const auto g = zv::emit_chi_surface(config);
            std::ofstream out(surface_path);
            if (!out)
                throw zv::MissingDataError("cannot write '" + surface_path + "'");
            zv::write_surface(g, zv::parse_output_format(surface_format), out);
            std::cerr << g.t_axis.size() * g.sigma_axis.size() << " points written to "
                      << surface_path << "\n";
            return 0;
        }
    } catch (const zv::Error& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return 2;
    }
    return 0;
}
