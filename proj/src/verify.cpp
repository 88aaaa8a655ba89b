#include "zetaverify/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "json.hpp"
#include "zetaverify/chi.hpp"
#include "zetaverify/specfun.hpp"
#include "zetaverify/zeta.hpp"

namespace zv {

namespace {

constexpr double kFirstZero = 14.134725;
constexpr double kNearZeroHeight = 9291.071149949;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> axis(double from, double to, double step) {
    const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
    std::vector<double> out;
    for (long k = 0; k <= n; ++k)
        out.push_back(std::min(to, from + static_cast<double>(k) * step));
    return out;
}

class Context {
public:
    Context(const RunConfig& config, const ZeroTable* external)
        : config_(config), external_(external) {}

    const RunConfig& config() const { return config_; }

    const ZeroTable& zeros() {
        if (external_)
            return *external_;
        if (!cache_) {
            if (!config_.zero_table_path)
                throw MissingDataError("zero table required; pass --zeros or set ZETA_ZEROS_PATH");
            cache_ = load_zero_table(*config_.zero_table_path);
        }
        return *cache_;
    }

    bool has_zeros() const { return external_ || cache_ || config_.zero_table_path; }

private:
    const RunConfig& config_;
    const ZeroTable* external_;
    std::optional<ZeroTable> cache_;
};

struct Outcome {
    double lhs;
    double rhs;
    std::string note;
};

struct Check {
    CheckInfo info;
    std::function<Outcome(Context&)> run;
};

std::string fmt(const char* pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string describe(const ComplexPoint& s) { return to_string(s); }

Outcome hadamard_slope_check(Context& ctx, double sigma, double t) {
    const ComplexPoint s(sigma, t);
    const ZeroTable& zeros = ctx.zeros();
    const double direct = abs_zeta_slope(s);
    const double hadamard = abs_zeta_slope_hadamard(s, zeros);
    const double simplified = abs_zeta_slope_hadamard(s, zeros, HadamardSlopeOptions::simplified());
    const SumResult zs = hadamard_sum(s, zeros, false);
    std::string note = "zero sum " + fmt("%.10g", zs.value) + " over " +
                       std::to_string(zs.terms_used) + " zeros; simplified form " +
                       fmt("%.10g", simplified) + "; nearest table ordinate at distance " +
                       fmt("%.3g", zeros.distance_to_nearest(t));
    return {direct, hadamard, note};
}

std::string scan_summary(const ScanReport& rep, std::size_t& violations) {
    violations = 0;
    const CheckRow* worst = nullptr;
    for (const auto& r : rep.rows) {
        if (!r.pass)
            ++violations;
        if (!worst || r.lhs - r.rhs < worst->lhs - worst->rhs)
            worst = &r;
    }
    std::string note = std::to_string(rep.rows.size()) + " points, " +
                       std::to_string(rep.excluded.size()) + " excluded near zeros";
    if (worst)
        note += "; smallest lhs-rhs " + fmt("%.6g", worst->lhs - worst->rhs) + " at " +
                worst->check_id;
    return note;
}

Outcome scan_check(Context& ctx, ScanProperty prop) {
    const ZeroTable* zeros = nullptr;
    if (prop != ScanProperty::ModulusReflection || ctx.has_zeros())
        zeros = &ctx.zeros();
    const ScanReport rep = scan_region(prop, ctx.config(), zeros);
    std::size_t violations = 0;
    std::string note = scan_summary(rep, violations);
    return {static_cast<double>(violations), 0.0, note};
}

const std::vector<Check>& checks() {
    static const std::vector<Check> registry = [] {
        std::vector<Check> c;
        c.push_back({{"chi_slope_fd",
                      "finite-difference d|chi|/dsigma vs |chi| phi at 1/2 + 14.134725i",
                      ToleranceRule::Relative, 1e-6, false},
                     [](Context&) {
                         const ComplexPoint s(0.5, kFirstZero);
                         const double fd = fd_derivative(
                             [](const ComplexPoint& p) { return abs_chi(p); }, s, 1e-5, 1);
                         return Outcome{fd, abs_chi_slope(s), ""};
                     }});
        c.push_back({{"chi_bound", "|chi(0 + it)| vs sqrt(t/(2 pi)) at t = 14.134725",
                      ToleranceRule::Relative, 1e-6, false},
                     [](Context&) {
                         return Outcome{abs_chi(ComplexPoint(0.0, kFirstZero)),
                                        chi_bounds(kFirstZero).second, ""};
                     }});
        c.push_back({{"chi_second_fd",
                      "finite difference of |chi|' vs (|chi|')^2/|chi| at 1/2 + 200i",
                      ToleranceRule::Relative, 1e-6, false},
                     [](Context&) {
                         const ComplexPoint s(0.5, 200.0);
                         const double fd = fd_derivative(
                             [](const ComplexPoint& p) { return abs_chi_slope(p); }, s, 1e-5, 1);
                         return Outcome{fd, abs_chi_kth(s, 2), ""};
                     }});
        c.push_back({{"chi_unit_modulus", "|chi(1/2 + it)| = 1, worst case over t_values",
                      ToleranceRule::Absolute, 1e-10, false},
                     [](Context& ctx) {
                         double worst = 1.0, worst_t = kNaN;
                         for (double t : ctx.config().t_values) {
                             const double v = abs_chi(ComplexPoint(0.5, t));
                             if (std::isnan(worst_t) || std::abs(v - 1.0) > std::abs(worst - 1.0)) {
                                 worst = v;
                                 worst_t = t;
                             }
                         }
                         return Outcome{worst, 1.0, "worst at t = " + fmt("%.12g", worst_t)};
                     }});
        c.push_back({{"zeta_slope_line",
                      "Re(zeta'/zeta) vs (1/2)|chi|' on the critical line at t = 200",
                      ToleranceRule::Absolute, 2e-7, false},
                     [](Context&) {
                         const ComplexPoint s(0.5, 200.0);
                         return Outcome{zeta_log_deriv(s).real(), 0.5 * abs_chi_slope(s),
                                        "reference values -1.7302196 / -1.7302197"};
                     }});
        c.push_back({{"recip_sum_B",
                      "truncated sum over zeros of Re(1/(s-rho) + 1/rho) at 1/2 + 200i vs -B",
                      ToleranceRule::Absolute, 5e-5, true},
                     [](Context& ctx) {
                         const SumResult r =
                             hadamard_sum(ComplexPoint(0.5, 200.0), ctx.zeros(), true);
                         const double target = -b_constant();
                         const bool brackets = r.value <= target && target <= r.value + r.tail_estimate;
                         return Outcome{r.value, target,
                                        std::to_string(r.terms_used) + " zeros, tail estimate " +
                                            fmt("%.6g", r.tail_estimate) +
                                            (brackets ? ", value + tail brackets -B"
                                                      : ", value + tail does NOT bracket -B")};
                     }});
        c.push_back({{"k2_convexity",
                      "Re(zeta''/zeta - (zeta'/zeta)^2) vs -K(2, s) at 1/2 + 200i",
                      ToleranceRule::Absolute, 1e-5, true},
                     [](Context& ctx) {
                         const ComplexPoint s(0.5, 200.0);
                         const LogDerivBundle b = zeta_log_bundle(s);
                         const Complex L = b.zeta_prime_over_zeta;
                         const double lhs = (b.zeta_second_over_zeta - L * L).real();
                         const SumResult k = k_sum(2, s, ctx.zeros());
                         return Outcome{lhs, -k.value,
                                        "K(2,s) over " + std::to_string(k.terms_used) + " zeros"};
                     }});
        c.push_back({{"slope_hadamard_200",
                      "|zeta|' from |zeta| Re(zeta'/zeta) vs Hadamard zero sum at 0.1 + 200i",
                      ToleranceRule::Absolute, 1e-5, true},
                     [](Context& ctx) { return hadamard_slope_check(ctx, 0.1, 200.0); }});
        c.push_back({{"slope_hadamard_9291_left",
                      "|zeta|' direct vs Hadamard zero sum at 0.1 + 9291.071149949i",
                      ToleranceRule::Relative, 5e-5, true},
                     [](Context& ctx) { return hadamard_slope_check(ctx, 0.1, kNearZeroHeight); }});
        c.push_back({{"slope_hadamard_9291_right",
                      "|zeta|' direct vs Hadamard zero sum at 0.9 + 9291.071149949i",
                      ToleranceRule::Relative, 5e-5, true},
                     [](Context& ctx) { return hadamard_slope_check(ctx, 0.9, kNearZeroHeight); }});
        c.push_back({{"lemma42_inequality",
                      "violations of |zeta(s)| >= |zeta(1 - conj s)| for sigma <= 1/2 on the scan grid",
                      ToleranceRule::Absolute, 0.0, false},
                     [](Context& ctx) { return scan_check(ctx, ScanProperty::ModulusReflection); }});
        c.push_back({{"lemma46_convexity_scan",
                      "violations of (Re zeta'/zeta)^2 - K(2, s) > 0 on the critical line",
                      ToleranceRule::Absolute, 0.0, true},
                     [](Context& ctx) { return scan_check(ctx, ScanProperty::LineConvexity); }});
        c.push_back({{"lemma48_slope_scan",
                      "violations of Hadamard |zeta|' < 0 for 0 < sigma < 1/2 on the scan grid",
                      ToleranceRule::Absolute, 0.0, true},
                     [](Context& ctx) { return scan_check(ctx, ScanProperty::LeftHalfSlope); }});
        c.push_back({{"conjecture_stat",
                      "sum 2 sigma_n/(sigma_n^2 + t_n^2) vs its approximation sum 2 sigma_n/t_n^2",
                      ToleranceRule::Absolute, 1e-5, true},
                     [](Context& ctx) {
                         const ConjectureStatistic st = conjecture_statistic(ctx.zeros());
                         return Outcome{st.exact, st.approx,
                                        "relative gap " + fmt("%.3g", std::abs(st.exact - st.approx) / st.exact)};
                     }});
        return c;
    }();
    return registry;
}

const Check& find_check(const std::string& id) {
    for (const auto& c : checks())
        if (c.info.id == id)
            return c;
    throw UnknownCheckError("unknown check '" + id + "'");
}

void validate_overrides(const RunConfig& config) {
    for (const auto& [id, tol] : config.tolerance_overrides) {
        find_check(id);
        if (!(tol >= 0.0) || !std::isfinite(tol))
            throw DomainError("tolerance override for " + id + " must be finite and >= 0");
    }
}

CheckRow execute(const Check& check, Context& ctx) {
    CheckRow row;
    row.check_id = check.info.id;
    row.description = check.info.description;
    row.tolerance = check.info.default_tolerance;
    if (const auto it = ctx.config().tolerance_overrides.find(check.info.id);
        it != ctx.config().tolerance_overrides.end())
        row.tolerance = it->second;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome out = check.run(ctx);
        row.lhs = out.lhs;
        row.rhs = out.rhs;
        row.note = out.note;
        row.abs_dev = std::abs(out.lhs - out.rhs);
        row.rel_dev = out.rhs != 0.0 ? row.abs_dev / std::abs(out.rhs) : row.abs_dev;
        const double dev =
            check.info.rule == ToleranceRule::Absolute ? row.abs_dev : row.rel_dev;
        row.pass = dev <= row.tolerance;
    } catch (const Error& e) {
        row.lhs = row.rhs = row.abs_dev = row.rel_dev = kNaN;
        row.pass = false;
        row.note = std::string(e.kind()) + ": " + e.what();
    }
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return row;
}

ComplexPoint scan_point(double sigma, double t) { return {sigma, t}; }

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "text")
        return OutputFormat::Text;
    throw DomainError("unknown output format '" + name + "' (json, csv, text)");
}

std::vector<double> GridSpec::sigma_axis() const { return axis(sigma_from, sigma_to, sigma_step); }

std::vector<double> GridSpec::t_axis() const { return axis(t_from, t_to, t_step); }

void GridSpec::validate() const {
    if (!(sigma_step > 0.0) || !(t_step > 0.0))
        throw DomainError("grid steps must be positive");
    if (!(sigma_from <= sigma_to) || !(t_from <= t_to))
        throw DomainError("grid ranges must be ascending");
    if (sigma_from < 0.0 || sigma_to > 1.0)
        throw RangeError("grid sigma range must lie within [0, 1]");
    if (t_from < 2.0 * kPi - 1e-9 || t_to > kMaxZetaHeight)
        throw RangeError("grid t range must lie within [2 pi, 10000]");
}

void RunConfig::validate() const {
    grid.validate();
    scan_grid.validate();
    for (double t : t_values)
        if (!(t > 0.0 && t <= kMaxZetaHeight))
            throw RangeError("t_values must lie in (0, 10000]");
}

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& c : checks())
            v.push_back(c.info);
        return v;
    }();
    return infos;
}

CheckRow run_check(const std::string& check_id, const RunConfig& config) {
    const Check& check = find_check(check_id);
    config.validate();
    validate_overrides(config);
    if (check.info.needs_zeros && !config.zero_table_path)
        throw MissingDataError("check '" + check_id + "' needs a zero table");
    Context ctx(config, nullptr);
    return execute(check, ctx);
}

std::vector<CheckRow> run_all(const RunConfig& config) {
    config.validate();
    validate_overrides(config);
    Context ctx(config, nullptr);
    std::vector<CheckRow> rows;
    for (const auto& check : checks())
        rows.push_back(execute(check, ctx));
    return rows;
}

bool all_passed(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

SurfaceGrid emit_chi_surface(const RunConfig& config) {
    config.grid.validate();
    SurfaceGrid g;
    g.sigma_axis = config.grid.sigma_axis();
    g.t_axis = config.grid.t_axis();
    g.values.reserve(g.sigma_axis.size() * g.t_axis.size());
    for (double t : g.t_axis)
        for (double sigma : g.sigma_axis)
            g.values.push_back(abs_chi(ComplexPoint(sigma, t)));
    return g;
}

void write_surface(const SurfaceGrid& grid, OutputFormat format, std::ostream& out) {
    char buf[128];
    switch (format) {
    case OutputFormat::Csv:
    case OutputFormat::Text:
        out << "sigma,t,abs_chi\n";
        for (std::size_t i = 0; i < grid.t_axis.size(); ++i)
            for (std::size_t j = 0; j < grid.sigma_axis.size(); ++j) {
                std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", grid.sigma_axis[j],
                              grid.t_axis[i], grid.at(i, j));
                out << buf;
            }
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        auto rounded = [](const std::vector<double>& v) {
            std::vector<double> r;
            for (double x : v)
                r.push_back(round_sig12(x));
            return r;
        };
        j["sigma_axis"] = rounded(grid.sigma_axis);
        j["t_axis"] = rounded(grid.t_axis);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < grid.t_axis.size(); ++i) {
            std::vector<double> row(grid.values.begin() + static_cast<long>(i * grid.sigma_axis.size()),
                                    grid.values.begin() + static_cast<long>((i + 1) * grid.sigma_axis.size()));
            rows.push_back(rounded(row));
        }
        j["values"] = rows;
        out << j.dump() << "\n";
        break;
    }
    }
}

ScanReport scan_region(ScanProperty property, const RunConfig& config) {
    if (property == ScanProperty::ModulusReflection && !config.zero_table_path)
        return scan_region(property, config, nullptr);
    if (!config.zero_table_path)
        throw MissingDataError("this scan needs a zero table");
    const ZeroTable zeros = load_zero_table(*config.zero_table_path);
    return scan_region(property, config, &zeros);
}

ScanReport scan_region(ScanProperty property, const RunConfig& config, const ZeroTable* zeros) {
    config.scan_grid.validate();
    if (property != ScanProperty::ModulusReflection && !zeros)
        throw MissingDataError("this scan needs a zero table");

    std::vector<ComplexPoint> points;
    const auto sigmas = config.scan_grid.sigma_axis();
    for (double t : config.scan_grid.t_axis()) {
        switch (property) {
        case ScanProperty::ModulusReflection:
            for (double sigma : sigmas)
                if (sigma > 0.0 && sigma <= 0.5)
                    points.push_back(scan_point(sigma, t));
            break;
        case ScanProperty::LineConvexity:
            points.push_back(scan_point(0.5, t));
            break;
        case ScanProperty::LeftHalfSlope:
            for (double sigma : sigmas)
                if (sigma > 0.0 && sigma < 0.5)
                    points.push_back(scan_point(sigma, t));
            break;
        }
    }

    ScanReport rep;
    for (const auto& s : points) {
        if (zeros && zeros->distance_to_nearest(s.t()) < kScanExclusionRadius) {
            rep.excluded.push_back(s);
            continue;
        }
        CheckRow row;
        row.check_id = describe(s);
        const auto start = std::chrono::steady_clock::now();
        try {
            switch (property) {
            case ScanProperty::ModulusReflection: {
                row.lhs = std::abs(zeta(s));
                row.rhs = std::abs(zeta(ComplexPoint(1.0 - s.sigma(), s.t())));
                row.tolerance = 1e-10 * std::max(1.0, row.rhs);
                row.pass = row.lhs >= row.rhs - row.tolerance;
                row.description = "|zeta(s)| >= |zeta(1 - conj s)|";
                break;
            }
            case ScanProperty::LineConvexity: {
                const double L = zeta_log_deriv(s).real();
                row.lhs = L * L - k_sum(2, s, *zeros).value;
                row.rhs = 0.0;
                row.pass = row.lhs > 0.0;
                row.description = "(Re zeta'/zeta)^2 - K(2, s) > 0";
                break;
            }
            case ScanProperty::LeftHalfSlope: {
                // sign convention: rows report rhs - lhs >= 0 as the margin
                row.lhs = 0.0;
                row.rhs = abs_zeta_slope_hadamard(s, *zeros);
                row.pass = row.rhs < 0.0;
                row.description = "0 > Hadamard |zeta|'";
                break;
            }
            }
            row.abs_dev = std::abs(row.lhs - row.rhs);
            row.rel_dev = row.rhs != 0.0 ? row.abs_dev / std::abs(row.rhs) : row.abs_dev;
        } catch (const Error& e) {
            row.lhs = row.rhs = row.abs_dev = row.rel_dev = kNaN;
            row.pass = false;
            row.note = std::string(e.kind()) + ": " + e.what();
        }
        row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

double round_sig12(double x) {
    if (!std::isfinite(x) || x == 0.0)
        return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

void write_report(const std::vector<CheckRow>& rows, OutputFormat format, std::ostream& out) {
    auto num = [](double x) -> nlohmann::ordered_json {
        if (!std::isfinite(x))
            return nullptr;
        return round_sig12(x);
    };
    switch (format) {
    case OutputFormat::Json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["check_id"] = r.check_id;
            j["lhs"] = num(r.lhs);
            j["rhs"] = num(r.rhs);
            j["abs_dev"] = num(r.abs_dev);
            j["rel_dev"] = num(r.rel_dev);
            j["tolerance"] = num(r.tolerance);
            j["pass"] = r.pass;
            j["runtime_ms"] = r.runtime_ms;
            j["description"] = r.description;
            j["note"] = r.note;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
        break;
    }
    case OutputFormat::Csv: {
        auto quote = [](const std::string& s) {
            std::string q = "\"";
            for (char c : s)
                q += (c == '"') ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        };
        auto g = [](double x) { return std::isfinite(x) ? fmt("%.12g", x) : std::string(); };
        out << "check_id,lhs,rhs,abs_dev,rel_dev,tolerance,pass,runtime_ms,description,note\n";
        for (const auto& r : rows)
            out << r.check_id << ',' << g(r.lhs) << ',' << g(r.rhs) << ',' << g(r.abs_dev) << ','
                << g(r.rel_dev) << ',' << g(r.tolerance) << ',' << (r.pass ? "true" : "false")
                << ',' << r.runtime_ms << ',' << quote(r.description) << ',' << quote(r.note)
                << '\n';
        break;
    }
    case OutputFormat::Text: {
        char buf[256];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%-4s %-26s lhs=%-20.12g rhs=%-20.12g dev=%-10.3g tol=%.3g",
                          r.pass ? "PASS" : "FAIL", r.check_id.c_str(), r.lhs, r.rhs,
                          r.abs_dev, r.tolerance);
            out << buf;
            if (!r.note.empty())
                out << "  (" << r.note << ")";
            out << '\n';
        }
        std::size_t passed = static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; }));
        out << passed << "/" << rows.size() << " checks passed\n";
        break;
    }
    }
}

}  // namespace zv
