#include "zetaverify/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "zetaverify/chi.hpp"
#include "zetaverify/specfun.hpp"
#include "zetaverify/summation.hpp"
#include "zetaverify/zeta.hpp"

namespace zv {

namespace {

constexpr double kBisectionTol = 1e-8;

std::size_t resolve_terms(const ZeroTable& table, std::size_t n_terms) {
    if (table.empty())
        throw EmptyTableError("zero table is empty");
    if (n_terms == 0)
        return table.count();
    if (n_terms > table.count())
        throw DomainError("requested " + std::to_string(n_terms) + " terms but table has " +
                          std::to_string(table.count()));
    return n_terms;
}

// Zero density beyond the table end: the last-decile empirical density at its
// midpoint, continued with the ln(t)/(2 pi) growth of N'(t). `slack` is the
// density shift from an error of +-2 in the zero count across the decile.
struct DensityModel {
    double T = 0.0;
    double density = 0.0;
    double slack = 0.0;

    static DensityModel fit(const std::vector<double>& t, std::size_t n) {
        DensityModel m;
        m.T = t[n - 1];
        const std::size_t decile = n / 10;
        if (decile < 10) {
            m.density = std::log(m.T / (2.0 * kPi)) / (2.0 * kPi);
            m.slack = 2.0 / std::max(1.0, m.T);
            return m;
        }
        const double first = t[n - decile];
        const double span = m.T - first;
        const double mid = 0.5 * (m.T + first);
        m.density = static_cast<double>(decile - 1) / span + std::log(m.T / mid) / (2.0 * kPi);
        m.slack = 2.0 / span;
        return m;
    }

    // integral_T^inf rho(t) t^{-p} dt, rho(t) = density + ln(t/T)/(2 pi)
    double integral(int p, bool with_slack) const {
        const double q = static_cast<double>(p - 1);
        const double Tq = std::pow(T, -q);
        const double rho = density + (with_slack ? slack : 0.0);
        return rho * Tq / q + Tq / (2.0 * kPi * q * q);
    }
};

void check_collision(const ComplexPoint& s, const ZeroTable& table, std::size_t n) {
    const auto& t = table.ordinates();
    const double at = std::abs(s.t());
    const auto it = std::lower_bound(t.begin(), t.begin() + static_cast<long>(n), at);
    for (auto j : {it - 1, it}) {
        if (j < t.begin() || j >= t.begin() + static_cast<long>(n))
            continue;
        const std::size_t idx = static_cast<std::size_t>(j - t.begin());
        const double ds = s.sigma() - table.sigmas()[idx];
        if (std::hypot(ds, at - *j) < kZeroCollisionRadius)
            throw NearZeroError("s = " + to_string(s) + " coincides with table zero " +
                                std::to_string(*j) + "; the sum is singular there");
    }
}

Complex inverse_power(Complex z, int k) {
    Complex p = z;
    for (int j = 1; j < k; ++j)
        p *= z;
    return 1.0 / p;
}

double bisect(double a, double za, double b) {
    while (b - a > kBisectionTol) {
        const double m = 0.5 * (a + b);
        const double zm = hardy_Z(m);
        if (zm == 0.0)
            return m;
        if ((zm < 0) == (za < 0)) {
            a = m;
            za = zm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Golden-section descent on sign*Z over [a, b]; returns interior points at
// which Z changes sign relative to the endpoints (empty if none found).
std::vector<double> close_pair_probe(double a, double b, double sign) {
    constexpr double g = 0.61803398874989484820;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = sign * hardy_Z(x1), f2 = sign * hardy_Z(x2);
    for (int it = 0; it < 60 && (b - a) > 1e-6; ++it) {
        if (f1 < 0.0)
            return {x1};
        if (f2 < 0.0)
            return {x2};
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = sign * hardy_Z(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = sign * hardy_Z(x2);
        }
    }
    return {};
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, std::vector<double> sigmas, std::string source)
    : ordinates_(std::move(ordinates)), sigmas_(std::move(sigmas)), source_(std::move(source)) {
    if (sigmas_.size() != ordinates_.size())
        throw DomainError("ZeroTable: sigma and ordinate lists differ in length");
    for (std::size_t i = 0; i < ordinates_.size(); ++i) {
        if (!std::isfinite(ordinates_[i]) || ordinates_[i] <= kMinZeroOrdinate)
            throw DomainError("ZeroTable: ordinate " + std::to_string(ordinates_[i]) +
                              " below the first zero");
        if (i > 0 && !(ordinates_[i] > ordinates_[i - 1]))
            throw OrderError("ZeroTable: ordinates not strictly ascending at entry " +
                             std::to_string(i + 1));
        if (!(sigmas_[i] > 0.0 && sigmas_[i] < 1.0))
            throw DomainError("ZeroTable: sigma must lie in (0, 1) at entry " +
                              std::to_string(i + 1));
    }
}

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source)
    : ZeroTable(ordinates, std::vector<double>(ordinates.size(), 0.5), std::move(source)) {}

double ZeroTable::mean_sigma(std::size_t n_terms) const {
    const std::size_t n = resolve_terms(*this, n_terms);
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < n; ++i)
        acc += sigmas_[i];
    return acc.value() / static_cast<double>(n);
}

double ZeroTable::distance_to_nearest(double t) const {
    if (ordinates_.empty())
        return std::numeric_limits<double>::infinity();
    const auto it = std::lower_bound(ordinates_.begin(), ordinates_.end(), t);
    double best = std::numeric_limits<double>::infinity();
    if (it != ordinates_.end())
        best = std::abs(*it - t);
    if (it != ordinates_.begin())
        best = std::min(best, std::abs(*(it - 1) - t));
    return best;
}

ZeroTable ZeroTable::prefix(std::size_t n) const {
    n = std::min(n, count());
    return ZeroTable(std::vector<double>(ordinates_.begin(), ordinates_.begin() + static_cast<long>(n)),
                     std::vector<double>(sigmas_.begin(), sigmas_.begin() + static_cast<long>(n)),
                     source_);
}

ZeroTable ingest_zero_table(std::istream& in, const std::string& source) {
    std::vector<double> ts, sigmas;
    std::string line;
    std::size_t lineno = 0;
    auto parse = [&](std::string_view tok, double& out) {
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(out))
            throw FormatError("zero table line " + std::to_string(lineno) + ": cannot parse '" +
                              std::string(tok) + "'");
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string f; fields >> f;)
            tok.push_back(f);
        if (tok.empty())
            continue;
        if (tok.size() > 2)
            throw FormatError("zero table line " + std::to_string(lineno) +
                              ": expected '<ordinate> [sigma]'");
        double t = 0.0, sigma = 0.5;
        parse(tok[0], t);
        if (tok.size() == 2)
            parse(tok[1], sigma);
        if (!(t > kMinZeroOrdinate))
            throw FormatError("zero table line " + std::to_string(lineno) + ": ordinate " + tok[0] +
                              " below the first zero");
        if (!(sigma > 0.0 && sigma < 1.0))
            throw FormatError("zero table line " + std::to_string(lineno) +
                              ": sigma must lie in (0, 1)");
        if (!ts.empty() && !(t > ts.back()))
            throw OrderError("zero table line " + std::to_string(lineno) +
                             ": ordinate not above previous " + std::to_string(ts.back()));
        ts.push_back(t);
        sigmas.push_back(sigma);
    }
    return ZeroTable(std::move(ts), std::move(sigmas), source);
}

ZeroTable ingest_zero_table_text(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return ingest_zero_table(in, source);
}

ZeroTable load_zero_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw MissingDataError("cannot open zero table '" + path + "'");
    return ingest_zero_table(in, path);
}

std::vector<double> find_zeros(double t_min, double t_max, double step) {
    if (!(t_min > 2.0 * kPi && t_min < t_max && t_max <= kMaxZetaHeight))
        throw DomainError("find_zeros: requires 2 pi < t_min < t_max <= 10000");
    if (!(step > 0.0 && step <= 0.5))
        throw DomainError("find_zeros: step must lie in (0, 0.5]");

    ThetaSweep sweep;
    std::vector<double> ts, zs;
    const auto n = static_cast<long>(std::ceil((t_max - t_min) / step - 1e-9));
    for (long i = 0; i <= n; ++i) {
        const double t = std::min(t_max, t_min + static_cast<double>(i) * step);
        sweep.advance(t);
        ts.push_back(t);
        zs.push_back(hardy_Z(t));
    }

    std::vector<double> zeros;
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (zs[i] == 0.0) {
            zeros.push_back(ts[i]);
            continue;
        }
        if (zs[i - 1] != 0.0 && (zs[i] < 0) != (zs[i - 1] < 0))
            zeros.push_back(bisect(ts[i - 1], zs[i - 1], ts[i]));
    }
    // A local minimum of |Z| without a sign change can hide two close zeros.
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
        const bool same = (zs[i - 1] < 0) == (zs[i] < 0) && (zs[i] < 0) == (zs[i + 1] < 0);
        if (!same || zs[i] == 0.0 || std::abs(zs[i]) > std::abs(zs[i - 1]) ||
            std::abs(zs[i]) > std::abs(zs[i + 1]))
            continue;
        const double sign = zs[i] > 0 ? 1.0 : -1.0;
        const auto hit = close_pair_probe(ts[i - 1], ts[i + 1], sign);
        if (hit.empty())
            continue;
        const double m = hit.front();
        const double zm = hardy_Z(m);
        zeros.push_back(bisect(ts[i - 1], zs[i - 1], m));
        zeros.push_back(bisect(m, zm, ts[i + 1]));
    }
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [](double a, double b) { return std::abs(a - b) < 10 * kBisectionTol; }),
                zeros.end());
    return zeros;
}

double b_constant() {
    return std::log(2.0) + 0.5 * std::log(kPi) - 1.0 - 0.5 * kEulerGamma;
}

SumResult sum_recip_zeros(const ZeroTable& table, std::size_t n_terms) {
    const std::size_t n = resolve_terms(table, n_terms);
    const auto& t = table.ordinates();
    const auto& sg = table.sigmas();
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < n; ++i)
        acc += 2.0 * sg[i] / (sg[i] * sg[i] + t[i] * t[i]);
    const auto model = DensityModel::fit(t, n);
    return {acc.value(), n, 2.0 * table.mean_sigma(n) * model.integral(2, true)};
}

SumResult hadamard_sum(const ComplexPoint& s, const ZeroTable& table, bool include_recip,
                       std::size_t n_terms) {
    const std::size_t n = resolve_terms(table, n_terms);
    check_collision(s, table, n);
    const auto& t = table.ordinates();
    const auto& sg = table.sigmas();
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < n; ++i) {
        const double ds = s.sigma() - sg[i];
        const double d1 = s.t() - t[i];
        const double d2 = s.t() + t[i];
        acc += ds / (ds * ds + d1 * d1);
        acc += ds / (ds * ds + d2 * d2);
        if (include_recip)
            acc += 2.0 * sg[i] / (sg[i] * sg[i] + t[i] * t[i]);
    }
    const auto model = DensityModel::fit(t, n);
    const double coeff = include_recip ? 2.0 * std::abs(s.sigma())
                                       : 2.0 * std::abs(s.sigma() - table.mean_sigma(n));
    return {acc.value(), n, coeff * model.integral(2, true)};
}

SumResult k_sum(int k, const ComplexPoint& s, const ZeroTable& table, std::size_t n_terms) {
    if (k < 2 || k > 4)
        throw DomainError("k_sum: k must lie in [2, 4]");
    const std::size_t n = resolve_terms(table, n_terms);
    check_collision(s, table, n);
    const auto& t = table.ordinates();
    const auto& sg = table.sigmas();
    const Complex sv = s.value();
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < n; ++i) {
        acc += inverse_power(sv - Complex(sg[i], t[i]), k).real();
        acc += inverse_power(sv - Complex(sg[i], -t[i]), k).real();
    }
    const auto model = DensityModel::fit(t, n);
    return {acc.value(), n, 2.0 * model.integral(k, true)};
}

double abs_zeta_slope_hadamard(const ComplexPoint& s, const ZeroTable& table,
                               const HadamardSlopeOptions& options) {
    const StripRegion region;
    if (!(std::abs(s.t()) > region.t_min()))
        throw DomainError("abs_zeta_slope_hadamard: requires t > 2 pi + 0.02, got " + to_string(s));
    const SumResult zs = hadamard_sum(s, table, false);

    double gamma_part = 0.0;
    if (options.use_chi_ratio)
        gamma_part = 0.5 * phi(s);
    else
        gamma_part = 0.5 * std::log(kPi) - 0.5 * digamma(0.5 * s.value() + 1.0).real();

    double bracket = gamma_part + zs.value;
    if (options.include_pole_term)
        bracket -= (1.0 / (s.value() - 1.0)).real();
    if (options.tail_correction) {
        const auto model = DensityModel::fit(table.ordinates(), zs.terms_used);
        bracket += 2.0 * (s.sigma() - table.mean_sigma(zs.terms_used)) * model.integral(2, false);
    }
    return std::abs(zeta(s)) * bracket;
}

ConjectureStatistic conjecture_statistic(const ZeroTable& table) {
    const std::size_t n = resolve_terms(table, 0);
    const auto& t = table.ordinates();
    const auto& sg = table.sigmas();
    CompensatedSum<double> approx;
    for (std::size_t i = 0; i < n; ++i)
        approx += 2.0 * sg[i] / (t[i] * t[i]);
    return {sum_recip_zeros(table).value, approx.value()};
}

}  // namespace zv
