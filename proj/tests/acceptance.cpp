// Acceptance suite: one line per criterion, exit status 1 if any criterion
// fails. Criteria that need the 100 000-zero table are skipped (not failed)
// when it is absent; the table comes from $ZETA_ZEROS_PATH or the build's
// generated default.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "zetaverify/chi.hpp"
#include "zetaverify/errors.hpp"
#include "zetaverify/zeros.hpp"
#include "zetaverify/zeta.hpp"

using zv::Complex;
using zv::ComplexPoint;

namespace {

constexpr double kT1 = 14.134725;
constexpr double kNearZero = 9291.071149949;
constexpr std::size_t kFullTable = 100000;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    // records a bounded comparison and folds it into the verdict
    void expect(const std::string& what, double value, double target, double tol, bool relative = false) {
        const double dev = relative ? std::abs(value - target) / std::abs(target) : std::abs(value - target);
        const bool ok = dev <= tol;
        pass = pass && ok;
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s%s=%.10g (target %.10g, %s dev %.2e%s)", sep(), what.c_str(), value,
                      target, relative ? "rel" : "abs", dev, ok ? "" : " OUT OF TOLERANCE");
        detail << buf;
    }
    void require(const std::string& what, bool ok) {
        pass = pass && ok;
        detail << sep() << what << (ok ? "" : " [violated]");
    }
    void note(const std::string& text) { detail << sep() << text; }

private:
    const char* sep() {
        const char* s = first_ ? "" : "; ";
        first_ = false;
        return s;
    }
    bool first_ = true;
};

std::string zeros_path() {
    if (const char* env = std::getenv("ZETA_ZEROS_PATH"); env && *env)
        return env;
    return ZV_DEFAULT_ZEROS;
}

const zv::ZeroTable* full_table() {
    static std::optional<zv::ZeroTable> table;
    static bool tried = false;
    if (!tried) {
        tried = true;
        const std::string path = zeros_path();
        if (std::filesystem::exists(path)) {
            auto t = zv::load_zero_table(path);
            if (t.count() >= kFullTable)
                table = std::move(t);
        }
    }
    return table ? &*table : nullptr;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

void unit_modulus(Verdict& v) {
    double worst = 0.0;
    for (double t : {kT1, 100.0, 200.0, kNearZero})
        worst = std::max(worst, std::abs(zv::abs_chi({0.5, t}) - 1.0));
    v.expect("max ||chi|-1|", worst, 0.0, 1e-10);
}

void slope_fd(Verdict& v) {
    const ComplexPoint s(0.5, kT1);
    const double fd = zv::fd_derivative([](const ComplexPoint& p) { return zv::abs_chi(p); }, s, 1e-5, 1);
    v.expect("fd |chi|'", fd, zv::abs_chi_slope(s), 1e-6, true);
}

void boundary_bound(Verdict& v) {
    v.expect("|chi(0+14.134725i)|", zv::abs_chi({0.0, kT1}), std::sqrt(kT1 / (2 * zv::kPi)), 1e-6, true);
}

void second_derivative(Verdict& v) {
    const ComplexPoint s(0.5, 200.0);
    const double fd =
        zv::fd_derivative([](const ComplexPoint& p) { return zv::abs_chi_slope(p); }, s, 1e-5, 1);
    v.expect("closed form |chi|''", zv::abs_chi_kth(s, 2), fd, 1e-6, true);
}

void line_checkpoint(Verdict& v) {
    const ComplexPoint s(0.5, 200.0);
    const double lhs = zv::zeta_log_deriv(s).real();
    const double rhs = 0.5 * zv::abs_chi_slope(s);
    v.expect("Re zeta'/zeta", lhs, -1.7302196, 1e-6);
    v.expect("0.5|chi|'", rhs, -1.7302197, 1e-6);
    v.expect("difference", lhs - rhs, 0.0, 2e-7);
}

void recip_sum(Verdict& v, const zv::ZeroTable& z) {
    const auto r = zv::hadamard_sum({0.5, 200.0}, z, true, kFullTable);
    const double target = -zv::b_constant();
    v.expect("zero sum", r.value, 0.023073645, 1e-7);
    v.expect("-B", target, 0.0230957, 5e-8);
    char buf[96];
    std::snprintf(buf, sizeof buf, "tail %.4g", r.tail_estimate);
    v.note(buf);
    v.require("value <= -B <= value + tail", r.value <= target && target <= r.value + r.tail_estimate);
}

void k2(Verdict& v, const zv::ZeroTable& z) {
    const ComplexPoint s(0.5, 200.0);
    const double k = zv::k_sum(2, s, z, kFullTable).value;
    const Complex L = zv::zeta_log_deriv(s);
    const double lhs = (zv::zeta_second_ratio(s) - L * L).real();
    v.expect("K(2,s)", k, -1.4511540, 1e-6);
    v.expect("Re(zeta''/zeta-(zeta'/zeta)^2)", lhs, 1.4511544, 1e-5);
    v.expect("closure", lhs + k, 0.0, 1e-5);
}

void slope_200(Verdict& v, const zv::ZeroTable& z) {
    const ComplexPoint s(0.1, 200.0);
    v.expect("direct", zv::abs_zeta_slope(s), -28.52551836, 1e-5);
    v.expect("zero-sum route", zv::abs_zeta_slope_hadamard(s, z), -28.52551645, 1e-4);
    v.expect("zero sum", zv::hadamard_sum(s, z, false).value, -0.55098684, 1e-6);
}

void slope_9291(Verdict& v, const zv::ZeroTable& z) {
    const ComplexPoint left(0.1, kNearZero), right(0.9, kNearZero);
    v.expect("left direct", zv::abs_zeta_slope(left), -199.4723, 5e-4, true);
    v.expect("left zero-sum route", zv::abs_zeta_slope_hadamard(left, z), -199.4719, 5e-4, true);
    v.expect("right direct", zv::abs_zeta_slope(right), 0.2958258, 5e-4, true);
    v.expect("right zero-sum route", zv::abs_zeta_slope_hadamard(right, z), 0.2958254, 5e-4, true);
    const double hl = zv::hadamard_sum(left, z, false).value;
    const double hr = zv::hadamard_sum(right, z, false).value;
    v.expect("zero sum left", hl, -3.8557529, 1e-5);
    v.expect("zero sum right", hr, 3.8557529, 1e-5);
    v.require("sign flip", hl < 0 && hr > 0);
}

void zero_finder(Verdict& v) {
    const auto one = zv::find_zeros(14.0, 15.0, 0.25);
    v.require("one zero in [14,15]", one.size() == 1);
    if (one.size() == 1)
        v.expect("first zero", one[0], 14.134725, 1e-5);

    const zv::ZeroTable* big = full_table();
    const zv::ZeroTable table =
        big ? big->prefix(100) : zv::load_zero_table(std::string(ZV_TEST_DATA_DIR) + "/zeros_first100.txt");
    v.note(big ? "reference: ingested 100k table" : "reference: bundled 100-zero table");
    const auto found = zv::find_zeros(14.0, table.ordinates()[99] + 0.5, 0.25);
    v.require("at least 100 zeros found", found.size() >= 100);
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(100, found.size()); ++i)
        worst = std::max(worst, std::abs(found[i] - table.ordinates()[i]));
    v.expect("max |found - table| over first 100", worst, 0.0, 1e-6);
}

void properties(Verdict& v) {
    std::size_t n = 0, bad = 0;
    auto tally = [&](bool ok) {
        ++n;
        bad += ok ? 0 : 1;
    };
    for (double t : {10.0, 50.0, 200.0, 1000.0, kNearZero})
        for (double sigma = 0.05; sigma < 1.0; sigma += 0.15) {
            const ComplexPoint s(sigma, t);
            const Complex z = zv::zeta(s);
            // absolute floor: 0.5 + 9291.07i sits on a zero
            tally(std::abs(z - zv::chi(s) * zv::zeta(ComplexPoint(1 - sigma, -t))) <
                  1e-10 * std::max(1.0, std::abs(z)));
            tally(zv::zeta(s.conj()) == std::conj(zv::zeta(s)));
            tally(std::abs(zv::chi(s.conj()) - std::conj(zv::chi(s))) <= 1e-14 * std::abs(zv::chi(s)));
        }
    const zv::ZetaEvalStrategy eta{zv::ZetaMethod::EtaAccelerated, std::nullopt, {}};
    const zv::ZetaEvalStrategy em{zv::ZetaMethod::EulerMaclaurin, std::nullopt, {}};
    for (double t : {10.0, 30.0, 50.0})
        for (double sigma : {0.1, 0.5, 0.9})
            tally(rel(zv::zeta({sigma, t}, eta), zv::zeta({sigma, t}, em)) < 1e-10);
    for (double t : {10.0, kT1, 100.0, 200.0, kNearZero})
        tally(std::abs(zv::abs_chi({0.5, t}) - 1.0) <= 1e-10);
    for (double t : {10.0, 50.0, 200.0}) {
        double prev = zv::abs_chi({0.0, t});
        for (int i = 1; i <= 20; ++i) {
            const double cur = zv::abs_chi({i / 20.0, t});
            tally(cur < prev);
            prev = cur;
        }
        for (double sigma : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const ComplexPoint s(sigma, t);
            for (int k = 1; k <= 8; ++k)
                tally((zv::abs_chi_kth(s, k) < 0) == (k % 2 == 1));
            for (int k = 1; k <= 4; ++k) {
                const double a = zv::abs_chi_kth(s, k + 1) * zv::abs_chi(s);
                const double b = zv::abs_chi_kth(s, k) * zv::abs_chi_slope(s);
                tally(std::abs(a / b - 1.0) <= 1e-9);
            }
        }
    }
    for (double sigma : {0.1, 0.5, 0.9}) {
        const ComplexPoint s(sigma, 200.0);
        const double d1 = zv::fd_derivative([](const ComplexPoint& p) { return zv::abs_chi(p); }, s, 1e-5, 1);
        const double d2 = zv::fd_derivative([](const ComplexPoint& p) { return zv::abs_chi_slope(p); }, s, 1e-5, 1);
        tally(std::abs(d1 / zv::abs_chi_kth(s, 1) - 1.0) <= 1e-6);
        tally(std::abs(d2 / zv::abs_chi_kth(s, 2) - 1.0) <= 1e-6);
    }
    v.note(std::to_string(n) + " properties checked");
    v.expect("violations", static_cast<double>(bad), 0.0, 0.0);
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + ZV_CLI_PATH + "\" " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe)
        throw zv::MissingDataError("cannot run " + cmd);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get()))
        out.append(buf.data(), n);
    return out;
}

void determinism(Verdict& v) {
    const std::string table =
        full_table() ? zeros_path() : std::string(ZV_TEST_DATA_DIR) + "/zeros_first100.txt";
    const std::string args = "verify --format json --zeros \"" + table + "\"";
    const std::regex runtime("\"runtime_ms\": [0-9]+");
    const std::string a = std::regex_replace(run_cli(args), runtime, "\"runtime_ms\": _");
    const std::string b = std::regex_replace(run_cli(args), runtime, "\"runtime_ms\": _");
    v.note(std::to_string(a.size()) + " bytes");
    v.require("non-empty report", a.find("check_id") != std::string::npos);
    v.require("byte-identical modulo runtime_ms", a == b);
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    bool needs_table;
    std::function<void(Verdict&)> run;
};

}  // namespace

int main() {
    auto with_table = [](void (*f)(Verdict&, const zv::ZeroTable&)) {
        return [f](Verdict& v) { f(v, *full_table()); };
    };
    const std::vector<Criterion> criteria = {
        {1, "critical-line unit modulus", 1, false, unit_modulus},
        {2, "chi slope formula vs finite difference", 1, false, slope_fd},
        {3, "boundary bound at sigma = 0", 1, false, boundary_bound},
        {4, "second-derivative closed form", 1, false, second_derivative},
        {5, "critical-line log-derivative checkpoint", 5, false, line_checkpoint},
        {6, "reciprocal-zero sum vs -B", 10, true, with_table(recip_sum)},
        {7, "K(2) convexity closure", 10, true, with_table(k2)},
        {8, "slope duality at 0.1+200i", 10, true, with_table(slope_200)},
        {9, "large-t slope checks", 60, true, with_table(slope_9291)},
        {10, "zero finder", 120, false, zero_finder},
        {11, "property suite", 120, false, properties},
        {12, "report determinism", 30, false, determinism},
    };

    const bool have_table = full_table() != nullptr;
    int failed = 0, skipped = 0;
    for (const auto& c : criteria) {
        if (c.needs_table && !have_table) {
            ++skipped;
            std::printf("SKIP %2d %-42s zero table with >= %zu entries not found at %s\n", c.id, c.name,
                        kFullTable, zeros_path().c_str());
            continue;
        }
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const zv::Error& e) {
            v.require(std::string(e.kind()) + ": " + e.what(), false);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s)
            v.require("runtime budget " + std::to_string(int(c.budget_s)) + " s", false);
        if (!v.pass)
            ++failed;
        std::printf("%s %2d %-42s [%.2fs] %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    v.detail.str().c_str());
    }
    std::printf("%zu criteria: %zu passed, %d failed, %d skipped\n", criteria.size(),
                criteria.size() - failed - skipped, failed, skipped);
    return failed ? 1 : 0;
}
