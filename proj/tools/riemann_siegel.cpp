#include "riemann_siegel.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zv::rs {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kDegree = 96;
constexpr int kSamples = 192;

// Taylor coefficients of Psi(w) = cos(2 pi (w^2 - w - 1/16)) / cos(2 pi w)
// about w = 1/2. Psi is entire; the coefficients come from a discrete Cauchy
// integral on |w - 1/2| = 1, which stays clear of the removable points.
const std::array<double, kDegree + 1>& psi_taylor() {
    static const auto coeffs = [] {
        std::array<double, kDegree + 1> c{};
        std::array<std::complex<double>, kSamples> f{};
        for (int j = 0; j < kSamples; ++j) {
            const double a = 2.0 * kPi * j / kSamples;
            const std::complex<double> w = 0.5 + std::polar(1.0, a);
            f[j] = std::cos(2.0 * kPi * (w * w - w - 1.0 / 16.0)) / std::cos(2.0 * kPi * w);
        }
        for (int n = 0; n <= kDegree; ++n) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < kSamples; ++j)
                acc += f[j] * std::polar(1.0, -2.0 * kPi * n * j / kSamples);
            c[n] = acc.real() / kSamples;
        }
        return c;
    }();
    return coeffs;
}

// Coefficients of the j-th derivative of the Taylor polynomial, j = 0..12,
// truncated where the terms fall below double precision on |x| <= 1/2.
struct PsiDerivativeTables {
    std::array<std::array<double, kDegree + 1>, 13> coeff{};
    std::array<int, 13> degree{};
};

const PsiDerivativeTables& psi_derivative_tables() {
    static const auto tables = [] {
        const auto& c = psi_taylor();
        PsiDerivativeTables tb;
        for (int j = 0; j <= 12; ++j) {
            int deg = j;
            for (int n = j; n <= kDegree; ++n) {
                double falling = 1.0;
                for (int m = 0; m < j; ++m)
                    falling *= static_cast<double>(n - m);
                tb.coeff[j][n - j] = c[n] * falling;
                if (std::abs(tb.coeff[j][n - j]) * std::pow(0.5, n - j) > 1e-19)
                    deg = n;
            }
            tb.degree[j] = deg - j;
        }
        return tb;
    }();
    return tables;
}

// j-th derivative of Psi at p.
double psi_derivative(double p, int j) {
    const auto& tb = psi_derivative_tables();
    const double x = p - 0.5;
    double acc = 0.0;
    for (int n = tb.degree[j]; n >= 0; --n)
        acc = acc * x + tb.coeff[j][n];
    return acc;
}

std::array<double, 5> rs_coefficients(double p) {
    double d[13];
    for (int j = 0; j <= 12; ++j)
        d[j] = psi_derivative(p, j);
    const double pi2 = kPi * kPi, pi4 = pi2 * pi2, pi6 = pi4 * pi2, pi8 = pi4 * pi4;
    return {
        d[0],
        -d[3] / (96.0 * pi2),
        d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi4),
        -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5308416.0 * pi6),
        d[0] / (128.0 * pi2) + 19.0 * d[4] / (24576.0 * pi4) + 11.0 * d[8] / (5898240.0 * pi6) +
            d[12] / (2038431744.0 * pi8),
    };
}

double theta_prime(double t) { return 0.5 * std::log(t / (2.0 * kPi)); }

}  // namespace

double theta_asymptotic(double t) {
    const double it = 1.0 / t, it2 = it * it;
    return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 +
           it * (1.0 / 48.0 + it2 * (7.0 / 5760.0 + it2 * (31.0 / 80640.0 + it2 * (127.0 / 430080.0))));
}

double hardy_Z_rs(double t) {
    if (!(t >= 2.0 * kPi))
        throw std::domain_error("hardy_Z_rs: requires t >= 2 pi");
    const double ratio = t / (2.0 * kPi);
    const double root = std::sqrt(ratio);
    const long N = static_cast<long>(std::floor(root));
    const double p = root - static_cast<double>(N);
    const double th = theta_asymptotic(t);

    static const auto tables = [] {
        std::pair<std::vector<double>, std::vector<double>> tb;
        for (int n = 1; n <= 2048; ++n) {
            tb.first.push_back(std::log(static_cast<double>(n)));
            tb.second.push_back(1.0 / std::sqrt(static_cast<double>(n)));
        }
        return tb;
    }();
    if (N > static_cast<long>(tables.first.size()))
        throw std::domain_error("hardy_Z_rs: t too large for the term tables");
    double main = 0.0;
    for (long n = N; n >= 1; --n)
        main += std::cos(th - t * tables.first[n - 1]) * tables.second[n - 1];
    main *= 2.0;

    const auto C = rs_coefficients(p);
    const double a = 1.0 / root;
    const double rem = C[0] + a * (C[1] + a * (C[2] + a * (C[3] + a * C[4])));
    const double sign = ((N - 1) % 2 == 0) ? 1.0 : -1.0;
    return main + sign * std::pow(ratio, -0.25) * rem;
}

double gram_point(long n) {
    if (n < -1)
        throw std::domain_error("gram_point: n must be >= -1");
    const double target = kPi * static_cast<double>(n);
    // Initial guess from theta ~ (t/2) log(t/(2 pi e)).
    double t = 2.0 * kPi * std::exp(1.0 + std::log(std::max(1.0, (target + kPi / 8.0) / kPi)));
    t = std::max(t, 10.0);
    for (int it = 0; it < 60; ++it) {
        const double step = (theta_asymptotic(t) - target) / theta_prime(t);
        t -= step;
        if (std::abs(step) < 1e-12 * t)
            break;
    }
    return t;
}

namespace {

class ZeroLocator {
public:
    ZeroLocator(const std::function<double(double)>& low_z, double switch_t, double tol,
                ZeroSearchStats& stats)
        : low_z_(low_z), switch_t_(switch_t), tol_(tol), stats_(stats) {}

    double z(double t) const {
        ++stats_.z_evaluations;
        return t < switch_t_ ? low_z_(t) : hardy_Z_rs(t);
    }

    // Illinois-modified regula falsi on a sign-change bracket.
    double polish(double a, double fa, double b, double fb) const {
        int side = 0;
        for (int it = 0; it < 200 && (b - a) > tol_; ++it) {
            double c = (a * fb - b * fa) / (fb - fa);
            if (!(c > a && c < b))
                c = 0.5 * (a + b);
            const double fc = z(c);
            if (fc == 0.0)
                return c;
            if ((fc < 0) == (fa < 0)) {
                a = c;
                fa = fc;
                if (side == -1)
                    fb *= 0.5;
                side = -1;
            } else {
                b = c;
                fb = fc;
                if (side == 1)
                    fa *= 0.5;
                side = 1;
            }
            if (std::abs(b - a) <= tol_)
                break;
        }
        return (a * fb - b * fa) / (fb - fa);
    }

    // Zeros in [ta, tb] given Z at the sample points; `expected` from Rosser's rule.
    void solve_block(std::vector<double> ts, std::vector<double> zs, long expected,
                     std::vector<double>& out) const {
        for (int level = 0;; ++level) {
            long changes = 0;
            for (std::size_t k = 1; k < zs.size(); ++k)
                if ((zs[k] < 0) != (zs[k - 1] < 0))
                    ++changes;
            if (changes >= expected)
                break;
            if (level == 0)
                ++stats_.refined_blocks;
            if (level > 12)
                throw std::runtime_error("Gram block near t = " + std::to_string(ts.front()) +
                                         " missing zeros after refinement");
            std::vector<double> nt, nz;
            for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
                nt.push_back(ts[k]);
                nz.push_back(zs[k]);
                const double mid = 0.5 * (ts[k] + ts[k + 1]);
                nt.push_back(mid);
                nz.push_back(z(mid));
            }
            nt.push_back(ts.back());
            nz.push_back(zs.back());
            ts.swap(nt);
            zs.swap(nz);
        }
        for (std::size_t k = 1; k < zs.size(); ++k)
            if ((zs[k] < 0) != (zs[k - 1] < 0))
                out.push_back(polish(ts[k - 1], zs[k - 1], ts[k], zs[k]));
    }

private:
    const std::function<double(double)>& low_z_;
    double switch_t_;
    double tol_;
    ZeroSearchStats& stats_;
};

}  // namespace

std::vector<double> first_zeros(std::size_t count, const std::function<double(double)>& low_z,
                                double switch_t, double tol, ZeroSearchStats* stats_out) {
    ZeroSearchStats stats;
    ZeroLocator loc(low_z, switch_t, tol, stats);
    std::vector<double> zeros;
    zeros.reserve(count + 16);

    long n = -1;
    std::vector<double> block_t{gram_point(n)};
    std::vector<double> block_z{loc.z(block_t.front())};
    long block_start = n;
    ++stats.gram_points;
    while (zeros.size() < count) {
        ++n;
        const double g = gram_point(n);
        const double zg = loc.z(g);
        ++stats.gram_points;
        block_t.push_back(g);
        block_z.push_back(zg);
        const bool good = (n % 2 == 0) ? zg > 0 : zg < 0;
        if (!good) {
            ++stats.bad_gram_points;
            continue;
        }
        loc.solve_block(block_t, block_z, n - block_start, zeros);
        block_t = {g};
        block_z = {zg};
        block_start = n;
    }
    zeros.resize(count);
    if (stats_out)
        *stats_out = stats;
    return zeros;
}

}  // namespace zv::rs
