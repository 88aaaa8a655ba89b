#include "zetaverify/zeta.hpp"

#include <array>
#include <limits>
#include <cmath>
#include <vector>

#include "zetaverify/summation.hpp"

namespace zv {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr int kMaxEtaTerms = 380;
constexpr int kMinDirichletLength = 20;

// B_{2k}/(2k)! for k = 1..kMaxCorrections.
constexpr int kMaxCorrections = 64;

const std::array<double, kMaxCorrections + 1>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<double, kMaxCorrections + 1> b{};
        constexpr std::array<double, 10> exact = {
            1.0 / 6.0,        -1.0 / 30.0,         1.0 / 42.0,      -1.0 / 30.0,
            5.0 / 66.0,       -691.0 / 2730.0,     7.0 / 6.0,       -3617.0 / 510.0,
            43867.0 / 798.0,  -174611.0 / 330.0,
        };
        for (int k = 1; k <= kMaxCorrections; ++k) {
            if (k <= 10) {
                b[k] = exact[k - 1] / std::tgamma(2.0 * k + 1.0);
            } else {
                // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
                double z2k = 0.0;
                for (int n = 20; n >= 1; --n)
                    z2k += std::pow(static_cast<double>(n), -2.0 * k);
                const double sign = (k % 2 == 1) ? 1.0 : -1.0;
                b[k] = sign * 2.0 * z2k * std::pow(2.0 * kPi, -2.0 * k);
            }
        }
        return b;
    }();
    return table;
}

void validate_point(const ComplexPoint& s) {
    if (s.sigma() == 1.0 && s.t() == 0.0)
        throw PoleError("zeta: pole at s = 1");
    if (!(s.sigma() > 0.0))
        throw DomainError("zeta: requires Re(s) > 0, got " + to_string(s));
    if (std::abs(s.t()) > kMaxZetaHeight)
        throw RangeError("zeta: |Im(s)| exceeds validated range 10000, got " + to_string(s));
}

// n^{-s} along with the log factor used by the derivative terms.
struct DirichletTerm {
    Complex value;
    double log_n;
};

DirichletTerm dirichlet_term(int n, Complex s) {
    const double ln = std::log(static_cast<double>(n));
    const double mag = std::exp(-s.real() * ln);
    const double phase = s.imag() * ln;
    return {Complex(mag * std::cos(phase), -mag * std::sin(phase)), ln};
}

int eta_term_count(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    if (strategy.terms_override)
        return *strategy.terms_override;
    const double t = std::abs(s.t());
    const double need = 0.5 * kPi * t + std::log1p(2.0 * t) -
                        std::log(strategy.budget.target_rel_err) + 4.0;
    return std::max(16, static_cast<int>(std::ceil(need / std::log(3.0 + std::sqrt(8.0)))));
}

// Chebyshev-weighted acceleration of the alternating series
// eta(s) = sum (-1)^k (k+1)^{-s}; zeta = eta / (1 - 2^{1-s}).
ZetaJet zeta_eta(const ComplexPoint& point, const ZetaEvalStrategy& strategy) {
    const int n = eta_term_count(point, strategy);
    if (n < 2 || n > kMaxEtaTerms)
        throw RangeError("zeta: eta path needs " + std::to_string(n) +
                         " terms at " + to_string(point) + "; use Euler-Maclaurin");
    const Complex s = point.value();

    // term_i = n (n+i-1)! 4^i / ((n-i)! (2i)!) ; weight_k = sum_{i>k} term_i / sum_i term_i
    std::vector<double> term(n + 1);
    term[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        term[i] = term[i - 1] * 4.0 * (n + i - 1.0) * (n - i + 1.0) /
                  ((2.0 * i) * (2.0 * i - 1.0));
    }
    std::vector<double> tail(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i)
        tail[i] = tail[i + 1] + term[i + 1];
    const double total = tail[0] + term[0];

    CompensatedSum<Complex> e0, e1, e2;
    for (int k = 0; k < n; ++k) {
        const double w = ((k % 2 == 0) ? 1.0 : -1.0) * tail[k] / total;
        const DirichletTerm d = dirichlet_term(k + 1, s);
        const Complex v = w * d.value;
        e0 += v;
        e1 += -d.log_n * v;
        e2 += d.log_n * d.log_n * v;
    }
    const Complex eta = e0.value(), eta1 = e1.value(), eta2 = e2.value();

    // D = 1 - 2^{1-s}, evaluated with expm1 to keep accuracy near s = 1.
    const Complex a = (1.0 - s) * kLn2;
    const double em = std::expm1(a.real());
    const double sh = std::sin(0.5 * a.imag());
    const Complex pow2(std::exp(a.real()) * std::cos(a.imag()),
                       std::exp(a.real()) * std::sin(a.imag()));
    const Complex d0 = -Complex(em * std::cos(a.imag()) - 2.0 * sh * sh,
                                std::exp(a.real()) * std::sin(a.imag()));
    const Complex d1 = pow2 * kLn2;
    const Complex d2 = -pow2 * kLn2 * kLn2;

    ZetaJet jet;
    jet.value = eta / d0;
    jet.d1 = (eta1 - jet.value * d1) / d0;
    jet.d2 = (eta2 - 2.0 * jet.d1 * d1 - jet.value * d2) / d0;
    return jet;
}

int dirichlet_length(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    if (strategy.terms_override)
        return *strategy.terms_override;
    return std::max(kMinDirichletLength, static_cast<int>(std::ceil(std::abs(s.t()) / kPi)));
}

ZetaJet zeta_euler_maclaurin(const ComplexPoint& point, const ZetaEvalStrategy& strategy) {
    const int N = dirichlet_length(point, strategy);
    if (N < 2)
        throw DomainError("zeta: Euler-Maclaurin length must be >= 2");
    const Complex s = point.value();

    CompensatedSum<Complex> z0, z1, z2;
    for (int n = 1; n < N; ++n) {
        const DirichletTerm d = dirichlet_term(n, s);
        z0 += d.value;
        z1 += -d.log_n * d.value;
        z2 += d.log_n * d.log_n * d.value;
    }

    const DirichletTerm tailTerm = dirichlet_term(N, s);
    const double L = tailTerm.log_n;
    const Complex Ns = tailTerm.value;  // N^{-s}
    const double Nd = static_cast<double>(N);

    // N^{1-s}/(s-1)
    const Complex inv = 1.0 / (s - 1.0);
    const Complex f = Nd * Ns * inv;
    z0 += f;
    z1 += -L * f - f * inv;
    z2 += L * L * f + 2.0 * L * f * inv + 2.0 * f * inv * inv;

    // N^{-s}/2
    z0 += 0.5 * Ns;
    z1 += -0.5 * L * Ns;
    z2 += 0.5 * L * L * Ns;

    // sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    const auto& b = bernoulli_over_factorial();
    const int max_k = std::min(kMaxCorrections, strategy.budget.max_terms);
    Complex P = s, P1 = 1.0, P2 = 0.0;  // rising product and its derivatives
    Complex Npow = Ns / Nd;             // N^{-s-1}
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= max_k; ++k) {
        const Complex c = b[k] * Npow;
        const Complex t0 = c * P;
        const double mag = std::abs(t0);
        if (mag > prev)
            break;
        z0 += t0;
        z1 += c * (P1 - L * P);
        z2 += c * (P2 - 2.0 * L * P1 + L * L * P);
        if (mag <= 1e-18 * std::abs(z0.value()))
            break;
        prev = mag;
        for (int j = 2 * k - 1; j <= 2 * k; ++j) {
            const Complex q = s + static_cast<double>(j);
            P2 = P2 * q + 2.0 * P1;
            P1 = P1 * q + P;
            P = P * q;
        }
        Npow /= Nd * Nd;
    }
    return {z0.value(), z1.value(), z2.value()};
}

}  // namespace

ZetaJet zeta_jet(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    validate_point(s);
    strategy.budget.validate();
    if (s.t() < 0.0) {
        const ZetaJet up = zeta_jet(s.conj(), strategy);
        return {std::conj(up.value), std::conj(up.d1), std::conj(up.d2)};
    }
    ZetaMethod kind = strategy.kind;
    if (kind == ZetaMethod::Auto)
        kind = s.t() <= kAutoEtaMaxHeight ? ZetaMethod::EtaAccelerated : ZetaMethod::EulerMaclaurin;
    return kind == ZetaMethod::EtaAccelerated ? zeta_eta(s, strategy)
                                               : zeta_euler_maclaurin(s, strategy);
}

Complex zeta(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    return zeta_jet(s, strategy).value;
}

LogDerivBundle zeta_log_bundle(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    const ZetaJet jet = zeta_jet(s, strategy);
    if (std::abs(jet.value) <= kNearZeroGuard)
        throw NearZeroError("zeta: |zeta(s)| <= 1e-12 at " + to_string(s) +
                            "; logarithmic derivative undefined at a zero");
    return {jet.value, jet.d1 / jet.value, jet.d2 / jet.value};
}

Complex zeta_log_deriv(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    return zeta_log_bundle(s, strategy).zeta_prime_over_zeta;
}

Complex zeta_second_ratio(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    return zeta_log_bundle(s, strategy).zeta_second_over_zeta;
}

double abs_zeta_slope(const ComplexPoint& s, const ZetaEvalStrategy& strategy) {
    const LogDerivBundle b = zeta_log_bundle(s, strategy);
    return std::abs(b.zeta) * b.zeta_prime_over_zeta.real();
}

double fd_derivative(const RealField& f, const ComplexPoint& s, double h, int order) {
    if (!(h >= 1e-7 && h <= 1e-2))
        throw DomainError("fd_derivative: h must lie in [1e-7, 1e-2]");
    const double fp1 = f(s.shifted_sigma(h));
    const double fm1 = f(s.shifted_sigma(-h));
    const double fp2 = f(s.shifted_sigma(2.0 * h));
    const double fm2 = f(s.shifted_sigma(-2.0 * h));
    switch (order) {
    case 1:
        return (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
    case 2: {
        const double f0 = f(s);
        return (16.0 * (fp1 + fm1) - (fp2 + fm2) - 30.0 * f0) / (12.0 * h * h);
    }
    default:
        throw DomainError("fd_derivative: order must be 1 or 2");
    }
}

}  // namespace zv
