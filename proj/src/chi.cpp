#include "zetaverify/chi.hpp"

#include <cmath>

#include "zetaverify/specfun.hpp"
#include "zetaverify/zeta.hpp"

namespace zv {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kLnPi = 1.14472988584940017414342735135305871;
constexpr int kMaxDerivativeOrder = 8;

// log sin(w) for Im(w) >= 0, using sin w = (i/2) e^{-iw} (1 - e^{2iw}).
Complex log_sin_upper(Complex w) {
    const Complex e = std::exp(Complex(0.0, 2.0) * w);
    return Complex(0.0, -1.0) * w + std::log(1.0 - e) + Complex(-kLn2, 0.5 * kPi);
}

Complex log_sin(Complex w) {
    if (w.imag() < 0.0)
        return std::conj(log_sin_upper(std::conj(w)));
    return log_sin_upper(w);
}

void require_strip(const ComplexPoint& s, const char* fn) {
    if (!(s.sigma() >= 0.0 && s.sigma() <= 1.0))
        throw DomainError(std::string(fn) + ": sigma must lie in [0, 1], got " + to_string(s));
    if (s.t() == 0.0 && (s.sigma() == 0.0))
        throw DomainError(std::string(fn) + ": sin(pi s/2) vanishes at s = 0");
}

double theta_asymptotic(double t) {
    return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t);
}

double theta_raw(double t) {
    return -0.5 * log_chi(ComplexPoint(0.5, t)).imag();
}

// Multiple of pi separating the continuous log-chi branch from the usual
// normalization of theta, fixed once at the anchor t = 10.
double theta_branch_offset() {
    static const double offset = [] {
        constexpr double anchor = 10.0;
        return kPi * std::round((theta_asymptotic(anchor) - theta_raw(anchor)) / kPi);
    }();
    return offset;
}

}  // namespace

double StripRegion::t_min() const { return 2.0 * kPi + delta; }

bool StripRegion::contains(const ComplexPoint& s) const {
    return s.sigma() >= sigma_min && s.sigma() <= sigma_max && s.t() > t_min();
}

void StripRegion::validate() const {
    if (!(sigma_min < sigma_max))
        throw DomainError("StripRegion: sigma_min must be < sigma_max");
    if (!(delta > 0.0))
        throw DomainError("StripRegion: delta must be positive");
}

Complex log_chi(const ComplexPoint& point) {
    const Complex s = point.value();
    return s * kLn2 + (s - 1.0) * kLnPi + log_sin(0.5 * kPi * s) + log_gamma(1.0 - s);
}

Complex chi(const ComplexPoint& s) { return std::exp(log_chi(s)); }

double abs_chi(const ComplexPoint& s) { return std::exp(log_chi(s).real()); }

double phi(const ComplexPoint& s) {
    require_strip(s, "phi");
    const double x = 0.5 * kPi * s.sigma();
    const double y = 0.5 * kPi * std::abs(s.t());
    double middle = 0.0;
    if (y < 350.0) {
        const double sx = std::sin(x), sy = std::sinh(y);
        middle = 0.25 * kPi * std::sin(kPi * s.sigma()) / (sx * sx + sy * sy);
    }
    const double psi = digamma(1.0 - s.value()).real();
    return kLog2Pi + middle - psi;
}

double abs_chi_slope(const ComplexPoint& s) { return abs_chi(s) * phi(s); }

double abs_chi_kth(const ComplexPoint& s, int k, const StripRegion& region) {
    if (k < 1 || k > kMaxDerivativeOrder)
        throw DomainError("abs_chi_kth: k must lie in [1, 8]");
    if (!(std::abs(s.t()) > region.t_min()))
        throw DomainError("abs_chi_kth: requires t > 2 pi + delta, got " + to_string(s));
    return abs_chi(s) * std::pow(phi(s), k);
}

ChiProfile chi_profile(const ComplexPoint& s, int k, const StripRegion& region) {
    if (k < 1 || k > kMaxDerivativeOrder)
        throw DomainError("chi_profile: k must lie in [1, 8]");
    if (!(std::abs(s.t()) > region.t_min()))
        throw DomainError("chi_profile: requires t > 2 pi + delta, got " + to_string(s));
    ChiProfile p;
    p.at = s;
    p.abs_chi = abs_chi(s);
    p.phi = phi(s);
    double power = p.abs_chi;
    for (int j = 1; j <= k; ++j) {
        power *= p.phi;
        p.derivs.push_back(power);
    }
    return p;
}

std::pair<double, double> chi_bounds(double t) {
    if (!(t > 0.0))
        throw DomainError("chi_bounds: t must be positive");
    return {std::sqrt(2.0 * kPi / t), std::sqrt(t / (2.0 * kPi))};
}

double hardy_theta(double t) {
    if (!(t > 1.0))
        throw DomainError("hardy_theta: requires t > 1");
    return theta_raw(t) + theta_branch_offset();
}

Complex hardy_Z_complex(double t) {
    const double th = hardy_theta(t);
    return Complex(std::cos(th), std::sin(th)) * zeta(ComplexPoint(0.5, t));
}

double hardy_Z(double t) { return hardy_Z_complex(t).real(); }

double ThetaSweep::advance(double t) {
    if (last_t_ && t < *last_t_)
        throw DomainError("ThetaSweep: t must be non-decreasing");
    const double th = hardy_theta(t);
    if (last_t_ && std::abs(th - last_theta_) > max_step_)
        throw UnwrapError("theta moved by " + std::to_string(th - last_theta_) +
                          " between t = " + std::to_string(*last_t_) + " and " +
                          std::to_string(t) + "; refine the step");
    last_t_ = t;
    last_theta_ = th;
    return th;
}

}  // namespace zv
