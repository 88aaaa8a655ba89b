#include "zetaverify/specfun.hpp"

#include <array>
#include <cmath>

#include "zetaverify/summation.hpp"

namespace zv {

namespace {

constexpr double kShiftThreshold = 10.0;

// B_{2k} for k = 1..8.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,      -1.0 / 30.0,   1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0, 7.0 / 6.0,     -3617.0 / 510.0,
};

bool is_pole(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

void require_not_pole(Complex z, const char* fn) {
    checked(z);
    if (is_pole(z))
        throw PoleError(std::string(fn) + ": pole at non-positive integer " +
                        std::to_string(z.real()));
}

int shift_count(Complex z) {
    if (z.real() >= kShiftThreshold)
        return 0;
    return static_cast<int>(std::ceil(kShiftThreshold - z.real()));
}

// All three functions satisfy f(conj z) = conj f(z); evaluate on Im >= 0 only.
template <typename F>
Complex upper_half(Complex z, F&& f) {
    if (z.imag() < 0.0)
        return std::conj(f(std::conj(z)));
    return f(z);
}

Complex log_gamma_upper(Complex z) {
    const int n = shift_count(z);
    CompensatedSum<Complex> shift;
    for (int k = 0; k < n; ++k)
        shift += std::log(z + static_cast<double>(k));
    const Complex w = z + static_cast<double>(n);

    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex pw = inv;
    CompensatedSum<Complex> series;
    series += (w - 0.5) * std::log(w);
    series += -w;
    series += 0.5 * kLog2Pi;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        const double two_k = 2.0 * static_cast<double>(k);
        series += kBernoulli[k - 1] / (two_k * (two_k - 1.0)) * pw;
        pw *= inv2;
    }
    return series.value() - shift.value();
}

Complex digamma_upper(Complex z) {
    const int n = shift_count(z);
    CompensatedSum<Complex> shift;
    for (int k = 0; k < n; ++k)
        shift += 1.0 / (z + static_cast<double>(k));
    const Complex w = z + static_cast<double>(n);

    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex pw = inv2;
    CompensatedSum<Complex> series;
    series += std::log(w);
    series += -0.5 * inv;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        series += -kBernoulli[k - 1] / (2.0 * static_cast<double>(k)) * pw;
        pw *= inv2;
    }
    return series.value() - shift.value();
}

Complex trigamma_upper(Complex z) {
    const int n = shift_count(z);
    CompensatedSum<Complex> shift;
    for (int k = 0; k < n; ++k) {
        const Complex d = z + static_cast<double>(k);
        shift += 1.0 / (d * d);
    }
    const Complex w = z + static_cast<double>(n);

    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex pw = inv2 * inv;
    CompensatedSum<Complex> series;
    series += inv;
    series += 0.5 * inv2;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        series += kBernoulli[k - 1] * pw;
        pw *= inv2;
    }
    return series.value() + shift.value();
}

// log sinh(x) for x > 0 without overflow.
double log_sinh(double x) {
    if (x < 20.0)
        return std::log(std::sinh(x));
    return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

double log_cosh(double x) {
    x = std::abs(x);
    if (x < 20.0)
        return std::log(std::cosh(x));
    return x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0);
}

}  // namespace

void AccuracyBudget::validate() const {
    if (!(target_rel_err > 0.0 && target_rel_err < 1e-3))
        throw DomainError("AccuracyBudget: target_rel_err must lie in (0, 1e-3)");
    if (max_terms < 16)
        throw DomainError("AccuracyBudget: max_terms must be >= 16");
}

Complex log_gamma(Complex z) {
    require_not_pole(z, "log_gamma");
    return upper_half(z, log_gamma_upper);
}

Complex digamma(Complex z) {
    require_not_pole(z, "digamma");
    return upper_half(z, digamma_upper);
}

Complex trigamma(Complex z) {
    require_not_pole(z, "trigamma");
    return upper_half(z, trigamma_upper);
}

double abs_gamma_closed(GammaClosedForm form, double t) {
    if (!std::isfinite(t))
        throw DomainError("abs_gamma_closed: t must be finite");
    const double pt = kPi * t;
    switch (form) {
    case GammaClosedForm::AtHalf:
        if (t < 0.0)
            throw DomainError("abs_gamma_closed: t must be >= 0 for AtHalf");
        return std::exp(0.5 * (std::log(kPi) - log_cosh(pt)));
    case GammaClosedForm::AtZero:
        if (t <= 0.0)
            throw DomainError("abs_gamma_closed: t must be > 0");
        // |Gamma(-it)|^2 = pi/(t sinh(pi t))
        return std::exp(0.5 * (std::log(kPi) - std::log(t) - log_sinh(pt)));
    case GammaClosedForm::AtOne:
        if (t <= 0.0)
            throw DomainError("abs_gamma_closed: t must be > 0");
        // |Gamma(1-it)|^2 = pi t/sinh(pi t)
        return std::exp(0.5 * (std::log(pt) - log_sinh(pt)));
    }
    throw DomainError("abs_gamma_closed: unknown form");
}

}  // namespace zv
