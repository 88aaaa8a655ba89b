#include <cmath>
#include <vector>

#include "doctest.h"
#include "zetaverify/chi.hpp"
#include "zetaverify/errors.hpp"
#include "zetaverify/specfun.hpp"
#include "zetaverify/zeta.hpp"

using zv::Complex;
using zv::ComplexPoint;

namespace {

// chi straight from its definition, fine wherever Gamma(1-s) does not overflow.
Complex chi_direct(const ComplexPoint& s) {
    const Complex z = s.value();
    return std::pow(2.0, z) * std::pow(zv::kPi, z - 1.0) * std::sin(zv::kPi * z / 2.0) *
           std::exp(zv::log_gamma(1.0 - z));
}

double abs_chi_field(const ComplexPoint& p) { return zv::abs_chi(p); }
double slope_field(const ComplexPoint& p) { return zv::abs_chi_slope(p); }

}  // namespace

TEST_CASE("chi against the direct definition") {
    for (double t : {1.0, 10.0, 100.0, 400.0})
        for (double sigma : {0.0, 0.25, 0.5, 1.0}) {
            const ComplexPoint s(sigma, t);
            CHECK(std::abs(zv::chi(s) - chi_direct(s)) < 1e-12 * std::abs(chi_direct(s)));
        }
}

TEST_CASE("chi(s) chi(1-s) = 1") {
    const ComplexPoint s(0.3, 50.0);
    const Complex p = zv::chi(s) * zv::chi(ComplexPoint(0.7, -50.0));
    CHECK(std::abs(p - 1.0) < 1e-10);
    const ComplexPoint far(0.2, 9000.0);
    CHECK(std::abs(zv::chi(far) * zv::chi(ComplexPoint(0.8, -9000.0)) - 1.0) < 1e-10);
}

TEST_CASE("unit modulus on the critical line") {
    for (double t : {10.0, 14.134725, 100.0, 200.0, 9291.071149949})
        CHECK(std::abs(zv::abs_chi({0.5, t}) - 1.0) <= 1e-10);
}

TEST_CASE("large t stays finite in log space") {
    const double t = 9999.0;
    const double a = zv::abs_chi({0.0, t});
    CHECK(std::isfinite(a));
    CHECK(a == doctest::Approx(std::sqrt(t / (2 * zv::kPi))).epsilon(1e-6));
}

TEST_CASE("phi pieces") {
    const ComplexPoint s(0.5, 2 * zv::kPi);
    const double middle = zv::phi(s) - zv::kLog2Pi + zv::digamma(Complex(0.5, -2 * zv::kPi)).real();
    CHECK(middle > 0.0);
    CHECK(middle < 1e-4);
    CHECK(zv::kLog2Pi == doctest::Approx(1.837877067).epsilon(1e-9));
    CHECK(std::abs(zv::phi({0.5, 200.0}) - (-3.4604394)) < 1e-5);
    CHECK_THROWS_AS(zv::phi({-0.1, 20.0}), zv::DomainError);
    CHECK_THROWS_AS(zv::phi({1.1, 20.0}), zv::DomainError);
}

TEST_CASE("slope formula against finite differences") {
    for (double sigma : {0.1, 0.5, 0.9}) {
        for (double t : {14.134725, 200.0}) {
            const ComplexPoint s(sigma, t);
            CAPTURE(sigma);
            CAPTURE(t);
            const double fd1 = zv::fd_derivative(abs_chi_field, s, 1e-5, 1);
            CHECK(std::abs(fd1 / zv::abs_chi_slope(s) - 1.0) <= 1e-6);
        }
        const ComplexPoint s(sigma, 200.0);
        const double fd2 = zv::fd_derivative(slope_field, s, 1e-5, 1);
        CHECK(std::abs(fd2 / zv::abs_chi_kth(s, 2) - 1.0) <= 1e-6);
        const double fd2b = zv::fd_derivative(abs_chi_field, s, 1e-3, 2);
        CHECK(std::abs(fd2b / zv::abs_chi_kth(s, 2) - 1.0) <= 1e-6);
    }
}

TEST_CASE("derivative ladder") {
    for (double sigma : {0.05, 0.5, 0.95}) {
        const ComplexPoint s(sigma, 150.0);
        const double a = zv::abs_chi(s), d1 = zv::abs_chi_slope(s);
        CHECK(zv::abs_chi_kth(s, 1) == d1);
        for (int k = 1; k <= 4; ++k) {
            const double lhs = zv::abs_chi_kth(s, k + 1) * a;
            const double rhs = zv::abs_chi_kth(s, k) * d1;
            CHECK(std::abs(lhs / rhs - 1.0) <= 1e-9);
        }
        for (int k = 1; k <= 8; ++k)
            CHECK((zv::abs_chi_kth(s, k) < 0) == (k % 2 == 1));
        const auto prof = zv::chi_profile(s, 4);
        REQUIRE(prof.derivs.size() == 4);
        CHECK(prof.derivs[2] == doctest::Approx(zv::abs_chi_kth(s, 3)));
        CHECK(prof.phi == doctest::Approx(zv::phi(s)));
    }
    CHECK(zv::abs_chi_kth({0.5, 200.0}, 2) ==
          doctest::Approx(std::pow(zv::abs_chi_slope({0.5, 200.0}), 2)).epsilon(1e-10));
    CHECK_THROWS_AS(zv::abs_chi_kth({0.5, 2 * zv::kPi}, 2), zv::DomainError);
    CHECK_THROWS_AS(zv::abs_chi_kth({0.5, 100.0}, 9), zv::DomainError);
    CHECK_THROWS_AS(zv::abs_chi_kth({0.5, 100.0}, 0), zv::DomainError);
}

TEST_CASE("slope is negative above 2 pi + delta") {
    for (double t = 2 * zv::kPi + 0.02; t < 1000.0; t *= 1.3)
        for (double sigma = 0.0; sigma <= 1.0; sigma += 0.05)
            CHECK(zv::abs_chi_slope({sigma, t}) < 0.0);
}

TEST_CASE("monotone in sigma, extremes at the edges, within the bounds") {
    for (double t : {10.0, 50.0, 200.0}) {
        std::vector<double> v;
        for (int i = 0; i <= 20; ++i)
            v.push_back(zv::abs_chi({i / 20.0, t}));
        for (std::size_t i = 1; i < v.size(); ++i)
            CHECK(v[i] < v[i - 1]);
        const auto [lo, hi] = zv::chi_bounds(t);
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
            CHECK(v[i] > lo);
            CHECK(v[i] < hi);
        }
        CHECK(v.front() > 0.0);
    }
}

TEST_CASE("chi_bounds") {
    const auto [lo, hi] = zv::chi_bounds(2 * zv::kPi);
    CHECK(lo == doctest::Approx(1.0));
    CHECK(hi == doctest::Approx(1.0));
    const auto b = zv::chi_bounds(200.0);
    CHECK(b.first == doctest::Approx(std::sqrt(2 * zv::kPi / 200.0)));
    CHECK(b.second == doctest::Approx(5.641895835).epsilon(1e-9));
    CHECK(std::abs(zv::abs_chi({0.0, 14.134725}) / zv::chi_bounds(14.134725).second - 1.0) <= 1e-6);
    CHECK_THROWS_AS(zv::chi_bounds(0.0), zv::DomainError);
}

TEST_CASE("Hardy theta and Z") {
    // mpmath siegeltheta
    CHECK(zv::hardy_theta(10.0) == doctest::Approx(-3.0670743962898953).epsilon(1e-13));
    CHECK(zv::hardy_theta(100.0) == doctest::Approx(87.97216523178722).epsilon(1e-13));
    CHECK(zv::hardy_theta(1000.0) == doctest::Approx(2034.5464280380316).epsilon(1e-13));
    CHECK(zv::hardy_theta(5000.0) == doctest::Approx(14197.897617602198).epsilon(1e-13));
    CHECK(std::abs(zv::hardy_Z_complex(100.0).imag()) < 1e-9);
    CHECK(std::abs(zv::hardy_Z(14.134725)) < 1e-5);
    CHECK((zv::hardy_Z(14.0) < 0) != (zv::hardy_Z(15.0) < 0));
    // mpmath siegelz
    CHECK(zv::hardy_Z(1000.5) == doctest::Approx(2.5492611355555556).epsilon(1e-11));
    CHECK(zv::hardy_Z(9000.75) == doctest::Approx(2.8180158067058747).epsilon(1e-11));
}

TEST_CASE("theta sweep") {
    zv::ThetaSweep sweep;
    double last = sweep.advance(20.0);
    for (double t = 20.25; t <= 40.0; t += 0.25) {
        const double th = sweep.advance(t);
        CHECK(th == doctest::Approx(zv::hardy_theta(t)).epsilon(1e-12));
        CHECK(th > last);
        last = th;
    }
    CHECK_THROWS_AS(sweep.advance(400.0), zv::UnwrapError);
}
