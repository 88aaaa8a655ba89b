#pragma once

#include <functional>
#include <optional>

#include "zetaverify/complex_point.hpp"
#include "zetaverify/specfun.hpp"

namespace zv {

enum class ZetaMethod {
    EtaAccelerated,  ///< accelerated alternating (eta) series; t <= ~350
    EulerMaclaurin,  ///< Dirichlet sum plus Euler-Maclaurin corrections
    Auto,            ///< eta for |t| <= 50, Euler-Maclaurin beyond
};

struct ZetaEvalStrategy {
    ZetaMethod kind = ZetaMethod::Auto;
    /// Eta path: number of series terms. Euler-Maclaurin: Dirichlet length N.
    std::optional<int> terms_override;
    AccuracyBudget budget;
};

inline constexpr double kMaxZetaHeight = 10000.0;
inline constexpr double kNearZeroGuard = 1e-12;
inline constexpr double kAutoEtaMaxHeight = 50.0;

/// zeta(s) together with its first two complex derivatives.
struct ZetaJet {
    Complex value;
    Complex d1;
    Complex d2;
};

struct LogDerivBundle {
    Complex zeta;
    Complex zeta_prime_over_zeta;
    Complex zeta_second_over_zeta;
};

/// zeta, zeta' and zeta'' by termwise differentiation of the chosen series.
/// Requires sigma > 0, s != 1 and |t| <= 10000.
ZetaJet zeta_jet(const ComplexPoint& s, const ZetaEvalStrategy& strategy = {});

Complex zeta(const ComplexPoint& s, const ZetaEvalStrategy& strategy = {});

/// Throws NearZeroError when |zeta(s)| <= kNearZeroGuard.
LogDerivBundle zeta_log_bundle(const ComplexPoint& s, const ZetaEvalStrategy& strategy = {});

Complex zeta_log_deriv(const ComplexPoint& s, const ZetaEvalStrategy& strategy = {});

/// zeta''(s)/zeta(s).
Complex zeta_second_ratio(const ComplexPoint& s, const ZetaEvalStrategy& strategy = {});

/// d|zeta|/dsigma at fixed t, as |zeta| Re(zeta'/zeta).
double abs_zeta_slope(const ComplexPoint& s, const ZetaEvalStrategy& strategy = {});

using RealField = std::function<double(const ComplexPoint&)>;

/// Fourth-order central difference along sigma (stencil s +- h, s +- 2h).
/// order is 1 or 2; h must lie in [1e-7, 1e-2].
double fd_derivative(const RealField& f, const ComplexPoint& s, double h, int order);

}  // namespace zv
