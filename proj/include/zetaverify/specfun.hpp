#pragma once

#include "zetaverify/complex_point.hpp"

namespace zv {

/// Series accuracy target shared by the evaluators that truncate adaptively.
struct AccuracyBudget {
    double target_rel_err = 1e-12;
    int max_terms = 64;

    /// Throws DomainError unless 0 < target_rel_err < 1e-3 and max_terms >= 16.
    void validate() const;
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLog2Pi = 1.83787706640934548356065947281123527;

/// Principal branch of log Gamma(z), continuous in Im along vertical lines
/// that avoid the non-positive real axis. PoleError at 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Psi(z) = Gamma'(z)/Gamma(z).
Complex digamma(Complex z);

/// Psi'(z).
Complex trigamma(Complex z);

enum class GammaClosedForm { AtZero, AtOne, AtHalf };

/// |Gamma(-it)|, |Gamma(1-it)| or |Gamma(1/2-it)| from their closed forms.
/// AtHalf accepts t = 0 (returns sqrt(pi)); otherwise t must be > 0.
double abs_gamma_closed(GammaClosedForm form, double t);

}  // namespace zv
