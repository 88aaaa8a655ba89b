#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zetaverify/complex_point.hpp"

namespace zv {

/// The part of the critical strip where the |chi| derivative ladder holds:
/// sigma_min <= sigma <= sigma_max and t > 2 pi + delta.
struct StripRegion {
    double sigma_min = 0.0;
    double sigma_max = 1.0;
    double delta = 0.02;

    double t_min() const;
    bool contains(const ComplexPoint& s) const;
    void validate() const;
};

/// |chi|, phi = |chi|'/|chi| and |chi|', ..., |chi|^(k) at one point.
struct ChiProfile {
    double abs_chi = 0.0;
    double phi = 0.0;
    std::vector<double> derivs;  ///< derivs[j-1] is the j-th sigma-derivative
    ComplexPoint at{0.5, 0.0};
};

/// log chi(s) on a branch that is continuous in t for t > 0.
Complex log_chi(const ComplexPoint& s);

/// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), evaluated in log space.
Complex chi(const ComplexPoint& s);

double abs_chi(const ComplexPoint& s);

/// ln(2 pi) + (pi/4) sin(pi sigma)/|sin(pi s/2)|^2 - Re Psi(1-s).
/// DomainError for sigma outside [0, 1].
double phi(const ComplexPoint& s);

/// d|chi|/dsigma at fixed t, |chi(s)| phi(s).
double abs_chi_slope(const ComplexPoint& s);

/// k-th sigma-derivative of |chi| from the closed form (|chi|')^k/|chi|^(k-1).
/// Valid for t > 2 pi + delta and 1 <= k <= 8; DomainError otherwise.
double abs_chi_kth(const ComplexPoint& s, int k, const StripRegion& region = {});

ChiProfile chi_profile(const ComplexPoint& s, int k, const StripRegion& region = {});

/// (sqrt(2 pi/t), sqrt(t/(2 pi))). DomainError if t <= 0.
std::pair<double, double> chi_bounds(double t);

/// Hardy theta(t) = -arg chi(1/2 + it)/2, continuous in t, t > 1.
double hardy_theta(double t);

/// e^{i theta(t)} zeta(1/2 + it); the imaginary part is roundoff only.
Complex hardy_Z_complex(double t);

double hardy_Z(double t);

/// Tracks theta along an ascending sweep and rejects steps that move the
/// phase by more than pi/2 (UnwrapError); the caller must refine the step.
class ThetaSweep {
public:
    explicit ThetaSweep(double max_phase_step = kPi_2) : max_step_(max_phase_step) {}

    /// theta at t; t must not decrease between calls.
    double advance(double t);

    static constexpr double kPi_2 = 1.57079632679489661923132169163975144;

private:
    double max_step_;
    std::optional<double> last_t_;
    double last_theta_ = 0.0;
};

}  // namespace zv
