#pragma once

#include <cmath>
#include <complex>

namespace zv {

/// Neumaier-compensated accumulator. Addition order is the caller's, so the
/// result is bit-reproducible for a fixed sequence of inputs.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        if constexpr (std::is_floating_point_v<T>) {
            add_real(sum_, comp_, x);
        } else {
            double sr = sum_.real(), cr = comp_.real();
            double si = sum_.imag(), ci = comp_.imag();
            add_real(sr, cr, x.real());
            add_real(si, ci, x.imag());
            sum_ = {sr, si};
            comp_ = {cr, ci};
        }
    }
    CompensatedSum& operator+=(T x) {
        add(x);
        return *this;
    }
    T value() const { return sum_ + comp_; }

private:
    static void add_real(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    T sum_{};
    T comp_{};
};

}  // namespace zv
