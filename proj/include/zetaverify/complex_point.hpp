#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "zetaverify/errors.hpp"

namespace zv {

using Complex = std::complex<double>;

/// Returns z unchanged, or throws DomainError if either component is NaN/inf.
inline Complex checked(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("non-finite complex value");
    return z;
}

/// A point s = sigma + i t. Both coordinates must be finite.
class ComplexPoint {
public:
    ComplexPoint(double sigma, double t) : sigma_(sigma), t_(t) {
        if (!std::isfinite(sigma) || !std::isfinite(t))
            throw DomainError("ComplexPoint requires finite sigma and t");
    }
    explicit ComplexPoint(Complex s) : ComplexPoint(s.real(), s.imag()) {}

    double sigma() const { return sigma_; }
    double t() const { return t_; }
    Complex value() const { return {sigma_, t_}; }

    ComplexPoint conj() const { return {sigma_, -t_}; }
    /// The reflected point 1 - s.
    ComplexPoint reflect() const { return {1.0 - sigma_, -t_}; }
    ComplexPoint shifted_sigma(double h) const { return {sigma_ + h, t_}; }

    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

private:
    double sigma_;
    double t_;
};

/// Parses "0.5+200i", "0.1-3.5i", "2", "0.5+i" style literals.
ComplexPoint parse_point(const std::string& text);

std::string to_string(const ComplexPoint& s);

}  // namespace zv
