#pragma once

#include <istream>
#include <string>
#include <vector>

#include "zetaverify/complex_point.hpp"

namespace zv {

/// Ordinates t_n > 0 of nontrivial zeros rho_n = sigma_n + i t_n, ascending.
/// Conjugate zeros sigma_n - i t_n are implicit; every sum adds them.
class ZeroTable {
public:
    ZeroTable() = default;
    /// Validates: strictly ascending, t_n > 14 - 1e-3, sigma_n in (0, 1).
    ZeroTable(std::vector<double> ordinates, std::vector<double> sigmas, std::string source);
    /// All sigma_n = 1/2.
    ZeroTable(std::vector<double> ordinates, std::string source);

    const std::vector<double>& ordinates() const { return ordinates_; }
    const std::vector<double>& sigmas() const { return sigmas_; }
    const std::string& source() const { return source_; }
    std::size_t count() const { return ordinates_.size(); }
    bool empty() const { return ordinates_.empty(); }
    double mean_sigma(std::size_t n_terms) const;

    /// Distance |t - t_n| to the nearest table ordinate (infinity if empty).
    double distance_to_nearest(double t) const;

    /// Table restricted to its first n entries.
    ZeroTable prefix(std::size_t n) const;

private:
    std::vector<double> ordinates_;
    std::vector<double> sigmas_;
    std::string source_;
};

inline constexpr double kMinZeroOrdinate = 14.0 - 1e-3;
inline constexpr double kZeroCollisionRadius = 1e-9;

/// Parses the zero-table text format: one `<ordinate>` or `<ordinate> <sigma>`
/// per line; blank lines and '#' comments skipped. FormatError (with line
/// number) on bad lines, OrderError on non-ascending ordinates.
ZeroTable ingest_zero_table(std::istream& in, const std::string& source = "stream");
ZeroTable ingest_zero_table_text(const std::string& text, const std::string& source = "text");
ZeroTable load_zero_table(const std::string& path);

/// Sign changes of hardy_Z on [t_min, t_max], bisected to |dt| < 1e-8.
/// Scans at `step` (<= 0.5) and probes local minima of |Z| for close pairs.
/// UnwrapError if theta moves more than pi/2 between scan points.
std::vector<double> find_zeros(double t_min, double t_max, double step);

/// B = log 2 + log(pi)/2 - 1 - gamma/2.
double b_constant();

struct SumResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;  ///< magnitude of the omitted remainder, >= 0
};

/// sum_n 2 sigma_n/(sigma_n^2 + t_n^2) over the first n_terms zeros
/// (n_terms = 0 means the whole table).
SumResult sum_recip_zeros(const ZeroTable& table, std::size_t n_terms = 0);

/// Re sum_rho [1/(s - rho) (+ 1/rho)] over table zeros and their conjugates.
/// NearZeroError if s lies within 1e-9 of a zero.
SumResult hadamard_sum(const ComplexPoint& s, const ZeroTable& table, bool include_recip,
                       std::size_t n_terms = 0);

/// K(k, s) = Re sum_rho 1/(s - rho)^k, 2 <= k <= 4.
SumResult k_sum(int k, const ComplexPoint& s, const ZeroTable& table, std::size_t n_terms = 0);

struct HadamardSlopeOptions {
    /// Use (1/2)|chi|'/|chi| in place of (1/2)(ln pi - Re Psi(s/2 + 1)).
    bool use_chi_ratio = false;
    /// Keep the -Re 1/(s - 1) pole contribution.
    bool include_pole_term = true;
    /// Add the signed asymptotic remainder of the truncated zero sum.
    bool tail_correction = true;

    /// The simplified form with the pole term and truncation tail dropped.
    static HadamardSlopeOptions simplified() { return {true, false, false}; }
};

/// d|zeta|/dsigma from the Hadamard product:
/// |zeta| (Re(log-derivative of the Gamma factor) - Re 1/(s-1) + sum_rho Re 1/(s - rho)).
/// Requires t > 2 pi + 0.02.
double abs_zeta_slope_hadamard(const ComplexPoint& s, const ZeroTable& table,
                               const HadamardSlopeOptions& options = {});

struct ConjectureStatistic {
    double exact = 0.0;   ///< sum 2 sigma_n/(sigma_n^2 + t_n^2)
    double approx = 0.0;  ///< sum 2 sigma_n/t_n^2
};

ConjectureStatistic conjecture_statistic(const ZeroTable& table);

}  // namespace zv
