#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zetaverify/complex_point.hpp"
#include "zetaverify/zeros.hpp"

namespace zv {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(const std::string& name);

/// Inclusive arithmetic axes: from, from + step, ... while <= to.
struct GridSpec {
    double sigma_from = 0.0;
    double sigma_to = 1.0;
    double sigma_step = 0.05;
    double t_from = 2.0 * 3.14159265358979323846;
    double t_to = 200.0;
    double t_step = 1.0;

    std::vector<double> sigma_axis() const;
    std::vector<double> t_axis() const;
    /// Steps must be positive; sigma within [0, 1], t within [2 pi, 10000].
    void validate() const;
};

struct RunConfig {
    std::optional<std::string> zero_table_path;
    /// Heights for the critical-line unit-modulus check.
    std::vector<double> t_values{14.134725, 100.0, 200.0, 9291.071149949};
    /// Grid for the |chi| surface export.
    GridSpec grid;
    /// Grid for the property scans.
    GridSpec scan_grid{0.05, 0.5, 0.05, 20.0, 200.0, 10.0};
    OutputFormat output_format = OutputFormat::Json;
    std::map<std::string, double> tolerance_overrides;

    void validate() const;
};

struct CheckRow {
    std::string check_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::int64_t runtime_ms = 0;
    std::string description;
    std::string note;
};

enum class ToleranceRule { Absolute, Relative };

struct CheckInfo {
    std::string id;
    std::string description;  ///< the identity being checked
    ToleranceRule rule;
    double default_tolerance;
    bool needs_zeros;
};

/// Checks in registry (execution) order.
const std::vector<CheckInfo>& check_registry();

/// Runs one check. UnknownCheckError for unregistered ids; MissingDataError
/// when the check needs zeros and no table path is configured.
CheckRow run_check(const std::string& check_id, const RunConfig& config);

/// Runs every check in registry order. Failures (including errors) become
/// rows with pass = false; the suite never aborts.
std::vector<CheckRow> run_all(const RunConfig& config);

bool all_passed(const std::vector<CheckRow>& rows);

struct SurfaceGrid {
    std::vector<double> sigma_axis;
    std::vector<double> t_axis;
    std::vector<double> values;  ///< row-major: values[i_t * sigma_axis.size() + i_sigma]

    double at(std::size_t i_t, std::size_t i_sigma) const {
        return values[i_t * sigma_axis.size() + i_sigma];
    }
};

/// |chi| on config.grid. RangeError if the grid leaves sigma in [0,1], t in [2 pi, 10000].
SurfaceGrid emit_chi_surface(const RunConfig& config);

/// CSV (header `sigma,t,abs_chi`) or JSON.
void write_surface(const SurfaceGrid& grid, OutputFormat format, std::ostream& out);

enum class ScanProperty { ModulusReflection, LineConvexity, LeftHalfSlope };

struct ScanReport {
    std::vector<CheckRow> rows;
    std::vector<ComplexPoint> excluded;  ///< within 1e-3 in t of a table zero
};

inline constexpr double kScanExclusionRadius = 1e-3;

/// One row per scan-grid point. The convexity and slope scans need a zero table.
ScanReport scan_region(ScanProperty property, const RunConfig& config);

/// `zeros` overrides loading from config.zero_table_path.
ScanReport scan_region(ScanProperty property, const RunConfig& config, const ZeroTable* zeros);

/// Rounds to 12 significant digits, the precision of every emitted number.
double round_sig12(double x);

void write_report(const std::vector<CheckRow>& rows, OutputFormat format, std::ostream& out);

}  // namespace zv
