// Writes the first N nontrivial zero ordinates of zeta in the zero-table
// text format accepted by `zetaverify zeros ingest`.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "riemann_siegel.hpp"
#include "zetaverify/chi.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate a table of zeta zero ordinates"};
    std::size_t count = 100000;
    std::string out_path;
    double switch_t = 1000.0;
    double tol = 1e-11;
    app.add_option("--count", count, "number of zeros")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "output file (stdout if omitted)");
    app.add_option("--rs-from", switch_t,
                   "height above which Riemann-Siegel replaces the Euler-Maclaurin Z")
        ->check(CLI::Range(50.0, 10000.0));
    app.add_option("--tol", tol, "bracket width for root polishing")->check(CLI::Range(1e-13, 1e-6));
    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    zv::rs::ZeroSearchStats stats;
    const std::function<double(double)> low_z = [](double t) { return zv::hardy_Z(t); };
    const auto zeros = zv::rs::first_zeros(count, low_z, switch_t, tol, &stats);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    os << "# first " << zeros.size() << " nontrivial zeta zero ordinates\n"
       << "# Gram blocks (Rosser's rule); Euler-Maclaurin Z below t = " << switch_t
       << ", Riemann-Siegel (C0..C4) above\n";
    char buf[64];
    for (double t : zeros) {
        std::snprintf(buf, sizeof buf, "%.10f\n", t);
        os << buf;
    }
    std::fprintf(stderr,
                 "zerogen: %zu zeros up to t = %.6f in %.2f s (%zu Gram points, %zu bad, "
                 "%zu refined blocks, %zu Z evaluations)\n",
                 zeros.size(), zeros.back(), secs, stats.gram_points, stats.bad_gram_points,
                 stats.refined_blocks, stats.z_evaluations);
    return 0;
}
