#pragma once

// Lightweight statistical smoke tests. These are sanity probes with ~4.5-sigma
// pass bands (false-failure odds below 1e-5 per test), not a research battery;
// the CLI's raw output formats are the bridge to external suites.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "bcnrand/modred.hpp"

namespace bcn::quality {

struct QualityReport {
    std::string name;
    double statistic = 0.0;
    int dof = 0;
    bool pass = false;
    std::string threshold;  // human-readable pass criterion
};

// Chi-square over `bins` equal-width bins of (0,1). Two-sided: the statistic
// must stay within 4.5*sqrt(2*dof) of dof = bins-1, so both clumped and
// too-regular inputs fail. Requires an expected count of at least 20 per bin.
QualityReport chi_square_uniformity(std::span<const double> samples, int bins);

// One-frequencies of the top 48 bits of floor(z * 2^53 / m), the mantissa
// window of the unit-interval value. Each bit must stay within
// 4.5/(2*sqrt(N)) of 0.5; the statistic is the worst deviation. Requires at
// least 1e5 residues.
QualityReport monobit_mantissa(std::span<const Residue> residues);

// Pearson correlation between samples lag apart. Requires at least 1e5
// samples; passes iff |rho| <= 4.5/sqrt(N).
QualityReport serial_correlation(std::span<const double> samples, int lag = 1);

// Aligned human-readable table, one row per report.
void write_table(std::ostream& os, std::span<const QualityReport> reports);

// Machine-readable form, one test per line:
// name=<name> statistic=<value> dof=<n> pass=<true|false>
void write_kv(std::ostream& os, std::span<const QualityReport> reports);

}  // namespace bcn::quality
