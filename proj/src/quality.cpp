#include "bcnrand/quality.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bcn::quality {

namespace {

std::string format(const char* fmt, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

}  // namespace

QualityReport chi_square_uniformity(std::span<const double> samples, int bins) {
    if (samples.empty()) throw std::invalid_argument("chi_square: no samples");
    if (bins < 2) throw std::invalid_argument("chi_square: need at least 2 bins");
    const double expected = static_cast<double>(samples.size()) / bins;
    if (expected < 20.0) {
        throw std::invalid_argument("chi_square: expected count per bin below 20");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    for (double u : samples) {
        if (!(u > 0.0) || !(u < 1.0)) {
            throw std::invalid_argument("chi_square: sample outside (0,1)");
        }
        auto b = static_cast<std::size_t>(u * bins);
        if (b >= counts.size()) b = counts.size() - 1;
        ++counts[b];
    }
    double stat = 0.0;
    for (std::uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    const int dof = bins - 1;
    const double band = 4.5 * std::sqrt(2.0 * dof);
    QualityReport report;
    report.name = "chi_square_uniformity";
    report.statistic = stat;
    report.dof = dof;
    report.pass = std::fabs(stat - dof) <= band;
    report.threshold = format("|stat - %.0f| <= %.1f", static_cast<double>(dof), band);
    return report;
}

QualityReport monobit_mantissa(std::span<const Residue> residues) {
    if (residues.size() < 100000) {
        throw std::invalid_argument("monobit: need at least 1e5 residues");
    }
    // w = floor(z * 2^53 / m) is the 53-bit fixed-point mantissa of z/m; the
    // tracked window is its top 48 bits (bits 52 down to 5).
    std::uint64_t ones[53] = {};
    for (Residue z : residues) {
        if (z.value >= modred::kModulus) {
            throw std::invalid_argument("monobit: residue out of range");
        }
        const auto w = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(z.value) << 53) / modred::kModulus);
        for (int bit = 5; bit < 53; ++bit) ones[bit] += (w >> bit) & 1;
    }
    const double n = static_cast<double>(residues.size());
    double worst = 0.0;
    int worst_bit = 5;
    for (int bit = 5; bit < 53; ++bit) {
        const double dev = std::fabs(static_cast<double>(ones[bit]) / n - 0.5);
        if (dev > worst) {
            worst = dev;
            worst_bit = bit;
        }
    }
    const double tol = 4.5 / (2.0 * std::sqrt(n));
    QualityReport report;
    report.name = "monobit_mantissa";
    report.statistic = worst;
    report.dof = 48;
    report.pass = worst <= tol;
    report.threshold =
        format("max|freq-0.5| <= %.3g (worst bit %g)", tol, static_cast<double>(worst_bit));
    return report;
}

QualityReport serial_correlation(std::span<const double> samples, int lag) {
    if (lag < 1) throw std::invalid_argument("serial_correlation: lag must be positive");
    if (samples.size() < 100000) {
        throw std::invalid_argument("serial_correlation: need at least 1e5 samples");
    }
    const std::size_t pairs = samples.size() - static_cast<std::size_t>(lag);
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const double x = samples[i];
        const double y = samples[i + static_cast<std::size_t>(lag)];
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const auto np = static_cast<double>(pairs);
    const double vx = sxx / np - (sx / np) * (sx / np);
    const double vy = syy / np - (sy / np) * (sy / np);
    const double cov = sxy / np - (sx / np) * (sy / np);
    const double rho = (vx > 0.0 && vy > 0.0) ? cov / std::sqrt(vx * vy)
                                              : std::numeric_limits<double>::quiet_NaN();
    const double tol = 4.5 / std::sqrt(static_cast<double>(samples.size()));
    QualityReport report;
    report.name = lag == 1 ? "lag1_correlation" : "lag" + std::to_string(lag) + "_correlation";
    report.statistic = rho;
    report.dof = static_cast<int>(pairs > static_cast<std::size_t>(1 << 30) ? (1 << 30) : pairs);
    report.pass = std::isfinite(rho) && std::fabs(rho) <= tol;
    report.threshold = format("|rho| <= %.3g", tol);
    return report;
}

void write_table(std::ostream& os, std::span<const QualityReport> reports) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-24s %14s %8s %6s  %s\n", "test", "statistic", "dof",
                  "pass", "threshold");
    os << line;
    for (const auto& r : reports) {
        std::snprintf(line, sizeof(line), "%-24s %14.6g %8d %6s  %s\n", r.name.c_str(),
                      r.statistic, r.dof, r.pass ? "yes" : "NO", r.threshold.c_str());
        os << line;
    }
}

void write_kv(std::ostream& os, std::span<const QualityReport> reports) {
    for (const auto& r : reports) {
        char line[256];
        std::snprintf(line, sizeof(line), "name=%s statistic=%.17g dof=%d pass=%s\n",
                      r.name.c_str(), r.statistic, r.dof, r.pass ? "true" : "false");
        os << line;
    }
}

}  // namespace bcn::quality
