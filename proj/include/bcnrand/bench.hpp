#pragma once

// Throughput harness. Times each step kernel writing n variates through the
// same partition/layout machinery the generator uses, with setup (seeding and
// skip-ahead) and steady-state generation measured separately, and a Constant
// baseline that writes a fixed value with the identical memory access pattern
// to expose the memory-bound ceiling.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bcnrand/parallel.hpp"

namespace bcn::bench {

// Loop body variants: Rolled is the plain per-element loop, Unrolled expands
// it eightfold.
enum class Variant { Rolled, Unrolled };

Variant parse_variant(const std::string& name);

struct BenchConfig {
    std::uint64_t n = 20'000'000;
    // Method rows: the four generator kernels, "LEcuyerFast" (float-reciprocal
    // quotient), and "Constant". Empty selects all four plus Constant.
    std::vector<std::string> methods;
    unsigned workers = 0;  // 0 = BCN_THREADS env or hardware concurrency
    par::Layout layout = par::Layout::Contiguous;
    int repeats = 5;
    Variant variant = Variant::Rolled;
    std::uint64_t seed_index = gen::kMinSeedIndex;
    // Timer-resolution guard: the calibration run (Constant baseline) must
    // take at least this long or the whole bench is rejected.
    double min_run_seconds = 0.050;
    // Re-generate each method's buffer untimed through par::fill afterwards
    // and require bit-identical output, so timing never alters results.
    bool check_output = true;
};

struct BenchReport {
    std::string method;
    std::uint64_t elements = 0;
    double exec_seconds = 0.0;   // generation only (median over repeats)
    double total_seconds = 0.0;  // setup + generation (median over repeats)
    double exec_rate_gnum = 0.0;
    double total_rate_gnum = 0.0;
    unsigned workers = 0;
    par::Layout layout = par::Layout::Contiguous;
};

// Raised when the calibration run finishes under min_run_seconds (n too small
// for trustworthy timing).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<BenchReport> run(const BenchConfig& config);

void write_table(std::ostream& os, const std::vector<BenchReport>& reports);
void write_csv(std::ostream& os, const std::vector<BenchReport>& reports);

// Default worker count: BCN_THREADS if set and positive, else hardware
// concurrency (at least 1).
unsigned default_workers();

}  // namespace bcn::bench
