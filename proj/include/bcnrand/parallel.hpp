#pragma once

// Deterministic multi-worker generation. The output range is split into
// contiguous logical subsequences, one per worker, each seeded independently
// by skip-ahead; the logical result is bit-identical for any worker count.
// The Interleaved layout scatters worker writes at a fixed stride (the CPU
// analogue of coalesced device writes); deinterleave restores logical order.

#include <cstdint>
#include <span>
#include <vector>

#include "bcnrand/generator.hpp"

namespace bcn::par {

enum class Layout { Contiguous, Interleaved };

const char* layout_name(Layout layout);
Layout parse_layout(const std::string& name);

struct PartitionPlan {
    std::uint64_t n = 0;
    unsigned workers = 1;                      // effective worker count
    std::uint64_t work_per_worker = 0;         // ceil(n / requested workers)
    std::vector<std::uint64_t> start_offsets;  // offsets[i] = i * work_per_worker
    Layout layout = Layout::Contiguous;
    std::uint64_t step = 1;                    // interleave stride (== workers)

    // Number of elements worker w generates (work_per_worker, except the last
    // worker which takes the remainder).
    std::uint64_t elements_for(unsigned w) const;

    // Physical buffer slot of worker w's i-th element. Contiguous: offset + i.
    // Interleaved: w + i*step while every worker still has elements, after
    // which the stride drops by one so the tail stays packed.
    std::uint64_t physical_index(unsigned w, std::uint64_t i) const;
};

// Splits n elements over at most `workers` workers. Rejects n = 0; a worker
// count exceeding what ceil-division can use is clamped.
PartitionPlan make_plan(std::uint64_t n, unsigned workers, Layout layout);

// Writes plan.n unit-interval variates from seed index a into `out` at the
// plan's physical positions. Worker w seeds via state_at(a, base_offset +
// start_offsets[w]); base_offset shifts the whole window for chunked
// streaming. Rejects a buffer smaller than plan.n before any work starts.
void fill(std::span<double> out, const PartitionPlan& plan, std::uint64_t seed_index,
          gen::Method method, std::uint64_t base_offset = 0);

// Same traversal, storing the raw residues z_k instead of doubles.
void fill_residues(std::span<std::uint64_t> out, const PartitionPlan& plan,
                   std::uint64_t seed_index, gen::Method method,
                   std::uint64_t base_offset = 0);

// Inverse of the Interleaved scatter: returns the logically ordered sequence.
// Rejects plans whose layout is not Interleaved and size mismatches.
std::vector<double> deinterleave(std::span<const double> buffer, const PartitionPlan& plan);
std::vector<std::uint64_t> deinterleave(std::span<const std::uint64_t> buffer,
                                        const PartitionPlan& plan);

}  // namespace bcn::par
