#include "bcnrand/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace bcn::par {

const char* layout_name(Layout layout) {
    return layout == Layout::Contiguous ? "contiguous" : "interleaved";
}

Layout parse_layout(const std::string& name) {
    if (name == "contiguous") return Layout::Contiguous;
    if (name == "interleaved") return Layout::Interleaved;
    throw std::invalid_argument("unknown layout: " + name);
}

std::uint64_t PartitionPlan::elements_for(unsigned w) const {
    const std::uint64_t start = start_offsets[w];
    return std::min(work_per_worker, n - start);
}

std::uint64_t PartitionPlan::physical_index(unsigned w, std::uint64_t i) const {
    if (layout == Layout::Contiguous) return start_offsets[w] + i;
    // Column i of the worker-by-element grid holds one slot per worker that
    // still has an i-th element. All workers except the last produce
    // work_per_worker elements, so columns beyond the last worker's count
    // shrink by exactly one.
    const std::uint64_t short_count = elements_for(workers - 1);
    if (i < short_count) return i * step + w;
    return short_count * step + (i - short_count) * (step - 1) + w;
}

PartitionPlan make_plan(std::uint64_t n, unsigned workers, Layout layout) {
    if (n == 0) throw std::invalid_argument("make_plan: n must be at least 1");
    if (workers == 0) throw std::invalid_argument("make_plan: workers must be at least 1");
    const std::uint64_t wpw = (n + workers - 1) / workers;
    // ceil-splitting can leave trailing workers with nothing; drop them.
    const auto effective = static_cast<unsigned>((n + wpw - 1) / wpw);
    PartitionPlan plan;
    plan.n = n;
    plan.workers = effective;
    plan.work_per_worker = wpw;
    plan.layout = layout;
    plan.step = effective;
    plan.start_offsets.reserve(effective);
    for (unsigned w = 0; w < effective; ++w) {
        plan.start_offsets.push_back(static_cast<std::uint64_t>(w) * wpw);
    }
    return plan;
}

namespace {

template <typename T, typename Convert>
void fill_impl(std::span<T> out, const PartitionPlan& plan, std::uint64_t seed_index,
               gen::Method method, std::uint64_t base_offset, Convert convert) {
    if (out.size() < plan.n) {
        throw std::invalid_argument("fill: buffer smaller than plan.n");
    }
    auto worker_body = [&](unsigned w) {
        gen::GeneratorState state =
            gen::state_at(seed_index, base_offset + plan.start_offsets[w], method);
        const std::uint64_t count = plan.elements_for(w);
        for (std::uint64_t i = 0; i < count; ++i) {
            out[plan.physical_index(w, i)] = convert(gen::next(state));
        }
    };
    if (plan.workers == 1) {
        worker_body(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(plan.workers - 1);
    for (unsigned w = 1; w < plan.workers; ++w) pool.emplace_back(worker_body, w);
    worker_body(0);
    for (auto& t : pool) t.join();
}

template <typename T>
std::vector<T> deinterleave_impl(std::span<const T> buffer, const PartitionPlan& plan) {
    if (plan.layout != Layout::Interleaved) {
        throw std::invalid_argument("deinterleave: plan layout is not Interleaved");
    }
    if (buffer.size() < plan.n) {
        throw std::invalid_argument("deinterleave: buffer smaller than plan.n");
    }
    std::vector<T> logical(plan.n);
    for (unsigned w = 0; w < plan.workers; ++w) {
        const std::uint64_t count = plan.elements_for(w);
        for (std::uint64_t i = 0; i < count; ++i) {
            logical[plan.start_offsets[w] + i] = buffer[plan.physical_index(w, i)];
        }
    }
    return logical;
}

}  // namespace

void fill(std::span<double> out, const PartitionPlan& plan, std::uint64_t seed_index,
          gen::Method method, std::uint64_t base_offset) {
    fill_impl(out, plan, seed_index, method, base_offset,
              [](Residue z) { return gen::to_unit_interval(z); });
}

void fill_residues(std::span<std::uint64_t> out, const PartitionPlan& plan,
                   std::uint64_t seed_index, gen::Method method, std::uint64_t base_offset) {
    fill_impl(out, plan, seed_index, method, base_offset,
              [](Residue z) { return z.value; });
}

std::vector<double> deinterleave(std::span<const double> buffer, const PartitionPlan& plan) {
    return deinterleave_impl(buffer, plan);
}

std::vector<std::uint64_t> deinterleave(std::span<const std::uint64_t> buffer,
                                        const PartitionPlan& plan) {
    return deinterleave_impl(buffer, plan);
}

}  // namespace bcn::par
