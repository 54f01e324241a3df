#include "bcnrand/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace bcn::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

// Kernel functors on raw residue words so the generation loop inlines flat,
// mirroring how the reductions are meant to be used in an inner loop.
struct StepRef128 {
    std::uint64_t operator()(std::uint64_t z) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(z) << 53) %
                                          modred::kModulus);
    }
};
struct StepLEcuyer {
    modred::ReductionConstants c = modred::constants();
    std::uint64_t operator()(std::uint64_t z) const {
        return modred::detail::lecuyer_stage(2 * modred::detail::lecuyer_stage(4 * z, c), c);
    }
};
struct StepLEcuyerFast {
    modred::ReductionConstants c = modred::constants();
    std::uint64_t operator()(std::uint64_t z) const {
        return modred::detail::lecuyer_stage_fast(2 * modred::detail::lecuyer_stage_fast(4 * z, c),
                                                  c);
    }
};
struct StepBarrett {
    modred::ReductionConstants c = modred::constants();
    std::uint64_t operator()(std::uint64_t z) const {
        return modred::barrett_step(Residue{z}, c).value;
    }
};
struct StepBarrettModified {
    modred::ReductionConstants c = modred::constants();
    std::uint64_t operator()(std::uint64_t z) const {
        return modred::barrett_modified_step(Residue{z}, c).value;
    }
};
// Baseline: the identical access pattern writing one fixed value.
struct StepConstant {
    std::uint64_t operator()(std::uint64_t z) const { return z; }
};

template <typename Step, bool kConstant>
void generate_worker(double* out, const par::PartitionPlan& plan, unsigned w,
                     std::uint64_t z_start, Variant variant) {
    const Step step{};
    const std::uint64_t count = plan.elements_for(w);
    std::uint64_t z = z_start;
    auto emit = [&](std::uint64_t i) {
        if constexpr (kConstant) {
            out[plan.physical_index(w, i)] = 0.5;
        } else {
            z = step(z);
            out[plan.physical_index(w, i)] = static_cast<double>(z) * gen::kInvModulus;
        }
    };
    if (variant == Variant::Unrolled) {
        std::uint64_t i = 0;
        for (; i + 8 <= count; i += 8) {
            emit(i);
            emit(i + 1);
            emit(i + 2);
            emit(i + 3);
            emit(i + 4);
            emit(i + 5);
            emit(i + 6);
            emit(i + 7);
        }
        for (; i < count; ++i) emit(i);
    } else {
        for (std::uint64_t i = 0; i < count; ++i) emit(i);
    }
}

struct TimedRun {
    double setup_seconds = 0.0;
    double generate_seconds = 0.0;
};

template <typename Step, bool kConstant>
TimedRun timed_run(std::vector<double>& buffer, const par::PartitionPlan& plan,
                   std::uint64_t seed_index, Variant variant) {
    std::vector<std::uint64_t> starts(plan.workers, 0);

    const auto t_setup = Clock::now();
    if constexpr (!kConstant) {
        auto seed_body = [&](unsigned w) {
            starts[w] = gen::state_at(seed_index, plan.start_offsets[w],
                                      gen::Method::BarrettModified)
                            .z.value;
        };
        if (plan.workers == 1) {
            seed_body(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(plan.workers - 1);
            for (unsigned w = 1; w < plan.workers; ++w) pool.emplace_back(seed_body, w);
            seed_body(0);
            for (auto& t : pool) t.join();
        }
    }
    const double setup = seconds_since(t_setup);

    const auto t_gen = Clock::now();
    auto gen_body = [&](unsigned w) {
        generate_worker<Step, kConstant>(buffer.data(), plan, w, starts[w], variant);
    };
    if (plan.workers == 1) {
        gen_body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(plan.workers - 1);
        for (unsigned w = 1; w < plan.workers; ++w) pool.emplace_back(gen_body, w);
        gen_body(0);
        for (auto& t : pool) t.join();
    }
    const double generate = seconds_since(t_gen);

    return TimedRun{setup, generate};
}

using RunFn = TimedRun (*)(std::vector<double>&, const par::PartitionPlan&, std::uint64_t,
                           Variant);

struct MethodEntry {
    const char* name;
    RunFn fn;
    bool is_generator;  // false for the Constant baseline
};

constexpr MethodEntry kMethods[] = {
    {"Ref128", &timed_run<StepRef128, false>, true},
    {"LEcuyer", &timed_run<StepLEcuyer, false>, true},
    {"LEcuyerFast", &timed_run<StepLEcuyerFast, false>, true},
    {"Barrett", &timed_run<StepBarrett, false>, true},
    {"BarrettModified", &timed_run<StepBarrettModified, false>, true},
    {"Constant", &timed_run<StepConstant, true>, false},
};

const MethodEntry& lookup_method(const std::string& name) {
    std::string lower(name.size(), '\0');
    std::transform(name.begin(), name.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (const auto& entry : kMethods) {
        std::string key(entry.name);
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        if (key == lower) return entry;
    }
    throw std::invalid_argument("unknown bench method: " + name);
}

// Keeps the buffer observably alive so no store can be elided.
double consume(const std::vector<double>& buffer) {
    double acc = 0.0;
    for (std::size_t i = 0; i < buffer.size(); i += 4097) acc += buffer[i];
    return acc;
}

volatile double g_blackhole;

}  // namespace

Variant parse_variant(const std::string& name) {
    if (name == "rolled") return Variant::Rolled;
    if (name == "unrolled") return Variant::Unrolled;
    throw std::invalid_argument("unknown variant: " + name);
}

unsigned default_workers() {
    if (const char* env = std::getenv("BCN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<BenchReport> run(const BenchConfig& config) {
    if (config.n == 0) throw std::invalid_argument("bench: n must be at least 1");
    if (config.repeats < 1) throw std::invalid_argument("bench: repeats must be at least 1");

    std::vector<const MethodEntry*> selected;
    if (config.methods.empty()) {
        for (const auto& entry : kMethods) {
            if (std::string(entry.name) != "LEcuyerFast") selected.push_back(&entry);
        }
    } else {
        for (const auto& name : config.methods) selected.push_back(&lookup_method(name));
    }

    const unsigned workers = config.workers == 0 ? default_workers() : config.workers;
    const par::PartitionPlan plan = par::make_plan(config.n, workers, config.layout);
    std::vector<double> buffer(config.n);

    // Timer-resolution guard: the fastest row (the constant writer) must take
    // long enough for wall-clock timing to be trustworthy.
    const TimedRun probe = timed_run<StepConstant, true>(buffer, plan, config.seed_index,
                                                         config.variant);
    g_blackhole = consume(buffer);
    if (probe.generate_seconds < config.min_run_seconds) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "bench: calibration run took %.1f ms (< %.1f ms); increase --n",
                      probe.generate_seconds * 1e3, config.min_run_seconds * 1e3);
        throw GuardError(msg);
    }

    std::vector<BenchReport> reports;
    for (const MethodEntry* entry : selected) {
        std::vector<double> setup_times, total_times, gen_times;
        for (int rep = 0; rep < config.repeats; ++rep) {
            const TimedRun t = entry->fn(buffer, plan, config.seed_index, config.variant);
            g_blackhole = consume(buffer);
            setup_times.push_back(t.setup_seconds);
            gen_times.push_back(t.generate_seconds);
            total_times.push_back(t.setup_seconds + t.generate_seconds);
        }
        if (config.check_output && entry->is_generator) {
            std::vector<double> expect(config.n);
            par::fill(expect, plan, config.seed_index, gen::Method::BarrettModified);
            if (expect != buffer) {
                throw std::runtime_error(std::string("bench: timed output for ") + entry->name +
                                         " differs from an untimed fill");
            }
        }
        BenchReport report;
        report.method = entry->name;
        report.elements = config.n;
        report.exec_seconds = median(gen_times);
        report.total_seconds = median(total_times);
        report.exec_rate_gnum = static_cast<double>(config.n) / report.exec_seconds / 1e9;
        report.total_rate_gnum = static_cast<double>(config.n) / report.total_seconds / 1e9;
        report.workers = plan.workers;
        report.layout = plan.layout;
        reports.push_back(std::move(report));
    }
    return reports;
}

void write_table(std::ostream& os, const std::vector<BenchReport>& reports) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-16s %12s %8s %12s %11s %11s %11s %9s\n", "Method",
                  "Elements", "Workers", "Layout", "Exec(s)", "GNum/s", "Total(s)",
                  "GNum/s+su");
    os << line;
    for (const auto& r : reports) {
        std::snprintf(line, sizeof(line), "%-16s %12llu %8u %12s %11.4f %11.4f %11.4f %9.4f\n",
                      r.method.c_str(), static_cast<unsigned long long>(r.elements), r.workers,
                      par::layout_name(r.layout), r.exec_seconds, r.exec_rate_gnum,
                      r.total_seconds, r.total_rate_gnum);
        os << line;
    }
}

void write_csv(std::ostream& os, const std::vector<BenchReport>& reports) {
    os << "method,elements,workers,layout,exec_seconds,exec_rate_gnum,total_seconds,"
          "total_rate_gnum\n";
    for (const auto& r : reports) {
        char line[256];
        std::snprintf(line, sizeof(line), "%s,%llu,%u,%s,%.9g,%.9g,%.9g,%.9g\n",
                      r.method.c_str(), static_cast<unsigned long long>(r.elements), r.workers,
                      par::layout_name(r.layout), r.exec_seconds, r.exec_rate_gnum,
                      r.total_seconds, r.total_rate_gnum);
        os << line;
    }
}

}  // namespace bcn::bench
