#include "bcnrand/cli.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcnrand/bench.hpp"
#include "bcnrand/generator.hpp"
#include "bcnrand/oracle.hpp"
#include "bcnrand/parallel.hpp"
#include "bcnrand/quality.hpp"
#include "bcnrand/selftest.hpp"

namespace bcn::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void append_le64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

// Output sink that deletes a partially written file when the command fails.
class OutputFile {
public:
    explicit OutputFile(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::ios_base::failure("cannot open output file: " + path);
        }
    }

    std::ostream& stream() { return path_.empty() ? std::cout : file_; }

    void finish() {
        stream().flush();
        if (!stream()) throw std::ios_base::failure("write failed: " + display_name());
        if (file_.is_open()) file_.close();
        done_ = true;
    }

    ~OutputFile() {
        if (!done_ && !path_.empty()) {
            file_.close();
            std::remove(path_.c_str());
        }
    }

    std::string display_name() const { return path_.empty() ? "<stdout>" : path_; }

private:
    std::string path_;
    std::ofstream file_;
    bool done_ = false;
};

struct GenOptions {
    std::uint64_t n = 0;
    std::uint64_t seed = gen::kMinSeedIndex;
    std::string method = "BarrettModified";
    unsigned workers = 0;
    std::string layout = "contiguous";
    std::string format = "text";
    std::string out_path;
    bool keep_physical = false;
    std::uint64_t chunk = std::uint64_t{1} << 22;
};

int run_gen(const GenOptions& opt) {
    const gen::Method method = gen::parse_method(opt.method);
    const par::Layout layout = par::parse_layout(opt.layout);
    const unsigned workers = opt.workers == 0 ? bench::default_workers() : opt.workers;
    if (opt.seed < gen::kMinSeedIndex || opt.seed > gen::kMaxSeedIndex) {
        std::cerr << "gen: seed outside [" << gen::kMinSeedIndex << ", " << gen::kMaxSeedIndex
                  << "]\n";
        return kExitUsage;
    }
    if (opt.n == 0 || opt.chunk == 0) {
        std::cerr << "gen: --n and --chunk must be at least 1\n";
        return kExitUsage;
    }

    const bool want_u64 = opt.format == "raw-u64";
    const bool want_f64 = opt.format == "raw-f64";
    const bool want_text = opt.format == "text";
    if (!want_u64 && !want_f64 && !want_text) {
        std::cerr << "gen: unknown format " << opt.format << "\n";
        return kExitUsage;
    }

    try {
        OutputFile sink(opt.out_path);
        std::vector<double> fbuf;
        std::vector<std::uint64_t> ubuf;
        std::string bytes;
        char line[64];
        for (std::uint64_t done = 0; done < opt.n;) {
            const std::uint64_t chunk_n = std::min(opt.chunk, opt.n - done);
            const par::PartitionPlan plan = par::make_plan(chunk_n, workers, layout);
            bytes.clear();
            if (want_u64) {
                ubuf.resize(chunk_n);
                par::fill_residues(ubuf, plan, opt.seed, method, done);
                const std::vector<std::uint64_t>& ordered =
                    (layout == par::Layout::Interleaved && !opt.keep_physical)
                        ? deinterleave(std::span<const std::uint64_t>(ubuf), plan)
                        : ubuf;
                bytes.reserve(ordered.size() * 8);
                for (std::uint64_t v : ordered) append_le64(bytes, v);
            } else {
                fbuf.resize(chunk_n);
                par::fill(fbuf, plan, opt.seed, method, done);
                const std::vector<double>& ordered =
                    (layout == par::Layout::Interleaved && !opt.keep_physical)
                        ? deinterleave(std::span<const double>(fbuf), plan)
                        : fbuf;
                if (want_f64) {
                    bytes.reserve(ordered.size() * 8);
                    for (double v : ordered) append_le64(bytes, std::bit_cast<std::uint64_t>(v));
                } else {
                    for (double v : ordered) {
                        const int len = std::snprintf(line, sizeof(line), "%.17g\n", v);
                        bytes.append(line, static_cast<std::size_t>(len));
                    }
                }
            }
            sink.stream().write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
            if (!sink.stream()) throw std::ios_base::failure("write failed");
            done += chunk_n;
        }
        sink.finish();
    } catch (const std::ios_base::failure& e) {
        std::cerr << "gen: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct BenchOptions {
    std::uint64_t n = 20'000'000;
    std::string methods;
    unsigned workers = 0;
    std::string layout = "contiguous";
    int repeats = 5;
    std::string variant = "rolled";
    std::uint64_t seed = gen::kMinSeedIndex;
    bool csv = false;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        if (end > start) out.push_back(text.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_bench(const BenchOptions& opt) {
    bench::BenchConfig config;
    config.n = opt.n;
    config.methods = split_csv(opt.methods);
    config.workers = opt.workers;
    config.layout = par::parse_layout(opt.layout);
    config.repeats = opt.repeats;
    config.variant = bench::parse_variant(opt.variant);
    config.seed_index = opt.seed;
    const auto reports = bench::run(config);
    if (opt.csv) {
        bench::write_csv(std::cout, reports);
    } else {
        bench::write_table(std::cout, reports);
    }
    return kExitOk;
}

int run_selftest(bool fast) {
    const auto results = selftest::run_all(fast);
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
        std::printf("%-5s %-*s %s\n", r.pass ? "ok" : "FAIL", static_cast<int>(width),
                    r.name.c_str(), r.detail.c_str());
    }
    if (!selftest::all_passed(results)) {
        std::printf("selftest: FAILED\n");
        return kExitSelftest;
    }
    std::printf("selftest: all checks passed\n");
    return kExitOk;
}

int run_seed_info(std::uint64_t a) {
    if (a < gen::kMinSeedIndex || a > gen::kMaxSeedIndex) {
        std::cerr << "seed-info: index outside [" << gen::kMinSeedIndex << ", "
                  << gen::kMaxSeedIndex << "]\n";
        return kExitUsage;
    }
    const gen::GeneratorState state = gen::seed_from_index(a);
    std::printf("index a        = %llu\n", static_cast<unsigned long long>(a));
    std::printf("a - 3^33       = %llu\n",
                static_cast<unsigned long long>(a - modred::kModulus));
    std::printf("2^53 - a       = %llu\n",
                static_cast<unsigned long long>(gen::kMaxSeedIndex - a));
    std::printf("z0             = %llu\n", static_cast<unsigned long long>(state.z.value));
    std::printf("z0 * 3^-33     = %.17g\n", gen::to_unit_interval(state.z));
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"bcnrand: pseudorandom variates from the binary digits of a 2-normal constant"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* cmd_gen = app.add_subcommand("gen", "generate variates");
    cmd_gen->add_option("--n", gen_opt.n, "number of variates")->required();
    cmd_gen->add_option("--seed", gen_opt.seed, "starting index a (default 3^33+100)");
    cmd_gen->add_option("--method", gen_opt.method,
                        "Ref128|LEcuyer|Barrett|BarrettModified");
    cmd_gen->add_option("--workers", gen_opt.workers, "worker count (default BCN_THREADS or hw)");
    cmd_gen->add_option("--layout", gen_opt.layout, "contiguous|interleaved");
    cmd_gen->add_option("--format", gen_opt.format, "text|raw-f64|raw-u64");
    cmd_gen->add_option("--out", gen_opt.out_path, "output path (default stdout)");
    cmd_gen->add_flag("--keep-physical", gen_opt.keep_physical,
                      "emit interleaved buffers without restoring logical order");
    cmd_gen->add_option("--chunk", gen_opt.chunk, "elements generated per internal block");

    BenchOptions bench_opt;
    auto* cmd_bench = app.add_subcommand("bench", "throughput benchmark");
    cmd_bench->add_option("--n", bench_opt.n, "elements per timed run");
    cmd_bench->add_option("--methods", bench_opt.methods,
                          "comma list of Ref128,LEcuyer,LEcuyerFast,Barrett,BarrettModified,"
                          "Constant (default: four kernels + Constant)");
    cmd_bench->add_option("--workers", bench_opt.workers, "worker count");
    cmd_bench->add_option("--layout", bench_opt.layout, "contiguous|interleaved");
    cmd_bench->add_option("--repeats", bench_opt.repeats, "timed runs per method (median)");
    cmd_bench->add_option("--variant", bench_opt.variant, "rolled|unrolled");
    cmd_bench->add_option("--seed", bench_opt.seed, "starting index a");
    cmd_bench->add_flag("--csv", bench_opt.csv, "emit CSV instead of the table");

    bool fast = false;
    auto* cmd_selftest = app.add_subcommand("selftest", "run built-in correctness checks");
    cmd_selftest->add_flag("--fast", fast, "smaller sweeps, finishes in a few seconds");

    std::uint64_t seed_info_a = 0;
    auto* cmd_seed_info = app.add_subcommand("seed-info", "describe a starting index");
    cmd_seed_info->add_option("index", seed_info_a, "starting index a")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen_opt);
        if (cmd_bench->parsed()) return run_bench(bench_opt);
        if (cmd_selftest->parsed()) return run_selftest(fast);
        if (cmd_seed_info->parsed()) return run_seed_info(seed_info_a);
    } catch (const bench::GuardError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bcn::cli
