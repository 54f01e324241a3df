#include "bcnrand/selftest.hpp"

#include <cstdio>
#include <random>
#include <vector>

#include "bcnrand/generator.hpp"
#include "bcnrand/oracle.hpp"
#include "bcnrand/parallel.hpp"
#include "bcnrand/quality.hpp"

namespace bcn::selftest {

namespace {

template <typename... Args>
std::string describe(const char* fmt, Args... args) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    return buf;
}

unsigned long long ull(std::uint64_t v) { return static_cast<unsigned long long>(v); }

CheckResult check_constants(const modred::ReductionConstants& c) {
    return {"modred.constants", modred::verify_constants(c),
            "recompute m, q, r, qinv, mu from scratch"};
}

CheckResult check_equivalence(bool fast, const modred::ReductionConstants& c) {
    const std::uint64_t exhaustive = fast ? 10000 : 100000;
    const std::uint64_t randoms = fast ? 100000 : 1000000;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::uint64_t> dist(1, modred::kModulus - 1);
    std::uint64_t checked = 0;
    auto agree = [&](std::uint64_t value) {
        const Residue z{value};
        const std::uint64_t want = modred::reduce_ref(z).value;
        ++checked;
        return modred::lecuyer_step(z, c).value == want &&
               modred::lecuyer_step_fast(z, c).value == want &&
               modred::barrett_step(z, c).value == want &&
               (value == 0 || modred::barrett_modified_step(z, c).value == want);
    };
    bool ok = true;
    for (std::uint64_t z = 0; z < exhaustive && ok; ++z) ok = agree(z);
    for (std::uint64_t i = 0; i < randoms && ok; ++i) ok = agree(dist(rng));
    return {"modred.equivalence", ok,
            describe("%llu exhaustive + %llu random residues vs reduce_ref", ull(exhaustive), ull(randoms))};
}

CheckResult check_skip_ahead(bool fast) {
    const int trials = fast ? 5 : 25;
    const std::uint64_t max_k = fast ? 20000 : 200000;
    std::mt19937_64 rng(42);
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
        const std::uint64_t a = gen::kMinSeedIndex + rng() % 1000000;
        const std::uint64_t k = 1 + rng() % max_k;
        gen::GeneratorState walk = gen::seed_from_index(a);
        for (std::uint64_t i = 0; i < k; ++i) gen::next(walk);
        ok = gen::state_at(a, k).z.value == walk.z.value;
    }
    return {"generator.skip_ahead", ok,
            describe("%d random (a, k) pairs, k <= %llu", trials, ull(max_k))};
}

CheckResult check_method_streams(bool fast) {
    const std::uint64_t n = fast ? 10000 : 100000;
    gen::GeneratorState s0 = gen::seed_from_index(gen::kMinSeedIndex, gen::Method::Ref128);
    gen::GeneratorState s1 = gen::seed_from_index(gen::kMinSeedIndex, gen::Method::LEcuyer);
    gen::GeneratorState s2 = gen::seed_from_index(gen::kMinSeedIndex, gen::Method::Barrett);
    gen::GeneratorState s3 =
        gen::seed_from_index(gen::kMinSeedIndex, gen::Method::BarrettModified);
    bool ok = true;
    for (std::uint64_t i = 0; i < n && ok; ++i) {
        const std::uint64_t a = gen::next(s0).value;
        ok = gen::next(s1).value == a && gen::next(s2).value == a && gen::next(s3).value == a;
    }
    return {"generator.method_streams", ok, describe("%llu steps under all four kernels", ull(n))};
}

CheckResult check_alpha(bool fast) {
    const std::uint64_t indices[] = {gen::kMinSeedIndex, modred::kModulus + 1000000,
                                     gen::kMaxSeedIndex};
    bool ok = true;
    int used = 0;
    for (std::uint64_t a : indices) {
        const auto frac = oracle::alpha_fraction(a, 33);
        ok = ok && frac.numerator == gen::seed_from_index(a).z.value;
        if (fast && ++used == 2) break;
    }
    return {"oracle.alpha_fraction", ok, "series expansion matches seed formula"};
}

CheckResult check_period_law(bool fast) {
    const int max_j = fast ? 8 : 13;
    bool ok = true;
    for (int j = 2; j <= max_j && ok; ++j) {
        std::uint64_t expect = 2;
        for (int i = 1; i < j; ++i) expect *= 3;
        ok = oracle::multiplicative_order(53, j) == expect;
    }
    return {"oracle.period_law", ok,
            describe("ord(2^53 mod 3^j) = 2*3^(j-1) for j in [2, %d]", max_j)};
}

CheckResult check_worker_invariance(bool fast) {
    const std::uint64_t n = fast ? 10000 : 100000;
    std::vector<double> reference(n);
    par::fill(reference, par::make_plan(n, 1, par::Layout::Contiguous), gen::kMinSeedIndex,
              gen::Method::BarrettModified);
    bool ok = true;
    for (unsigned workers : {2u, 3u, 8u}) {
        std::vector<double> buf(n);
        par::fill(buf, par::make_plan(n, workers, par::Layout::Contiguous), gen::kMinSeedIndex,
                  gen::Method::BarrettModified);
        ok = ok && buf == reference;
        const auto plan = par::make_plan(n, workers, par::Layout::Interleaved);
        par::fill(buf, plan, gen::kMinSeedIndex, gen::Method::BarrettModified);
        ok = ok && par::deinterleave(std::span<const double>(buf), plan) == reference;
    }
    return {"parallel.worker_invariance", ok,
            describe("n=%llu under 1/2/3/8 workers, both layouts", ull(n))};
}

CheckResult check_quality(bool fast) {
    const std::uint64_t n = fast ? 100000 : 1000000;
    std::vector<double> samples(n);
    std::vector<Residue> residues(n);
    gen::GeneratorState state = gen::seed_from_index(gen::kMinSeedIndex);
    for (std::uint64_t i = 0; i < n; ++i) {
        residues[i] = gen::next(state);
        samples[i] = gen::to_unit_interval(residues[i]);
    }
    const auto chi = quality::chi_square_uniformity(samples, 1000);
    const auto mono = quality::monobit_mantissa(residues);
    const auto corr = quality::serial_correlation(samples, 1);
    return {"quality.suite", chi.pass && mono.pass && corr.pass,
            describe("chi-square/monobit/lag-1 on %llu samples", ull(n))};
}

}  // namespace

std::vector<CheckResult> run_all(bool fast, const modred::ReductionConstants& c) {
    std::vector<CheckResult> results;
    results.push_back(check_constants(c));
    results.push_back(check_equivalence(fast, c));
    results.push_back(check_skip_ahead(fast));
    results.push_back(check_method_streams(fast));
    results.push_back(check_alpha(fast));
    results.push_back(check_period_law(fast));
    results.push_back(check_worker_invariance(fast));
    results.push_back(check_quality(fast));
    return results;
}

bool all_passed(std::span<const CheckResult> results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

}  // namespace bcn::selftest
