#include <cmath>
#include <random>

#include "bcnrand/generator.hpp"
#include "doctest.h"

using namespace bcn;
using gen::Method;

namespace {

// Desk-script goldens.
constexpr std::uint64_t kSeed1 = 4258649398211344ull;   // z0 at a = 3^33 + 100
constexpr std::uint64_t kZ1 = 2138759898642167ull;      // one step from kSeed1
constexpr std::uint64_t kZ1000 = 5492007519572011ull;   // 1000 steps from kSeed1
constexpr std::uint64_t kSeedMax = 1895384862748766ull; // z0 at a = 2^53
constexpr std::uint64_t kTwo106ModM = 5239873117944745ull;

}  // namespace

TEST_CASE("modpow2 golden values and contract") {
    CHECK(gen::modpow2(0, modred::kModulus) == 1);
    CHECK(gen::modpow2(53, modred::kModulus) == 3448138688185469ull);
    CHECK(gen::modpow2(106, modred::kModulus) == kTwo106ModM);
    // chaining: 2^106 mod m is one step applied to 2^53 mod m
    CHECK(modred::reduce_ref(Residue{3448138688185469ull}).value == kTwo106ModM);
    CHECK_THROWS_AS(gen::modpow2(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(gen::modpow2(10, (std::uint64_t{1} << 63) + 1), std::invalid_argument);
}

TEST_CASE("seed_from_index golden values and range checks") {
    CHECK(gen::seed_from_index(gen::kMinSeedIndex).z.value == kSeed1);
    CHECK(gen::seed_from_index(gen::kMaxSeedIndex).z.value == kSeedMax);
    CHECK(gen::seed_from_index(gen::kMinSeedIndex).k == 0);

    CHECK_THROWS_AS(gen::seed_from_index(gen::kMinSeedIndex - 1), std::out_of_range);
    CHECK_THROWS_AS(gen::seed_from_index(gen::kMaxSeedIndex + 1), std::out_of_range);

    const std::uint64_t z = gen::seed_from_index(gen::kMaxSeedIndex).z.value;
    CHECK(z >= 1);
    CHECK(z < modred::kModulus);
}

TEST_CASE("seed doubling: z0(a+1) = 2*z0(a) mod m") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t a = gen::kMinSeedIndex + rng() % 100000000;
        const std::uint64_t z0 = gen::seed_from_index(a).z.value;
        const std::uint64_t z0_next = gen::seed_from_index(a + 1).z.value;
        CHECK(z0_next == (2 * z0) % modred::kModulus);
    }
}

TEST_CASE("next applies the kernel and advances k") {
    gen::GeneratorState state{gen::kMinSeedIndex, Residue{1}, 0, Method::BarrettModified};
    CHECK(gen::next(state).value == 3448138688185469ull);
    CHECK(state.k == 1);

    gen::GeneratorState from_seed = gen::seed_from_index(gen::kMinSeedIndex);
    CHECK(gen::next(from_seed).value == kZ1);
}

TEST_CASE("two next calls equal state_at(a, 2)") {
    gen::GeneratorState walk = gen::seed_from_index(gen::kMinSeedIndex);
    gen::next(walk);
    gen::next(walk);
    CHECK(walk.z.value == gen::state_at(gen::kMinSeedIndex, 2).z.value);
}

TEST_CASE("method streams are identical element by element") {
    gen::GeneratorState s[4] = {
        gen::seed_from_index(gen::kMinSeedIndex, Method::Ref128),
        gen::seed_from_index(gen::kMinSeedIndex, Method::LEcuyer),
        gen::seed_from_index(gen::kMinSeedIndex, Method::Barrett),
        gen::seed_from_index(gen::kMinSeedIndex, Method::BarrettModified),
    };
    for (int i = 0; i < 1000000; ++i) {
        const std::uint64_t a = gen::next(s[0]).value;
        REQUIRE(gen::next(s[1]).value == a);
        REQUIRE(gen::next(s[2]).value == a);
        REQUIRE(gen::next(s[3]).value == a);
    }
}

TEST_CASE("skip-ahead equals sequential stepping") {
    CHECK(gen::state_at(gen::kMinSeedIndex, 0).z.value == kSeed1);

    gen::GeneratorState walk = gen::seed_from_index(gen::kMinSeedIndex);
    for (int i = 0; i < 1000; ++i) gen::next(walk);
    CHECK(walk.z.value == kZ1000);
    CHECK(gen::state_at(gen::kMinSeedIndex, 1000).z.value == kZ1000);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t a = gen::kMinSeedIndex + rng() % 1000000;
        const std::uint64_t k = rng() % 50000;
        gen::GeneratorState seq = gen::seed_from_index(a);
        for (std::uint64_t i = 0; i < k; ++i) gen::next(seq);
        CHECK(gen::state_at(a, k).z.value == seq.z.value);
    }
}

TEST_CASE("skip-ahead composes: state_at(a, j+k) = state_at(a, j) stepped k times") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const std::uint64_t a = gen::kMinSeedIndex + rng() % 1000000;
        const std::uint64_t j = rng() % 1000000;
        const std::uint64_t k = rng() % 2000;
        gen::GeneratorState state = gen::state_at(a, j);
        for (std::uint64_t i = 0; i < k; ++i) gen::next(state);
        CHECK(state.z.value == gen::state_at(a, j + k).z.value);
        CHECK(state.k == j + k);
    }
}

TEST_CASE("skip-ahead survives k beyond the period") {
    // k and k + P give identical residues; 53*k is reduced before exponentiation.
    const std::uint64_t k = 123456789;
    CHECK(gen::state_at(gen::kMinSeedIndex, k).z.value ==
          gen::state_at(gen::kMinSeedIndex, k + gen::kPeriod).z.value);
}

TEST_CASE("to_unit_interval endpoints and rejection of zero") {
    CHECK(gen::to_unit_interval(Residue{1}) == doctest::Approx(1.79886e-16).epsilon(1e-4));
    CHECK(gen::to_unit_interval(Residue{1}) > 0.0);
    CHECK(gen::to_unit_interval(Residue{modred::kModulus - 1}) < 1.0);
    CHECK(gen::to_unit_interval(Residue{2779530283277761ull}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(gen::to_unit_interval(Residue{0}), std::domain_error);
    CHECK_THROWS_AS(gen::to_unit_interval(Residue{modred::kModulus}), std::domain_error);

    // normative form: multiplication by the reciprocal constant
    CHECK(gen::to_unit_interval(Residue{12345677}) == 12345677.0 * gen::kInvModulus);
}

TEST_CASE("streams stay strictly inside (0,1) and coprime to 3") {
    gen::GeneratorState state = gen::seed_from_index(gen::kMinSeedIndex + 777);
    for (int i = 0; i < 100000; ++i) {
        const Residue z = gen::next(state);
        REQUIRE(z.value % 3 != 0);
        const double u = gen::to_unit_interval(z);
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("method names parse and print") {
    CHECK(gen::parse_method("barrettmodified") == Method::BarrettModified);
    CHECK(gen::parse_method("Ref128") == Method::Ref128);
    CHECK(gen::parse_method("LEcuyer") == Method::LEcuyer);
    CHECK(std::string(gen::method_name(Method::Barrett)) == "Barrett");
    CHECK_THROWS_AS(gen::parse_method("mt19937"), std::invalid_argument);
}
