#pragma once

// The generator proper: seeding from a starting index, stepping, O(log k)
// skip-ahead, and conversion to unit-interval doubles.
//
// The sequence is the LCG z_k = 2^53 * z_{k-1} mod 3^33 seeded by
// z_0 = 2^(a - 3^33) * floor(3^33 / 2) mod 3^33 for a starting index a in
// [3^33 + 100, 2^53]. Its period is 2 * 3^32. Every variate is z_k * 3^-33.

#include <cstdint>
#include <string>

#include "bcnrand/modred.hpp"

namespace bcn::gen {

enum class Method { Ref128, LEcuyer, Barrett, BarrettModified };

inline constexpr std::uint64_t kMinSeedIndex = modred::kModulus + 100;
inline constexpr std::uint64_t kMaxSeedIndex = std::uint64_t{1} << 53;
inline constexpr std::uint64_t kPeriod = 3706040377703682ull;  // 2 * 3^32
inline constexpr double kInvModulus = 1.0 / 5559060566555523.0;

struct GeneratorState {
    std::uint64_t seed_index = 0;  // position a in the binary expansion
    Residue z;                     // current iterate
    std::uint64_t k = 0;           // steps taken since seeding
    Method method = Method::BarrettModified;
};

// 2^e mod `modulus` by square-and-multiply over 128-bit intermediates.
// `modulus` must be odd and below 2^63.
std::uint64_t modpow2(std::uint64_t exponent, std::uint64_t modulus);

// Seeds z_0 from the starting index a; rejects a outside
// [kMinSeedIndex, kMaxSeedIndex].
GeneratorState seed_from_index(std::uint64_t a, Method method = Method::BarrettModified);

// State after k steps from index a, computed directly:
// z_k = 2^(53 * (k mod P)) * z_0 mod m with P the period. Equals k calls
// to next() from seed_from_index(a).
GeneratorState state_at(std::uint64_t a, std::uint64_t k,
                        Method method = Method::BarrettModified);

const char* method_name(Method m);

// Parses "Ref128", "LEcuyer", "Barrett", "BarrettModified" (case-insensitive);
// throws std::invalid_argument otherwise.
Method parse_method(const std::string& name);

// Advances the state one step with its kernel and returns the new residue.
inline Residue next(GeneratorState& state) {
    const auto c = modred::constants();
    switch (state.method) {
        case Method::Ref128:
            state.z = modred::reduce_ref(state.z);
            break;
        case Method::LEcuyer:
            state.z = modred::lecuyer_step(state.z, c);
            break;
        case Method::Barrett:
            state.z = modred::barrett_step(state.z, c);
            break;
        case Method::BarrettModified:
            state.z = modred::barrett_modified_step(state.z, c);
            break;
    }
    ++state.k;
    return state.z;
}

// z * 3^-33 via the reciprocal constant, strictly inside (0, 1). z = 0 is
// rejected rather than mapped to 0.0.
inline double to_unit_interval(Residue z) {
    if (z.value == 0) throw std::domain_error("to_unit_interval: z = 0 maps outside (0,1)");
    modred::detail::require_in_range(z.value, modred::kModulus, "to_unit_interval");
    return static_cast<double>(z.value) * kInvModulus;
}

}  // namespace bcn::gen
