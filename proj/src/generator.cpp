#include "bcnrand/generator.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bcn::gen {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::uint64_t modpow2(std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus % 2 == 0) throw std::invalid_argument("modpow2: modulus must be odd");
    if (modulus >= (std::uint64_t{1} << 63)) {
        throw std::invalid_argument("modpow2: modulus must be below 2^63");
    }
    std::uint64_t result = 1 % modulus;
    std::uint64_t base = 2 % modulus;
    while (exponent != 0) {
        if (exponent & 1) result = mulmod(result, base, modulus);
        base = mulmod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

GeneratorState seed_from_index(std::uint64_t a, Method method) {
    if (a < kMinSeedIndex || a > kMaxSeedIndex) {
        throw std::out_of_range("seed_from_index: index outside [3^33+100, 2^53]");
    }
    constexpr std::uint64_t half_m = 2779530283277761ull;  // floor(3^33 / 2)
    const std::uint64_t p = modpow2(a - modred::kModulus, modred::kModulus);
    const std::uint64_t z0 = mulmod(p, half_m, modred::kModulus);
    return GeneratorState{a, Residue{z0}, 0, method};
}

GeneratorState state_at(std::uint64_t a, std::uint64_t k, Method method) {
    GeneratorState state = seed_from_index(a, method);
    // 53*(k mod P) <= 53*(P-1) < 2^63, so the exponent never overflows.
    const std::uint64_t hop = modpow2(53 * (k % kPeriod), modred::kModulus);
    state.z.value = mulmod(hop, state.z.value, modred::kModulus);
    state.k = k;
    return state;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Ref128: return "Ref128";
        case Method::LEcuyer: return "LEcuyer";
        case Method::Barrett: return "Barrett";
        case Method::BarrettModified: return "BarrettModified";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    std::string lower(name.size(), '\0');
    std::transform(name.begin(), name.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "ref128") return Method::Ref128;
    if (lower == "lecuyer") return Method::LEcuyer;
    if (lower == "barrett") return Method::Barrett;
    if (lower == "barrettmodified") return Method::BarrettModified;
    throw std::invalid_argument("unknown method: " + name);
}

}  // namespace bcn::gen
