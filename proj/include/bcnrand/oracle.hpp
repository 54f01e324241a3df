#pragma once

// Ground-truth computations independent of the generator: the exact
// fractional expansion of the source constant alpha = sum_k 1/(3^k 2^(3^k)),
// and brute-force multiplicative-order enumeration at small powers of three.
// Used to validate the generator against the mathematics rather than against
// itself.

#include <cstdint>

namespace bcn::oracle {

// Exact fractional part of 2^n * alpha truncated to the first
// `denominator_power` series terms: numerator / 3^denominator_power.
struct AlphaFraction {
    std::uint64_t numerator = 0;
    int denominator_power = 0;
};

// 3^j for j in [0, 33].
std::uint64_t pow3(int j);

// Truncated expansion sum_{k=1..terms} (2^(n-3^k) mod 3^k) * 3^(terms-k)
// reduced mod 3^terms, over denominator 3^terms. Requires n > 3^terms so
// every retained term has a positive exponent, and 1 <= terms <= 33.
AlphaFraction alpha_fraction(std::uint64_t n, int terms);

// Least t > 0 with (2^base_exponent)^t = 1 mod 3^modulus_power, by direct
// iteration. Feasible range: modulus_power in [2, 13].
std::uint64_t multiplicative_order(unsigned base_exponent, int modulus_power);

}  // namespace bcn::oracle
