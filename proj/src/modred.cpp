#include "bcnrand/modred.hpp"

namespace bcn::modred {

namespace {

// floor(2^106 / m) by binary long division: feed the 107 bits of the dividend
// (a one followed by 106 zeros) through a restoring divider. Remainders stay
// below m < 2^53, so everything fits in 64 bits and no wide type or literal
// is involved.
std::uint64_t mu_by_long_division(std::uint64_t m) {
    std::uint64_t quotient = 0;
    std::uint64_t rem = 0;
    for (int bit = 106; bit >= 0; --bit) {
        rem = (rem << 1) | (bit == 106 ? 1u : 0u);
        quotient <<= 1;
        if (rem >= m) {
            rem -= m;
            quotient |= 1;
        }
    }
    return quotient;
}

}  // namespace

bool verify_constants(const ReductionConstants& c) {
    std::uint64_t pow = 1;
    for (int i = 0; i < 33; ++i) pow *= 3;
    if (c.m != pow) return false;
    if (c.a_red != (std::uint64_t{1} << 25)) return false;
    if (c.q != c.m / c.a_red || c.r != c.m % c.a_red) return false;
    if (c.a_red * c.q + c.r != c.m || c.r >= c.a_red) return false;
    if (4 * c.a_red * c.a_red >= c.m) return false;  // L'Ecuyer bound 2^52 < m
    if (c.qinv != 1.0 / static_cast<double>(c.q)) return false;
    if (c.mu != mu_by_long_division(c.m)) return false;
    if (c.k_bits != 53) return false;
    const std::uint64_t two_k = std::uint64_t{1} << c.k_bits;
    if (!(c.m < two_k && two_k < 2 * c.m)) return false;
    return true;
}

}  // namespace bcn::modred
