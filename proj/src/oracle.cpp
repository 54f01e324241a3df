#include "bcnrand/oracle.hpp"

#include <stdexcept>

#include "bcnrand/generator.hpp"

namespace bcn::oracle {

std::uint64_t pow3(int j) {
    if (j < 0 || j > 33) throw std::invalid_argument("pow3: exponent outside [0, 33]");
    std::uint64_t p = 1;
    for (int i = 0; i < j; ++i) p *= 3;
    return p;
}

AlphaFraction alpha_fraction(std::uint64_t n, int terms) {
    if (terms < 1 || terms > 33) {
        throw std::invalid_argument("alpha_fraction: terms outside [1, 33]");
    }
    const std::uint64_t denom = pow3(terms);
    if (n <= denom) {
        throw std::invalid_argument("alpha_fraction: n must exceed 3^terms");
    }
    // Each term {2^(n-3^k) / 3^k} contributes (2^(n-3^k) mod 3^k) * 3^(terms-k)
    // over the common denominator 3^terms. Every product is below 3^terms and
    // the sum is reduced as it goes, so 64 bits suffice throughout.
    std::uint64_t acc = 0;
    for (int k = 1; k <= terms; ++k) {
        const std::uint64_t modulus = pow3(k);
        const std::uint64_t digit = gen::modpow2(n - modulus, modulus);
        acc = (acc + digit * pow3(terms - k)) % denom;
    }
    return AlphaFraction{acc, terms};
}

std::uint64_t multiplicative_order(unsigned base_exponent, int modulus_power) {
    if (modulus_power < 2 || modulus_power > 13) {
        throw std::invalid_argument("multiplicative_order: modulus power outside [2, 13]");
    }
    const std::uint64_t modulus = pow3(modulus_power);
    const std::uint64_t c = gen::modpow2(base_exponent, modulus);
    std::uint64_t acc = c;
    std::uint64_t t = 1;
    const std::uint64_t limit = 2 * modulus;  // ord divides 2*3^(j-1) < 2*3^j
    while (acc != 1) {
        acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * c % modulus);
        if (++t > limit) {
            throw std::runtime_error("multiplicative_order: no cycle found (base not a unit?)");
        }
    }
    return t;
}

}  // namespace bcn::oracle
