#pragma once

// Modular reduction kernels for the step z -> 2^53 * z mod 3^33, the inner
// loop of the bcnrand generator. All kernels run in 64-bit integer arithmetic
// except reduce_ref, which goes through a full 128-bit intermediate and serves
// as the correctness reference for the others.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bcn {

// Generator state value: an integer in [0, 3^33). Streams produced by the
// generator only ever hold units of Z/3^33 (values coprime to 3).
struct Residue {
    std::uint64_t value = 0;
};

namespace modred {

inline constexpr std::uint64_t kModulus = 5559060566555523ull;  // 3^33
inline constexpr std::uint64_t kTwo53 = std::uint64_t{1} << 53;

// Precomputed constants shared by the reduction kernels.
//   m = 3^33,  a_red = 2^25,  m = a_red*q + r with r < a_red,
//   mu = floor(2^106 / m),    k_bits = 53 with m < 2^53 < 2m.
struct ReductionConstants {
    std::uint64_t m;
    std::uint64_t a_red;
    std::uint64_t q;
    std::uint64_t r;
    double qinv;  // 1.0 / q, quotient reciprocal for the fast path
    std::uint64_t mu;
    int k_bits;
};

constexpr ReductionConstants constants() {
    return ReductionConstants{
        kModulus,
        std::uint64_t{1} << 25,
        165672915ull,           // floor(3^33 / 2^25)
        5946243ull,             // 3^33 mod 2^25
        1.0 / 165672915.0,
        0x33D9481681D79Dull,    // floor(2^106 / 3^33)
        53,
    };
}

// Recomputes every field of `c` from scratch (3^33 by repeated multiplication,
// mu by binary long division of 2^106, the q/r split by plain division) and
// returns false on any disagreement. Used by the selftest to catch a corrupted
// constant table.
bool verify_constants(const ReductionConstants& c);

// High 64 bits of the 128-bit product a*b, computed from 32-bit halves.
constexpr std::uint64_t wide_mul_hi(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t a_lo = a & 0xFFFFFFFFull;
    const std::uint64_t a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xFFFFFFFFull;
    const std::uint64_t b_hi = b >> 32;
    const std::uint64_t mid1 = a_hi * b_lo;
    const std::uint64_t mid2 = b_hi * a_lo;
    const std::uint64_t carry =
        ((a_lo * b_lo) >> 32) + (mid1 & 0xFFFFFFFFull) + (mid2 & 0xFFFFFFFFull);
    return a_hi * b_hi + (mid1 >> 32) + (mid2 >> 32) + (carry >> 32);
}

namespace detail {

inline void require_in_range(std::uint64_t z, std::uint64_t m, const char* who) {
    if (z >= m) throw std::domain_error(std::string(who) + ": residue out of range");
}

// One L'Ecuyer stage: (2^25 * s) mod m, valid for s <= 4m. With t = floor(s/q)
// the identity 2^25*(s - t*q) - t*r = 2^25*s - t*m keeps every intermediate
// strictly between -m and m, so a single conditional add canonicalizes.
inline std::uint64_t lecuyer_stage(std::uint64_t s, const ReductionConstants& c) {
    const auto t = static_cast<std::int64_t>(s / c.q);
    std::int64_t v = ((static_cast<std::int64_t>(s) - t * static_cast<std::int64_t>(c.q)) << 25) -
                     t * static_cast<std::int64_t>(c.r);
    if (v < 0) v += static_cast<std::int64_t>(c.m);
    return static_cast<std::uint64_t>(v);
}

// Same stage with the quotient taken as trunc(s * (1.0/q)). The float quotient
// can be off by one near bin boundaries, so canonicalization allows for a
// result shifted by +-m.
inline std::uint64_t lecuyer_stage_fast(std::uint64_t s, const ReductionConstants& c) {
    const auto t = static_cast<std::int64_t>(static_cast<double>(s) * c.qinv);
    std::int64_t v = ((static_cast<std::int64_t>(s) - t * static_cast<std::int64_t>(c.q)) << 25) -
                     t * static_cast<std::int64_t>(c.r);
    const auto m = static_cast<std::int64_t>(c.m);
    while (v < 0) v += m;
    while (v >= m) v -= m;
    return static_cast<std::uint64_t>(v);
}

}  // namespace detail

// (2^53 * z) mod m through an exact 128-bit product; the reference the other
// kernels are checked against.
inline Residue reduce_ref(Residue z) {
    detail::require_in_range(z.value, kModulus, "reduce_ref");
    const auto wide = static_cast<unsigned __int128>(z.value) << 53;
    return Residue{static_cast<std::uint64_t>(wide % kModulus)};
}

// (2^53 * z) mod m as two L'Ecuyer reductions with stage multiplier 2^25,
// following the split 2^53 z = 2^25 * 2 * (2^25 * 4z mod m) mod m. Stage
// inputs are 4z < 4m and 2*(stage A) < 2m, both within the s <= 4m bound.
inline Residue lecuyer_step(Residue z, const ReductionConstants& c = constants()) {
    detail::require_in_range(z.value, c.m, "lecuyer_step");
    const std::uint64_t a = detail::lecuyer_stage(4 * z.value, c);
    return Residue{detail::lecuyer_stage(2 * a, c)};
}

// lecuyer_step with the float-reciprocal quotient in both stages. Produces
// identical outputs; kept as an opt-in fast path.
inline Residue lecuyer_step_fast(Residue z, const ReductionConstants& c = constants()) {
    detail::require_in_range(z.value, c.m, "lecuyer_step_fast");
    const std::uint64_t a = detail::lecuyer_stage_fast(4 * z.value, c);
    return Residue{detail::lecuyer_stage_fast(2 * a, c)};
}

// Classic Barrett reduction of x = 2^53 * z with k = 53: the quotient estimate
// is q3 = floor(mu * floor(x/2^52) / 2^54), the remainder is reconstructed
// mod 2^54, and at most two trailing subtractions land in [0, m).
inline Residue barrett_step(Residue z, const ReductionConstants& c = constants()) {
    detail::require_in_range(z.value, c.m, "barrett_step");
    const std::uint64_t xlo = kTwo53 * z.value;  // low half wraps by design
    const std::uint64_t xhi = wide_mul_hi(kTwo53, z.value);
    const std::uint64_t q1 = (xhi << 12) | (xlo >> 52);
    const std::uint64_t q2hi = wide_mul_hi(q1, c.mu);
    const std::uint64_t q2lo = q1 * c.mu;
    const std::uint64_t q3 = (q2hi << 10) | (q2lo >> 54);
    const std::uint64_t r1 = xlo & 0x3FFFFFFFFFFFFFull;
    const std::uint64_t r2 = (q3 * c.m) & 0x3FFFFFFFFFFFFFull;
    std::uint64_t r = r1 - r2;
    if (r1 < r2) r += 0x40000000000000ull;
    while (r >= c.m) r -= c.m;
    return Residue{r};
}

// Modified Barrett step. Because x = 2^53 z, the quotient input floor(x/2^53)
// is z itself and x mod 2^53 is zero, so both drop out: q3 = floor(mu*z/2^53),
// r = 2^53 - (q3*m mod 2^53), one conditional subtract. Not valid for z = 0
// (it would yield 2^53 - m instead of 0), hence the stricter precondition.
inline Residue barrett_modified_step(Residue z, const ReductionConstants& c = constants()) {
    if (z.value == 0) throw std::domain_error("barrett_modified_step: z = 0 not in domain");
    detail::require_in_range(z.value, c.m, "barrett_modified_step");
    const std::uint64_t q2hi = wide_mul_hi(z.value, c.mu);
    const std::uint64_t q2lo = z.value * c.mu;
    const std::uint64_t q3 = (q2hi << 11) | (q2lo >> 53);
    const std::uint64_t r2 = (q3 * c.m) & 0x1FFFFFFFFFFFFFull;
    std::uint64_t r = 0x20000000000000ull - r2;
    if (r >= c.m) r -= c.m;
    return Residue{r};
}

}  // namespace modred
}  // namespace bcn
