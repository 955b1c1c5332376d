#ifndef REGSKEW_DYADIC_HPP
#define REGSKEW_DYADIC_HPP

#include <cstdint>
#include <span>
#include <vector>

// Integer-level dyadic combinatorics: digit counts, the gamma functions and
// mod-2 binomial/multinomial tests. Everything here is exact bit arithmetic;
// there is deliberately no floating-point log anywhere (it misrounds at
// powers of two, and every formula downstream is an exact integer statement).

namespace regskew::dyadic {

/// Dyadic expansion of a positive integer: n = sum_t 2^{powers[t]},
/// powers strictly ascending, alpha = number of summands.
struct DyadicProfile {
    std::uint64_t n = 0;
    std::uint32_t alpha = 0;
    std::vector<std::uint32_t> powers;

    static DyadicProfile of(std::uint64_t n);
};

/// Number of ones in the binary expansion. Rejects k = 0.
std::uint32_t alpha(std::uint64_t k);

/// gamma(d) = floor(log2 d) + 1, i.e. the unique t with 2^{t-1} <= d < 2^t.
/// Rejects d = 0.
std::uint32_t gamma(std::uint64_t d);

/// Smallest t with 2^t > (d-1)(l-1). Requires d >= 2 and l >= 2.
std::uint32_t gamma2(std::uint64_t d, std::uint64_t l);

/// C(m,n) mod 2: 1 iff the binary digits of n are a subset of those of m.
int binom_mod2(std::uint64_t m, std::uint64_t n);

/// Multinomial coefficient C(sum parts; parts...) mod 2: 1 iff the binary
/// representations of the parts are pairwise disjoint (carry-free addition).
int multinom_mod2(std::span<const std::uint64_t> parts);
int multinom_mod2(std::initializer_list<std::uint64_t> parts);

/// True iff k = 2^m for some m >= 0.
bool is_power_of_two(std::uint64_t k);

} // namespace regskew::dyadic

#endif
