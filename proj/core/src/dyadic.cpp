#include "regskew/dyadic.hpp"

#include <bit>
#include <stdexcept>

namespace regskew::dyadic {

DyadicProfile DyadicProfile::of(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("DyadicProfile: n must be positive");
    DyadicProfile p;
    p.n = n;
    p.alpha = static_cast<std::uint32_t>(std::popcount(n));
    for (std::uint32_t r = 0; r < 64; ++r)
        if (n >> r & 1)
            p.powers.push_back(r);
    return p;
}

std::uint32_t alpha(std::uint64_t k) {
    if (k == 0)
        throw std::invalid_argument("alpha: undefined for k = 0");
    return static_cast<std::uint32_t>(std::popcount(k));
}

std::uint32_t gamma(std::uint64_t d) {
    if (d == 0)
        throw std::invalid_argument("gamma: undefined for d = 0");
    return static_cast<std::uint32_t>(std::bit_width(d));
}

std::uint32_t gamma2(std::uint64_t d, std::uint64_t l) {
    if (d < 2 || l < 2)
        throw std::invalid_argument("gamma2: requires d >= 2 and l >= 2");
    return static_cast<std::uint32_t>(std::bit_width((d - 1) * (l - 1)));
}

int binom_mod2(std::uint64_t m, std::uint64_t n) {
    return (n & ~m) == 0 ? 1 : 0;
}

int multinom_mod2(std::span<const std::uint64_t> parts) {
    std::uint64_t seen = 0;
    for (std::uint64_t p : parts) {
        if (seen & p)
            return 0;
        seen |= p;
    }
    return 1;
}

int multinom_mod2(std::initializer_list<std::uint64_t> parts) {
    return multinom_mod2(std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

bool is_power_of_two(std::uint64_t k) {
    return k != 0 && (k & (k - 1)) == 0;
}

} // namespace regskew::dyadic
