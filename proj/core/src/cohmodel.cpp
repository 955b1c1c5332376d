#include "regskew/cohmodel.hpp"

#include <stdexcept>

#include "regskew/dyadic.hpp"

namespace regskew {

using gf2::Gf2Poly;
using gf2::Monomial;

QuotientModel::QuotientModel(std::int64_t d_, std::int64_t k_)
    : d(d_), k(k_), top_degree((d_ - 1) * (k_ - 1)) {
    if (d < 2)
        throw std::invalid_argument("QuotientModel: requires d >= 2");
    if (k < 2 || !dyadic::is_power_of_two(static_cast<std::uint64_t>(k)))
        throw std::invalid_argument("QuotientModel: k must be a power of 2, k >= 2");
}

QuotientModel QuotientModel::projective(std::int64_t d) {
    QuotientModel m(d, 2);
    // Agreement with F_2[w_1]/(w_1^d): w_1^j vanishes exactly for j >= d.
    for (std::int64_t j = 0; j <= d + 2; ++j) {
        Monomial wj = Monomial::generator(1, 1, static_cast<std::uint16_t>(j));
        if (vanishes(wj, m) != (j >= d))
            throw std::logic_error("QuotientModel::projective: relation mismatch with F_2[w1]/(w1^d)");
    }
    return m;
}

bool vanishes(const Monomial& mono, const QuotientModel& model) {
    if (mono.num_generators() != model.num_generators())
        throw std::invalid_argument("vanishes: monomial over the wrong generator count");
    const std::uint64_t deg = mono.weighted_degree();
    const std::uint64_t top = static_cast<std::uint64_t>(model.top_degree);
    if (deg > top)
        return true; // R1
    if (deg < top)
        return false; // relations only reach degrees >= top, and R1 covers > top
    const std::int64_t j = mono.exponent(model.num_generators());
    if (j == 0)
        return true; // R2
    if (1 <= j && j <= model.d - 2)
        return true; // R3
    return false; // the pure power w_{k-1}^{d-1}
}

Gf2Poly reduce(const Gf2Poly& p, const QuotientModel& model) {
    if (p.num_generators() != model.num_generators())
        throw std::invalid_argument("reduce: polynomial over the wrong generator count");
    std::vector<Monomial> kept;
    for (const Monomial& m : p.terms())
        if (!vanishes(m, model))
            kept.push_back(m);
    return Gf2Poly::from_terms(p.num_generators(), std::move(kept));
}

bool detect_pure_power(const Gf2Poly& p, std::int64_t j, const QuotientModel& model) {
    if (j < 0 || j > model.d - 1)
        throw std::invalid_argument("detect_pure_power: j must satisfy 0 <= j <= d-1");
    const std::uint64_t expected = static_cast<std::uint64_t>((model.k - 1) * j);
    for (const Monomial& m : p.terms())
        if (m.weighted_degree() != expected)
            throw std::invalid_argument("detect_pure_power: monomial off the degree (k-1)*j");
    if (p.num_generators() != model.num_generators())
        throw std::invalid_argument("detect_pure_power: polynomial over the wrong generator count");

    const std::size_t g = model.num_generators();
    Monomial shift = Monomial::generator(g, g, static_cast<std::uint16_t>(model.d - 1 - j));
    Gf2Poly shifted = gf2::mul_truncated(
        p, Gf2Poly::from_terms(g, {shift}),
        static_cast<std::uint64_t>(model.top_degree));
    Gf2Poly reduced = reduce(shifted, model);

    Monomial pure = Monomial::generator(g, g, static_cast<std::uint16_t>(model.d - 1));
    return reduced == Gf2Poly::from_terms(g, {pure});
}

} // namespace regskew
