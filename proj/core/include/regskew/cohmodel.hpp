#ifndef REGSKEW_COHMODEL_HPP
#define REGSKEW_COHMODEL_HPP

#include <cstdint>

#include "regskew/gf2poly.hpp"

// Quotient model of the mod-2 cohomology of the unordered configuration space
// of k = 2^m points in R^d, presented on the generators w_1..w_{k-1} with
// deg w_i = i. The model is a sound vanishing filter, not a complete ring
// presentation: a monomial is deleted when one of the relations below applies,
// and nonvanishing is only ever certified through detect_pure_power.
//
// Relations, writing top = (d-1)(k-1) and j = exponent of w_{k-1}:
//   R1: weighted degree > top
//   R2: j = 0 and weighted degree >= top
//   R3: 1 <= j <= d-2 and weighted degree >= top
// The pure power w_{k-1}^{d-1} is not in the vanishing set.

namespace regskew {

struct QuotientModel {
    std::int64_t d = 0;          // d >= 2
    std::int64_t k = 0;          // k = 2^m, m >= 1
    std::int64_t top_degree = 0; // (d-1)(k-1)

    /// Validates d >= 2 and k a power of two >= 2.
    QuotientModel(std::int64_t d, std::int64_t k);

    /// The k = 2 model. The generators reduce to {w_1} and the relations
    /// coincide with F_2[w_1]/(w_1^d); the constructor asserts the agreement.
    static QuotientModel projective(std::int64_t d);

    std::size_t num_generators() const { return static_cast<std::size_t>(k - 1); }
};

/// True iff the monomial is killed by one of the relations R1-R3.
bool vanishes(const gf2::Monomial& mono, const QuotientModel& model);

/// Deletes every vanishing monomial. Idempotent and additive.
gf2::Gf2Poly reduce(const gf2::Gf2Poly& p, const QuotientModel& model);

/// Pure-power detector: requires every monomial of p to have weighted degree
/// (k-1)*j with 0 <= j <= d-1. Returns true iff
/// reduce(p * w_{k-1}^{d-1-j}) == w_{k-1}^{d-1}, which holds exactly when the
/// monomial w_{k-1}^j occurs in p; a true verdict certifies that p is a
/// nonzero class equal to w_{k-1}^j in the model.
bool detect_pure_power(const gf2::Gf2Poly& p, std::int64_t j, const QuotientModel& model);

} // namespace regskew

#endif
