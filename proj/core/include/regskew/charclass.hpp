#ifndef REGSKEW_CHARCLASS_HPP
#define REGSKEW_CHARCLASS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regskew/cohmodel.hpp"
#include "regskew/gf2poly.hpp"

// Total and dual Stiefel-Whitney classes of multiples of the configuration
// bundle over F(R^d,count)/Sym_count, and the nonvanishing certifications
// behind the regular / skew / regular-skew obstruction theorems. Composite
// counts are certified factorwise along the dyadic decomposition: a cross
// product of nonzero classes in distinct Kunneth summands is nonzero, so the
// product ring is never built.

namespace regskew {

/// Parameters of a class computation: the bundle xi_{R^d,count}, the
/// multiplicity m of m*xi, and the truncation degree.
struct ClassQuery {
    std::int64_t d = 2;
    std::int64_t count = 2;
    std::uint64_t multiplicity = 1;
    std::uint64_t target_degree = 0;
};

enum class Verdict { NonvanishingCertified, NotCertified };

std::string to_string(Verdict v);

/// Per-dyadic-factor result. `witness` is the surviving pure power
/// w_{count-1}^{witness_exponent} (the unit polynomial for a trivial factor).
struct FactorCertificate {
    std::int64_t count = 1;
    std::uint64_t target_degree = 0;
    std::int64_t witness_exponent = 0;
    bool certified = false;
    gf2::Gf2Poly witness{0};
    /// Coefficient of the pure power predicted by the Lucas binomial
    /// C(2^{gamma2(d,count)}-d-1, 2^{gamma(d)}-d-1); recorded for skew
    /// factors >= 4, where the identity applies.
    std::optional<int> lucas_coefficient;
};

struct Certificate {
    Verdict verdict = Verdict::NotCertified;
    /// Canonical witness rendering; factor witnesses joined by " x ".
    std::string witness;
    std::vector<FactorCertificate> trace;
    /// Sub-certificates of a regular-skew certification, labeled
    /// "regular" / "skew".
    std::vector<std::pair<std::string, Certificate>> parts;
    /// Recorded by certify_regular_skew: r = (d-1)(k-alpha(k)),
    /// s = (2^gamma(d)-d-1)(l-alpha(l)).
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> s;

    bool certified() const { return verdict == Verdict::NonvanishingCertified; }

    /// Canonical structured-text form (verdict, witness, per-factor trace).
    std::string to_text() const;
};

/// (1 + w_1 + ... + w_{count-1})^multiplicity truncated by weighted degree.
/// count must be a power of two >= 2 and d >= 2. For d = 2 the multiplicity
/// is first reduced mod 2: twice the bundle is trivial over the plane.
gf2::Gf2Poly total_class(std::int64_t d, std::int64_t count, std::uint64_t multiplicity,
                         std::uint64_t truncation_degree);
gf2::Gf2Poly total_class(const ClassQuery& q);

/// Series inverse of the total class. Always cross-checked against the
/// 2-power complement route (1+u)^{2^T - multiplicity} with 2^T beyond the
/// truncation window; a mismatch throws.
gf2::Gf2Poly dual_class(std::int64_t d, std::int64_t count, std::uint64_t multiplicity,
                        std::uint64_t truncation_degree);
gf2::Gf2Poly dual_class(const ClassQuery& q);

/// Certifies that the dual class of xi_{R^d,k} does not vanish in degree
/// (d-1)(k-alpha(k)) by certifying each dyadic factor of k. d >= 2, k >= 1.
Certificate certify_regular(std::int64_t d, std::int64_t k);

/// Certifies that the dual class of (d+1) xi_{R^d,l} does not vanish in
/// degree (2^gamma(d)-d-1)(l-alpha(l)). Trivially certified for d = 1 or
/// l = 1; otherwise certified factorwise with witness exponent
/// j = 2^gamma(d)-d-1 (j = 0 degenerates to the unit witness).
Certificate certify_skew(std::int64_t d, std::int64_t l);

/// Conjunction of certify_regular(d,k) and certify_skew(d,l); the witness is
/// the formal cross product and r, s are recorded. d, k, l >= 2.
Certificate certify_regular_skew(std::int64_t d, std::int64_t k, std::int64_t l);

/// One enumerated coefficient of the Chisholm vanishing audit: the exponent
/// tuple (j_1..j_{k-1}) and the parity of C(j_1+...+j_{k-1}; j_1,...,j_{k-1}).
struct AuditEntry {
    std::vector<std::uint32_t> exponents;
    int parity = 0;
};

/// For d and k powers of two, enumerates the exponent tuples of weighted
/// degree (d-1)(k-1) with 0 <= j_{k-1} <= d-2 that are supported on the
/// Dickson indices i = 2^m - 2^s (the generators that are genuinely pullbacks
/// of Dickson invariants; all other w_i live in the kernel summand and never
/// enter the coefficient argument). Throws if any parity is odd: for d a
/// power of two they all must vanish.
std::vector<AuditEntry> chisholm_coefficient_audit(std::int64_t d, std::int64_t k);

} // namespace regskew

#endif
