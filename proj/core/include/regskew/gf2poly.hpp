#ifndef REGSKEW_GF2POLY_HPP
#define REGSKEW_GF2POLY_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Sparse multivariate polynomials over F_2 with the weighted grading
// deg w_i = i. A polynomial is a finite set of monomials (presence means
// coefficient 1), so addition is symmetric difference and squaring is the
// Frobenius (termwise exponent doubling). All products are truncated eagerly
// by weighted degree; the classes computed downstream only ever live below a
// fixed top degree and eager truncation keeps term counts at desk scale.

namespace regskew::gf2 {

class Monomial {
public:
    /// Unit monomial (all exponents zero) on `num_generators` generators.
    explicit Monomial(std::size_t num_generators)
        : exps_(num_generators, 0), degree_(0) {}

    /// Monomial from an explicit exponent vector; exps[i] is the exponent of
    /// w_{i+1}.
    explicit Monomial(std::vector<std::uint16_t> exps);

    /// w_index^power on `num_generators` generators; index is 1-based.
    static Monomial generator(std::size_t num_generators, std::size_t index,
                              std::uint16_t power = 1);

    std::size_t num_generators() const { return exps_.size(); }

    /// Exponent of w_index, 1-based.
    std::uint16_t exponent(std::size_t index) const { return exps_.at(index - 1); }

    const std::vector<std::uint16_t>& exponents() const { return exps_; }

    /// Weighted degree: sum over i of i * exponent(i).
    std::uint64_t weighted_degree() const { return degree_; }

    bool is_unit() const { return degree_ == 0; }

    /// Exponentwise sum; throws on generator-count mismatch or exponent
    /// overflow (exponents are capped below 2^16).
    Monomial times(const Monomial& other) const;

    /// Frobenius square: every exponent doubled.
    Monomial squared() const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

    /// Canonical text: "1" for the unit, otherwise "w1^2*w3" style with
    /// exponent 1 left implicit.
    std::string str() const;

private:
    std::vector<std::uint16_t> exps_;
    std::uint64_t degree_;
};

/// Canonical order: weighted degree ascending, then exponent vectors
/// lexicographically descending (so w1^2 prints before w2).
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// Resource guard: operations throw TermLimitError when a result would exceed
/// this many monomials. Overridable (the CLI wires it to HRE_MAX_TERMS).
std::size_t term_limit();
void set_term_limit(std::size_t limit);

class TermLimitError : public std::runtime_error {
public:
    explicit TermLimitError(std::size_t limit)
        : std::runtime_error("polynomial exceeds the term-count guard (" +
                             std::to_string(limit) +
                             " terms); raise HRE_MAX_TERMS to override") {}
};

class Gf2Poly {
public:
    /// Zero polynomial on `num_generators` generators.
    explicit Gf2Poly(std::size_t num_generators) : gens_(num_generators) {}

    static Gf2Poly zero(std::size_t num_generators) { return Gf2Poly(num_generators); }
    static Gf2Poly one(std::size_t num_generators);
    /// w1 + w2 + ... + w_{num_generators}.
    static Gf2Poly generator_sum(std::size_t num_generators);
    /// Polynomial from a term list (deduplicated mod 2).
    static Gf2Poly from_terms(std::size_t num_generators, std::vector<Monomial> terms);

    std::size_t num_generators() const { return gens_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_unit(); }
    bool has_constant_term() const;
    bool contains(const Monomial& m) const;

    /// Terms in canonical order.
    const std::vector<Monomial>& terms() const { return terms_; }

    std::uint64_t max_degree() const {
        return terms_.empty() ? 0 : terms_.back().weighted_degree();
    }

    bool operator==(const Gf2Poly& other) const {
        return gens_ == other.gens_ && terms_ == other.terms_;
    }

    /// Canonical rendering: terms joined by " + ", "0" when empty.
    std::string str() const;

private:
    std::size_t gens_;
    std::vector<Monomial> terms_; // sorted by canonical_less, no duplicates

    friend Gf2Poly add(const Gf2Poly&, const Gf2Poly&);
    friend Gf2Poly mul_truncated(const Gf2Poly&, const Gf2Poly&, std::uint64_t);
    friend Gf2Poly pow_truncated(const Gf2Poly&, std::uint64_t, std::uint64_t);
    friend Gf2Poly invert_series(const Gf2Poly&, std::uint64_t);
    friend Gf2Poly graded_component(const Gf2Poly&, std::uint64_t);
    friend Gf2Poly truncate(const Gf2Poly&, std::uint64_t);
};

/// Sum in characteristic 2: symmetric difference of the term sets.
Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q);

/// Product with every monomial of weighted degree > max_degree discarded.
Gf2Poly mul_truncated(const Gf2Poly& p, const Gf2Poly& q, std::uint64_t max_degree);

/// p^e under truncation by repeated squaring; p^0 = 1.
Gf2Poly pow_truncated(const Gf2Poly& p, std::uint64_t e, std::uint64_t max_degree);

/// Multiplicative inverse as a truncated power series, computed as the
/// geometric series sum_{n>=0} (p+1)^n evaluated degree by degree.
/// Requires a constant term; mul_truncated(p, result, max_degree) == 1.
Gf2Poly invert_series(const Gf2Poly& p, std::uint64_t max_degree);

/// Sub-polynomial of monomials with weighted degree exactly `degree`.
Gf2Poly graded_component(const Gf2Poly& p, std::uint64_t degree);

/// Drop monomials of weighted degree > max_degree.
Gf2Poly truncate(const Gf2Poly& p, std::uint64_t max_degree);

inline Gf2Poly operator+(const Gf2Poly& p, const Gf2Poly& q) { return add(p, q); }

} // namespace regskew::gf2

#endif
