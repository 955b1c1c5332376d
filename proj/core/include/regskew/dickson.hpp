#ifndef REGSKEW_DICKSON_HPP
#define REGSKEW_DICKSON_HPP

#include <cstdint>
#include <string>
#include <vector>

// Dickson invariants q_{m,s}: the coefficients of X^{2^s} in the additive
// polynomial prod_{v in F_2^m} (X + v.x). They generate the GL_m(F_2)
// invariants of F_2[x_1..x_m]; here they are constructed concretely for
// small m and brute-force checked, grounding the names used by the
// cohomology model. Variables x_i all have degree 1 (ordinary grading), so
// this module carries its own dense polynomial type instead of the weighted
// one.

namespace regskew::dickson {

/// Polynomial over F_2 in a fixed number of degree-1 variables.
/// Terms are exponent vectors; presence means coefficient 1.
class XPoly {
public:
    explicit XPoly(std::size_t num_vars) : vars_(num_vars) {}
    static XPoly zero(std::size_t num_vars) { return XPoly(num_vars); }
    static XPoly one(std::size_t num_vars);
    static XPoly variable(std::size_t num_vars, std::size_t index); // 1-based
    /// Linear form v.x for a bitmask v over the variables.
    static XPoly linear_form(std::size_t num_vars, std::uint32_t mask);

    std::size_t num_vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::vector<std::uint16_t>>& terms() const { return terms_; }

    /// Total degree of the highest term, 0 for the zero polynomial.
    std::uint32_t degree() const;
    bool is_homogeneous() const;

    XPoly plus(const XPoly& other) const;
    XPoly times(const XPoly& other) const;
    XPoly pow(std::uint32_t e) const;

    /// Substitution x_i -> sum_j A[i][j] x_j; rows of A are variable bitmasks.
    XPoly substituted(const std::vector<std::uint32_t>& matrix_rows) const;

    bool operator==(const XPoly& other) const {
        return vars_ == other.vars_ && terms_ == other.terms_;
    }

    /// "x1^2*x2 + x1*x2^2" style, same conventions as the w-polynomials.
    std::string str() const;

private:
    std::size_t vars_;
    std::vector<std::vector<std::uint16_t>> terms_; // sorted (degree, lex desc), unique

    void normalize(std::vector<std::vector<std::uint16_t>> raw);
};

struct DicksonAlgebra {
    std::uint32_t m = 1;
    /// q_{m,m-1}, ..., q_{m,0} in that order; invariants[i] = q_{m, m-1-i}.
    std::vector<XPoly> invariants;

    const XPoly& q(std::uint32_t s) const { return invariants.at(m - 1 - s); }
};

/// Expands prod_{v in F_2^m} (X + v.x) and reads off the coefficients of
/// X^{2^s}. Checks on the way that the product is additive in X: the
/// coefficient of X^{2^m} is 1 and every other X-degree besides the 2^s has
/// zero coefficient. Requires 1 <= m <= 4 (2^m linear factors).
DicksonAlgebra dickson_invariants(std::uint32_t m);

/// All invertible m x m matrices over F_2, each as a vector of row bitmasks.
std::vector<std::vector<std::uint32_t>> gl_matrices(std::uint32_t m);

/// True iff the given polynomial is fixed by every element of GL_m(F_2).
bool is_gl_invariant(const XPoly& p, std::uint32_t m);

/// Exhaustive GL-invariance check of every q_{m,s}. m = 4 means 20160
/// matrices and is rejected unless allow_long_run is set.
bool verify_gl_invariance(const DicksonAlgebra& alg, bool allow_long_run = false);

} // namespace regskew::dickson

#endif
