#ifndef REGSKEW_REGCHECK_HPP
#define REGSKEW_REGCHECK_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Numerical/exact verification of the explicit map constructions: evaluates
// map families at sampled configurations and tests k-regularity (linear
// independence of the k value vectors) and affine regularity. Sampling can
// only refute regularity, never prove it, so verdicts are
// NO_COUNTEREXAMPLE_FOUND / COUNTEREXAMPLE / AUTOMATIC_FAILURE and never
// "regular".

namespace regskew::regcheck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// A named concrete map construction, evaluable at exact rational points.
///
/// real_moment(k):    R -> R^k,  x -> (1, x, ..., x^{k-1})
/// complex_moment(k): R^2 -> R^{2k-1},  z -> (1, z, ..., z^{k-1}) realified,
///                    constant first, then (Re, Im) pairs
/// sphere_lift(n):    R^n -> R^{n+2}, inverse stereographic projection from
///                    the north pole (0,..,0,1) onto S^n, then x -> (1, x).
///                    The convention is frozen: 0 maps to the south pole.
/// affine_lift(f):    x -> (1, f(x)), one extra target dimension
/// custom:            affine map given by coefficient rows acting on (1, x);
///                    identity(n) and constant_one(n) are named instances
class MapFamily {
public:
    enum class Kind { RealMoment, ComplexMoment, SphereLift, AffineLift, Custom };

    static MapFamily real_moment(std::int64_t k);
    static MapFamily complex_moment(std::int64_t k);
    static MapFamily sphere_lift(std::int64_t n);
    static MapFamily affine_lift(MapFamily inner);
    static MapFamily custom(std::int64_t domain_dim, std::vector<std::vector<Rational>> rows,
                            std::string label = "");
    static MapFamily identity(std::int64_t n);
    static MapFamily constant_one(std::int64_t n);

    /// Parses the canonical family syntax, e.g. "affine_lift(identity(2))".
    static MapFamily parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::int64_t domain_dim() const { return domain_dim_; }
    std::int64_t target_dim() const { return target_dim_; }
    /// Canonical name; parse(name()) reconstructs the family.
    const std::string& name() const { return name_; }

    /// Exact rational evaluation; throws on dimension mismatch.
    Point evaluate(const Point& point) const;

private:
    MapFamily() = default;
    Kind kind_ = Kind::Custom;
    std::int64_t param_ = 0;
    std::int64_t domain_dim_ = 0;
    std::int64_t target_dim_ = 0;
    std::shared_ptr<const MapFamily> inner_;
    std::vector<std::vector<Rational>> rows_;
    std::string name_;
};

/// Random configurations: rational coordinates with bounded numerator and
/// denominator, drawn from a seeded mt19937-64 via raw modulo mapping (the
/// engine's output sequence is fixed by the standard, so runs are portable).
struct RandomSampler {
    std::uint64_t seed = 42;
    std::int64_t trials = 1000;
    std::int64_t max_numerator = 1000;
    std::int64_t max_denominator = 1000;
};

/// Grid configurations: the same axis values on every coordinate, points in
/// lexicographic order, tuples enumerated as all k-combinations.
struct GridSampler {
    std::vector<Rational> axis_values;
};

using Sampler = std::variant<RandomSampler, GridSampler>;

struct ExactArithmetic {};
struct FloatArithmetic {
    double tolerance = 1e-9;
};
using Arithmetic = std::variant<ExactArithmetic, FloatArithmetic>;

enum class RegVerdict { NoCounterexampleFound, Counterexample, AutomaticFailure };

std::string to_string(RegVerdict v);

struct Failure {
    std::vector<Point> points;
    std::int64_t rank = 0;
    std::int64_t defect = 0;
};

struct RegularityReport {
    std::int64_t k = 0;
    std::int64_t trials = 0;
    std::vector<Failure> failures;
    /// Smallest pairwise squared distance among tested points
    /// (squared keeps it an exact rational).
    std::optional<Rational> min_separation_sq;
    std::string arithmetic; // "EXACT_RATIONAL" or "FLOAT(tolerance=...)"
    std::string rng = "mt19937-64";
    std::optional<std::uint64_t> seed;
    RegVerdict verdict = RegVerdict::NoCounterexampleFound;
    std::vector<std::string> notes;
};

/// For each sampled k-tuple of pairwise distinct points, forms the
/// k x target_dim matrix of values and computes its rank (fraction-free
/// elimination in exact mode, singular-value threshold in float mode).
/// k > target_dim is flagged AUTOMATIC_FAILURE (rank cannot reach k) but the
/// tuples are still sampled and recorded as failures.
RegularityReport check_k_regular(const MapFamily& family, std::int64_t k,
                                 const Sampler& sampler, const Arithmetic& arithmetic);

/// Affine k-regularity via the lift: check_k_regular of affine_lift(family)
/// with k+1 points. The report notes the reduction.
RegularityReport check_affinely_regular(const MapFamily& family, std::int64_t k,
                                        const Sampler& sampler, const Arithmetic& arithmetic);

/// Exact rank of a rational matrix by fraction-free (Bareiss) elimination on
/// the denominator-cleared rows.
std::int64_t rank_exact(const std::vector<std::vector<Rational>>& matrix);

/// Exact determinant of a square rational matrix.
Rational det_exact(const std::vector<std::vector<Rational>>& matrix);

/// Rank with singular values below tolerance * max(1, sigma_max) treated as
/// zero.
std::int64_t rank_float(const std::vector<std::vector<Rational>>& matrix, double tolerance);

} // namespace regskew::regcheck

#endif
