#ifndef REGSKEW_BOUNDS_HPP
#define REGSKEW_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Closed-form evaluation of the nonexistence bounds for k-regular maps,
// l-skew embeddings and k-regular-l-skew embeddings of R^d, uniformly
// reported as "minimal admissible N": each theorem of the form "no map for
// N <= B" contributes the entry B+1, so reports from differently phrased
// theorems compare directly.

namespace regskew::bounds {

enum class ProblemKind { Regular, Skew, RegularSkew };

struct Problem {
    ProblemKind kind = ProblemKind::Regular;
    std::int64_t k = 0;
    std::int64_t l = 0;
};

struct BoundEntry {
    std::string formula; // MAIN1, BRS, MAIN2, NAIVE, GT, MAIN3, STOJ, COMBO
    std::int64_t min_admissible_n = 0;
    std::string source;
};

enum class Tightness { Exact, Unknown };

struct BoundReport {
    Problem problem;
    std::int64_t d = 0;
    std::vector<BoundEntry> entries;
    std::int64_t best_lower = 0; // max over entries
    Tightness tight = Tightness::Unknown;
    std::optional<std::int64_t> tight_n;
    std::string tight_source;
    /// Construction family witnessing an EXACT claim, in the regcheck
    /// family syntax (e.g. "sphere_lift(3)").
    std::string tight_family;
    std::vector<std::string> notes;

    std::string to_text() const;
};

/// Minimal admissible N for a k-regular map R^d -> R^N. Entries: MAIN1 =
/// d(k-alpha(k))+alpha(k); for even k also BRS = (d+1)k/2. Exact for k = 1,
/// k = 2, k = 3, d = 1, and d = 2 with k a power of two.
BoundReport regular_bound(std::int64_t d, std::int64_t k); // d >= 1, k >= 1

/// Minimal admissible N for an l-skew embedding R^d -> R^N. Entries: MAIN2 =
/// 2^gamma(d)(l-alpha(l))+(d+1)alpha(l)-1 and NAIVE = (d+1)l-1; for l = 2
/// also GT = d+2^gamma(d), which must coincide with MAIN2. Never exact.
BoundReport skew_bound(std::int64_t d, std::int64_t l); // d >= 2, l >= 1

/// Minimal admissible N for a k-regular-l-skew embedding. k = 0 delegates to
/// skew_bound; l = 0 delegates to regular_bound shifted by the affine-lift
/// equivalence (affinely (k-1)-regular <-> k-regular of x -> (1,f(x))).
BoundReport regular_skew_bound(std::int64_t d, std::int64_t k, std::int64_t l); // d >= 2

/// Lower bound (d-1)(k-alpha(k)) for the Lusternik-Schnirelmann category of
/// the unordered configuration space of k points in R^d.
std::int64_t ls_category_bound(std::int64_t d, std::int64_t k); // d >= 2, k >= 2

struct TableCell {
    std::int64_t l = 0;
    std::int64_t d = 0;
    std::int64_t main2 = 0;
    std::int64_t stojanovic = 0;
    /// Published reference values, set only where they differ from the
    /// formula (the one known case: l = 5, d = 6, second row prints 24 where
    /// 5(d+1)-1 gives 34).
    std::optional<std::int64_t> published_main2;
    std::optional<std::int64_t> published_stojanovic;

    bool has_discrepancy() const { return published_main2 || published_stojanovic; }
};

struct ComparisonTable {
    std::vector<TableCell> cells; // row-major: l in input order, then d
};

/// MAIN2 vs the Stojanovic bound l(d+1)-1 on a grid, with published
/// reference values cross-checked where available (l in {3,4,5}, d in 2..8).
ComparisonTable comparison_table(const std::vector<std::int64_t>& l_values,
                                 const std::vector<std::int64_t>& d_values);

/// CSV with header "l,d,main2,stojanovic"; byte-identical across runs.
std::string to_csv(const ComparisonTable& table);

} // namespace regskew::bounds

#endif
