#ifndef CAYLEY_CENSUS_HPP
#define CAYLEY_CENSUS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cayley/barriers.hpp"
#include "cayley/core.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/group.hpp"

namespace cayley {

// One table row; `filtered` present when the census ran with a predicate.
struct CensusRow {
    int n = 0;
    std::uint64_t total = 0;
    std::optional<std::uint64_t> filtered;
};

struct CensusTable {
    std::vector<CensusRow> rows;
    std::string filter_label;
    std::string model_label;
    bool cumulative = true; // ball counts; false = per-sphere counts

    std::uint64_t sphere_total(int n) const;
    std::uint64_t sphere_filtered(int n) const;
    int n_max() const { return rows.empty() ? -1 : rows.back().n; }
};

// Predicates are pure functions of (model, element) and safe to evaluate
// concurrently.  "Conjugate into a factor" deliberately includes the
// identity (it lies in both factors).
using ElementPredicate = std::function<bool(const GroupModel&, const Elem&)>;

ElementPredicate pred_free_product_hyperbolic();
ElementPredicate pred_conj_into_factor();
ElementPredicate pred_raag_join_bound();
ElementPredicate pred_raag_rank1_candidate();
ElementPredicate pred_barrier_free(BarrierQuery q, Budget budget = {});

// Ball census of elements satisfying the predicate (null = count all),
// cumulative rows 0..n_max.
CensusTable census(const GroupModel& m, int n_max, const ElementPredicate& predicate = nullptr,
                   const Budget& budget = {}, int threads = 1);

// ---------------------------------------------------------------------------
// Exponent estimation
// ---------------------------------------------------------------------------

struct ExponentEstimate {
    double value = 0; // the regression estimate
    enum class Method { LogRegression, Ratio, ExactFormula } method = Method::LogRegression;
    std::pair<int, int> window{0, 0}; // [n_min, n_max] actually fitted
    double residual = 0;              // rms residual of the regression
    double ratio_value = 0;           // mean consecutive log-ratio on the window
    bool window_shrunk = false;       // zero-count rows were dropped
    bool methods_agree = true;        // |regression - ratio| <= 0.05
};

// Converts the table to annulus counts of width `delta` and fits the tail:
// least-squares slope of log-count vs n over the last max(4, rows/2) usable
// points, plus the averaged consecutive log-ratio.  Throws invalid_argument
// with fewer than 4 usable rows.
ExponentEstimate exponent(const CensusTable& table, int delta, bool use_filtered = false);

// Closed-form growth rate when the model has one (free groups and free
// products of finite/cyclic factors via their sphere recursion); used by the
// CLI for dry-run cost prediction.
std::optional<double> exact_growth_rate(const GroupModel& m);

// Partial Poincare series: sum over N(o, n_max) (cap predicate) of
// exp(-s d(o, g o)).
double poincare_partial(const GroupModel& m, double s, int n_max,
                        const ElementPredicate& predicate = nullptr, const Budget& budget = {},
                        int threads = 1);

// ---------------------------------------------------------------------------
// Conjugacy counting
// ---------------------------------------------------------------------------

// ell^o([g]) with the canonical minimal representative, cross-validated by
// brute-force conjugator search in B(o, search_radius); a brute-force value
// below the reduction's is a reduction-rule bug and throws invariant_violation.
struct ConjLengthResult {
    int length = 0;
    Elem minimal_rep;
};
ConjLengthResult conj_length(const GroupModel& m, const Elem& g, int search_radius);

// Census of conjugacy classes with ell <= n (cumulative).  Classes are keyed
// by the model's canonical cyclic key; the predicate is applied to the
// minimal representative and spot-checked for conjugation invariance.
CensusTable conj_census(const GroupModel& m, int n_max,
                        const ElementPredicate& predicate = nullptr, const Budget& budget = {},
                        int threads = 1);

// ---------------------------------------------------------------------------
// Genericity and growth tightness
// ---------------------------------------------------------------------------

struct GenericityCurve {
    struct Row {
        int n = 0;
        std::uint64_t total = 0, filtered = 0;
        double ratio = 0;
    };
    std::vector<Row> rows;
    double decay = 0;    // fitted decay rate of the ratio (positive = decaying)
    double residual = 0; // rms residual of the log-ratio fit
    bool exponential = false;
};
GenericityCurve genericity_curve(const GroupModel& m, int n_max, const ElementPredicate& predicate,
                                 const Budget& budget = {}, int threads = 1,
                                 double residual_threshold = 0.05);
GenericityCurve genericity_from_table(const CensusTable& table, double residual_threshold = 0.05);

struct TightnessGap {
    ExponentEstimate subset;
    ExponentEstimate whole;
    double gap = 0; // whole - subset
};
TightnessGap tightness_gap(const GroupModel& m, int n_max, const ElementPredicate& predicate,
                           int delta = 0, const Budget& budget = {}, int threads = 1);
TightnessGap tightness_from_table(const CensusTable& table, int delta = 0);

} // namespace cayley

#endif
