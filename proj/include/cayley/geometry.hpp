#ifndef CAYLEY_GEOMETRY_HPP
#define CAYLEY_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/group.hpp"

namespace cayley {

// Nearest-point projection pi_X(y): all x in X with d(y, x) = d(y, X).
PointSet project(const GroupModel& m, const Elem& y, const PointSet& X);

int dist_to_set(const GroupModel& m, const Elem& y, const PointSet& X);

// d^pi_X(Z1, Z2) = diam(pi_X(Z1 u Z2)).  Satisfies the triangle inequality in
// the middle argument (property-tested).
int proj_diameter(const GroupModel& m, const PointSet& X, const PointSet& Z1, const PointSet& Z2);

PointSet translate(const GroupModel& m, const Elem& g, const PointSet& X);

// ---------------------------------------------------------------------------
// Contraction testing
// ---------------------------------------------------------------------------

// How many geodesics to examine: exhaustive over all endpoint pairs in
// N(o, radius), or a seeded sample of pairs.
struct GeodesicBudget {
    enum class Mode { Exhaustive, Sampled };
    Mode mode = Mode::Exhaustive;
    int radius = 4;
    std::uint64_t geodesics_per_pair = 100'000;
    std::uint64_t sample_pairs = 0;   // Sampled mode only
    std::uint64_t seed = 0;           // Sampled mode only
    Budget ball;
};

struct ContractionWitness {
    Elem from, to;        // geodesic endpoints
    Word word;            // the violating geodesic (letters from `from`)
    int dist_to_set = 0;  // d(gamma, X), >= C on a valid witness
    int proj_diam = 0;    // d^pi_X(gamma), > C on a valid witness
};

struct ContractionVerdict {
    double constant_tested = 0;
    bool pass = false;
    std::optional<ContractionWitness> witness;
    std::uint64_t geodesics_examined = 0;
    bool exhaustive = true; // false when the budget sampled or truncated
};

// Tests "every geodesic gamma with d(gamma, X) >= C has d^pi_X(gamma) <= C"
// over the budgeted geodesic family.  Degenerate one-point geodesics count.
// The returned witness (if any) is the scan-least one: endpoint pairs in
// ShortLex order, geodesics between a pair in ShortLex order.
ContractionVerdict contraction_verdict(const GroupModel& m, const PointSet& X, double C,
                                       const GeodesicBudget& budget);

// Smallest passing C on the half-integer grid {0.5, 1, ..., radius}, or
// +infinity when every grid value fails.
double estimate_contraction_constant(const GroupModel& m, const PointSet& X,
                                     const GeodesicBudget& budget);

// Re-checks a witness from first principles; used to keep verdicts replayable.
bool verify_witness(const GroupModel& m, const PointSet& X, double C,
                    const ContractionWitness& w);

// ---------------------------------------------------------------------------
// Orbit maps and axes
// ---------------------------------------------------------------------------

// Fit of lambda * |n| - c <= d(o, h^n o) <= Lambda * |n| + c over 1 <= |n| <= n_max
// with c = 0; degenerate flags a bounded (torsion) orbit within the range.
struct QieFit {
    double lower_slope = 0;
    double upper_slope = 0;
    int additive = 0;
    bool degenerate = false;
};

QieFit qie_check(const GroupModel& m, const Elem& h, int n_max);

// Truncated axis {f h^n o : |n| <= extent, f in extras u {1}}, closed under
// inversion of the power.  Extras supply coset representatives of E(h) over
// <h> when the caller knows them.
struct AxisSegment {
    PointSet points;
    Elem generator;
    int extent = 0;
    std::vector<Elem> extras;
};

AxisSegment build_axis(const GroupModel& m, const Elem& h, int extent,
                       const std::vector<Elem>& extras = {});

// Cyclic root of h: the shortest r with r^k = h (k >= 1).  For cyclically
// reduced h this searches normal-form prefixes, which is exact on the free
// and free-product models used here.
Elem maximal_cyclic_root(const GroupModel& m, const Elem& h);

// ---------------------------------------------------------------------------
// Bounded projection / bounded intersection
// ---------------------------------------------------------------------------

struct BoundedProjectionReport {
    bool pass = true;
    int worst_value = 0;
    int worst_from = -1, worst_onto = -1;        // indices into the family
    // diam(N_r(X) cap N_r(X')) for each requested r and each ordered pair
    struct IntersectionRow {
        int from, onto, r, diam;
    };
    std::vector<IntersectionRow> intersections;
};

// Verifies d^pi_{X'}(X, X) <= B for all ordered pairs of distinct members and
// measures the r-neighborhood intersections for the requested radii.
BoundedProjectionReport bounded_projection_check(const GroupModel& m,
                                                 const std::vector<PointSet>& family, double B,
                                                 const std::vector<int>& rs = {1, 2});

// diam(N_r(X) cap N_r(Y)), exact: candidates are the r-balls around the
// points of X.  diam(empty) = 0.
int neighborhood_intersection_diam(const GroupModel& m, const PointSet& X, const PointSet& Y,
                                   int r);

} // namespace cayley

#endif
