#ifndef CAYLEY_PATHS_HPP
#define CAYLEY_PATHS_HPP

#include <optional>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/geometry.hpp"
#include "cayley/group.hpp"

namespace cayley {

// A path from o with marked geodesic subpaths p_i, each tied to a contracting
// candidate set X_i.  Ranges are vertex-index ranges into the path's vertex
// sequence (0..len), in order and edge-disjoint.
struct AdmissibleDecomposition {
    struct Marked {
        std::size_t begin = 0, end = 0;
        PointSet set;
    };
    Word path;
    std::vector<Marked> marked;
    double D = 0, tau = 0;
    std::optional<std::pair<double, double>> uniform; // (L, Delta)
};

// Measured stand-in for the bounded-intersection gauge R(r), which has no
// closed form: the (LL2) disjunct holds when
// diam(N_r(X_i) cap N_r(X_{i+1})) <= coeff * r for every probed r.
struct AdmissibilityOptions {
    std::vector<int> intersection_radii = {1, 2};
    double intersection_coeff = 4.0;
};

struct AdmissibilityReport {
    struct Leg {
        std::size_t i = 0;
        bool exempt = false; // touches a path endpoint
        int length = 0;
        bool ok = true;
    };
    struct Bp {
        std::size_t i = 0;
        int forward = 0;  // d^pi_{X_i}((p_i)+, (p_{i+1})-)
        int backward = 0; // d^pi_{X_i}((p_{i-1})+, (p_i)-)
        bool ok = true;
    };
    struct Ll2 {
        std::size_t i = 0; // pair (i, i+1)
        int gap = 0;
        bool gap_ok = false;
        bool bounded_ok = false;
        std::vector<std::pair<int, int>> intersection_diams; // (r, diam)
        bool ok = true;
    };
    std::vector<Leg> ll1;
    std::vector<Bp> bp;
    std::vector<Ll2> ll2;
    bool vacuous = false; // no marked subsets
    bool verdict = false;
};

// Validates the decomposition invariants (ranges in order, legs geodesic,
// endpoints in their sets); throws invalid_argument when malformed.
void validate_decomposition(const GroupModel& m, const AdmissibleDecomposition& dec);

// (LL1), (BP), (LL2) evaluated exactly; boundary legs are LL1-exempt and the
// boundary BP convention is (p_{-1})+ := gamma_-, (p_{n+1})- := gamma_+.
AdmissibilityReport check_admissible(const GroupModel& m, const AdmissibleDecomposition& dec,
                                     const AdmissibilityOptions& opts = {});

// Uniform window |d((p_{i+1})-, (p_i)+) - L| <= Delta for consecutive pairs.
bool check_uniform(const GroupModel& m, const AdmissibleDecomposition& dec);

// Minimal eps such that linearly ordered vertices of `geodesic` come within
// eps of every marked-leg endpoint, by dynamic programming over positions.
double fellow_travel_offset(const GroupModel& m, const Word& geodesic,
                            const AdmissibleDecomposition& dec);

// Smallest c (0.25 grid, >= 1) with len(beta) <= c d(beta-, beta+) + c over
// all contiguous subwords.
double quasi_geodesic_constant(const GroupModel& m, const Word& path);

// Contraction verdict for the saturation: union of the X_i and the path
// vertices outside the marked legs.  Preconditions: admissible (+ uniform
// when set).  Returns the verdict at the smallest passing grid constant, or
// the failing verdict at the largest grid constant.
ContractionVerdict saturation_contraction(const GroupModel& m, const AdmissibleDecomposition& dec,
                                          const GeodesicBudget& budget,
                                          const AdmissibilityOptions& opts = {});

// Searches F (ShortLex by generator) for f such that o -> g o -> g f o -> g f h o,
// with the middle leg marked on g Ax(f), is (D, tau)-admissible.
struct ExtensionResult {
    bool found = false;
    Elem f;
    AdmissibleDecomposition dec;
};
ExtensionResult extension_concat(const GroupModel& m, const Elem& g, const Elem& h,
                                 const std::vector<AxisSegment>& F, double D, double tau,
                                 const AdmissibilityOptions& opts = {});

// Builds Phi(W) for all words W over B with 1 <= |W| <= word_len, using
// extension_concat between consecutive letters, and checks pairwise
// distinctness of the resulting elements.
struct InjectivityReport {
    bool pass = false;
    bool extension_failed = false;     // some pair admitted no f in F
    std::uint64_t words_built = 0;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> collision; // letter indices
};
InjectivityReport extension_injectivity_probe(const GroupModel& m, const std::vector<Elem>& B,
                                              const std::vector<AxisSegment>& F, double D,
                                              double tau, int word_len,
                                              const AdmissibilityOptions& opts = {});

} // namespace cayley

#endif
