#ifndef CAYLEY_BARRIERS_HPP
#define CAYLEY_BARRIERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/geometry.hpp"
#include "cayley/group.hpp"

namespace cayley {

// An (epsilon, f)-barrier query; with n_power set the barrier word is f^n.
struct BarrierQuery {
    double epsilon = 0;
    double big_m = 0;
    Elem f;
    std::optional<int> n_power;

    Elem barrier_word(const GroupModel& m) const;
};

struct BarrierWitness {
    Elem h;
    int dist_ho = 0;  // d(h o, gamma)
    int dist_hfo = 0; // d(h f o, gamma)
};

// Geodesic gamma given by base vertex and edge word.  Searches every h with
// d(h o, gamma) <= eps (complete region: translates of the eps-ball around
// each vertex) for d(h f o, gamma) <= eps; returns the ShortLex-least witness
// or nothing.  "Nothing" is exact, not budget-relative.
std::optional<BarrierWitness> find_barrier(const GroupModel& m, const Elem& base,
                                           const Word& geodesic, const BarrierQuery& q);

// Barrier-free element test: true iff some geodesic between B(o, M) and
// B(g o, M) carries no barrier.  The certificate is that geodesic; on false,
// the witness found on the canonical (ShortLex) geodesic is reported together
// with the number of geodesics examined.
struct BarrierFreeResult {
    bool barrier_free = false;
    Elem cert_base;
    Word cert_word;
    std::optional<BarrierWitness> canonical_witness;
    std::uint64_t geodesics_examined = 0;
    bool exhaustive = true;
};
BarrierFreeResult is_barrier_free_element(const GroupModel& m, const Elem& g,
                                          const BarrierQuery& q, const Budget& budget = {});

// Per-sphere census of V_{eps,M,f} up to radius n: rows of (n, sphere size,
// barrier-free count).  Members retained only when requested.
struct VCensusRow {
    int n = 0;
    std::uint64_t sphere = 0;
    std::uint64_t barrier_free = 0;
};
struct VCensus {
    std::vector<VCensusRow> rows;
    std::vector<Elem> members; // only when retain_members
};
VCensus enumerate_V(const GroupModel& m, int n_max, const BarrierQuery& q,
                    const Budget& budget = {}, int threads = 1, bool retain_members = false);

// O_{M1,M2} relative to a designated orbit (nullptr = the whole vertex set,
// for which the region is empty on these vertex-transitive models): elements
// g in N(o,n) joined to the identity by some geodesic between B(o,M2) and
// B(g o, M2) whose interior stays outside N_{M1}(orbit).
std::vector<Elem> concave_region(const GroupModel& m, double M1, double M2, int n,
                                 const PointSet* orbit = nullptr, const Budget& budget = {});

// K_{M,D}: no length-D subpath of the canonical geodesic [o, g o] lies inside
// N_M(orbit).  Vacuously true when |g| < D.  With orbit = nullptr (the full
// vertex set) this is false for every g with |g| >= D.
bool in_K(const GroupModel& m, const Elem& g, double M, int D, const PointSet* orbit = nullptr);

// D-local C-non-contracting along the canonical geodesic: every length-D
// vertex window fails contraction_verdict at C.  Vacuously true when |g| < D.
struct DLocalResult {
    bool holds = false;
    bool vacuous = false;
    std::vector<ContractionVerdict> window_verdicts;
};
DLocalResult is_D_local_C_noncontracting(const GroupModel& m, const Elem& g, int D, double C,
                                         const GeodesicBudget& budget);

// The minimal-representative trichotomy, evaluated K -> Short -> P; a
// violation is a first-class loud outcome, not an error code.
enum class MinimalRepCase { CaseK_MD, CaseShort, CaseP_DC, TrichotomyViolation };
struct MinimalRepReport {
    MinimalRepCase result = MinimalRepCase::TrichotomyViolation;
    int length = 0;
    DLocalResult dlocal;
};
MinimalRepReport classify_minimal_rep(const GroupModel& m, const Elem& g, double M, int D,
                                      double C, const GeodesicBudget& budget,
                                      const PointSet* orbit = nullptr);

} // namespace cayley

#endif
