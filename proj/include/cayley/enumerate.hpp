#ifndef CAYLEY_ENUMERATE_HPP
#define CAYLEY_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/group.hpp"

namespace cayley {

// Resource caps for enumerations.  Exceeding a cap aborts with the partial
// counts collected so far (budget_error), never with silent truncation.
struct Budget {
    std::uint64_t max_streamed = 100'000'000; // elements visited in one enumeration
    std::uint64_t max_retained = 10'000'000;  // elements held in memory at once
    std::uint64_t geodesic_cap = 100'000;     // geodesics streamed per endpoint pair
};

// Streams N(o, n_max) sphere by sphere in deterministic ShortLex order.
// `sphere_fn` receives (n, elements of the n-sphere, sorted).  Uses a
// duplicate-free depth-limited traversal on unique-geodesic models and a
// layered BFS with per-sphere deduplication otherwise.
void for_each_sphere(const GroupModel& m, int n_max, const Budget& budget,
                     const std::function<void(int, const std::vector<Elem>&)>& sphere_fn);

// Per-element streaming census: calls visit(n, g) for every g with |g| = n,
// n <= n_max.  Order within a sphere is deterministic but only guaranteed to
// be ShortLex when `threads` == 1 and the model needs BFS; counts are
// scheduling-independent.  When threads > 1, `visit` may be invoked
// concurrently and must be thread-safe.  Returns per-sphere visit counts.
std::vector<std::uint64_t> stream_ball(const GroupModel& m, int n_max, const Budget& budget,
                                       int threads,
                                       const std::function<void(int, const Elem&)>& visit);

// Convenience: the full ball as a sorted vector (ShortLex).
std::vector<Elem> collect_ball(const GroupModel& m, int n_max, const Budget& budget);

// Sphere sizes |S(o, n)| for n = 0..n_max.
std::vector<std::uint64_t> sphere_sizes(const GroupModel& m, int n_max, const Budget& budget,
                                        int threads = 1);

// All geodesic words from g to h in ShortLex order, up to `cap` many.
struct GeodesicStream {
    std::vector<Word> words;
    bool truncated = false;
};
GeodesicStream geodesics_between(const GroupModel& m, const Elem& g, const Elem& h,
                                 std::uint64_t cap);

// Vertex path o-based: vertices visited by `word` starting at `base`.
std::vector<Elem> vertex_path(const GroupModel& m, const Elem& base, const Word& word);

} // namespace cayley

#endif
