// Test-only oracles, deliberately independent of the library's enumeration
// and reduction paths: plain queue BFS over neighbor expansion, brute-force
// conjugacy search, and closed-form sphere counts.
#ifndef CAYLEY_TESTS_ORACLES_HPP
#define CAYLEY_TESTS_ORACLES_HPP

#include <cstdint>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/group.hpp"

namespace cayley::oracle {

// Breadth-first ball: spheres[d] holds the elements at BFS depth d.  Only the
// model's normalize_word is trusted (for vertex identity), never its length.
inline std::vector<std::vector<Elem>> bfs_ball(const GroupModel& m, int n_max) {
    std::vector<std::vector<Elem>> spheres(static_cast<std::size_t>(n_max) + 1);
    std::unordered_set<Word> seen;
    std::queue<std::pair<Elem, int>> q;
    q.push({m.identity(), 0});
    seen.insert(Word{});
    while (!q.empty()) {
        auto [g, d] = q.front();
        q.pop();
        spheres[static_cast<std::size_t>(d)].push_back(g);
        if (d == n_max) continue;
        Word w = g.w;
        w.push_back(0);
        for (int s = 0; s < m.alphabet_size(); ++s) {
            w.back() = static_cast<char>(s);
            Word nf = m.normalize_word(w);
            if (seen.insert(nf).second) q.push({Elem{nf}, d + 1});
        }
    }
    for (auto& s : spheres) std::sort(s.begin(), s.end());
    return spheres;
}

// BFS distance from g to h, layer by layer (exact, not radius-limited).
inline int bfs_distance(const GroupModel& m, const Elem& g, const Elem& h) {
    if (g == h) return 0;
    std::unordered_set<Word> seen{g.w};
    std::vector<Elem> frontier{g};
    for (int d = 1;; ++d) {
        std::vector<Elem> next;
        for (const Elem& u : frontier) {
            Word w = u.w;
            w.push_back(0);
            for (int s = 0; s < m.alphabet_size(); ++s) {
                w.back() = static_cast<char>(s);
                Word nf = m.normalize_word(w);
                if (nf == h.w) return d;
                if (seen.insert(nf).second) next.push_back(Elem{nf});
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) throw std::logic_error("bfs_distance: target unreachable");
    }
}

// Minimal |x g x^-1| over all x in N(o, radius), with a witness conjugator.
inline std::pair<int, Elem> brute_conj_min(const GroupModel& m, const Elem& g, int radius) {
    auto spheres = bfs_ball(m, radius);
    int best = m.length(g);
    Elem witness = m.identity();
    for (const auto& sphere : spheres) {
        for (const Elem& x : sphere) {
            Elem c = m.conjugate(x, g);
            if (m.length(c) < best) {
                best = m.length(c);
                witness = x;
            }
        }
    }
    return {best, witness};
}

// Closed-form sphere size of the free group of rank k.
inline std::uint64_t free_sphere(int k, int n) {
    if (n == 0) return 1;
    std::uint64_t v = static_cast<std::uint64_t>(2 * k);
    for (int i = 1; i < n; ++i) v *= static_cast<std::uint64_t>(2 * k - 1);
    return v;
}

inline std::uint64_t free_ball(int k, int n) {
    std::uint64_t v = 0;
    for (int i = 0; i <= n; ++i) v += free_sphere(k, i);
    return v;
}

} // namespace cayley::oracle

#endif
