#include "cayley/barriers.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <unordered_set>

namespace cayley {

Elem BarrierQuery::barrier_word(const GroupModel& m) const {
    if (!n_power) return f;
    if (*n_power < 1) throw std::invalid_argument("barrier power must be >= 1");
    Elem acc = m.identity();
    for (int i = 0; i < *n_power; ++i) acc = m.multiply(acc, f);
    return acc;
}

std::optional<BarrierWitness> find_barrier(const GroupModel& m, const Elem& base,
                                           const Word& geodesic, const BarrierQuery& q) {
    const Elem fw = q.barrier_word(m);
    auto verts = vertex_path(m, base, geodesic);
    std::unordered_set<Word> on_path;
    for (const Elem& v : verts) on_path.insert(v.w);

    auto dist_to_path = [&](const Elem& x) {
        if (on_path.count(x.w)) return 0;
        int best = std::numeric_limits<int>::max();
        for (const Elem& v : verts) best = std::min(best, m.distance(x, v));
        return best;
    };

    if (q.epsilon < 1.0) {
        // eps-ball is the vertex itself; barrier iff some vertex translated by
        // the barrier word lands back on the path
        const Elem* best = nullptr;
        for (const Elem& v : verts) {
            if (!on_path.count(m.multiply(v, fw).w)) continue;
            if (!best || v < *best) best = &v;
        }
        if (!best) return std::nullopt;
        return BarrierWitness{*best, 0, 0};
    }

    const int eff = static_cast<int>(q.epsilon);
    std::set<Word> cand;
    for (const Elem& v : verts)
        for (const Elem& u : collect_ball(m, eff, Budget{})) cand.insert(m.multiply(v, u).w);
    std::vector<Word> ordered(cand.begin(), cand.end());
    std::sort(ordered.begin(), ordered.end(), shortlex_less);
    for (const Word& hw : ordered) {
        Elem h{hw};
        int d1 = dist_to_path(h);
        if (d1 > q.epsilon) continue;
        int d2 = dist_to_path(m.multiply(h, fw));
        if (d2 <= q.epsilon) return BarrierWitness{h, d1, d2};
    }
    return std::nullopt;
}

BarrierFreeResult is_barrier_free_element(const GroupModel& m, const Elem& g,
                                          const BarrierQuery& q, const Budget& budget) {
    BarrierFreeResult out;
    const int M = static_cast<int>(q.big_m);

    if (M == 0 && m.unique_geodesics()) {
        out.geodesics_examined = 1;
        auto w = find_barrier(m, m.identity(), g.w, q);
        if (!w) {
            out.barrier_free = true;
            out.cert_base = m.identity();
            out.cert_word = g.w;
        } else {
            out.canonical_witness = std::move(w);
        }
        return out;
    }

    auto shell = collect_ball(m, M, budget);
    for (const Elem& x : shell) {
        for (const Elem& y : shell) {
            Elem z = m.multiply(g, y);
            auto stream = geodesics_between(m, x, z, budget.geodesic_cap);
            if (stream.truncated) out.exhaustive = false;
            for (const Word& w : stream.words) {
                ++out.geodesics_examined;
                if (!find_barrier(m, x, w, q)) {
                    out.barrier_free = true;
                    out.cert_base = x;
                    out.cert_word = w;
                    return out;
                }
            }
        }
    }
    out.canonical_witness = find_barrier(m, m.identity(), g.w, q);
    return out;
}

VCensus enumerate_V(const GroupModel& m, int n_max, const BarrierQuery& q, const Budget& budget,
                    int threads, bool retain_members) {
    VCensus out;
    std::vector<std::atomic<std::uint64_t>> free_counts(static_cast<std::size_t>(n_max) + 1);
    for (auto& c : free_counts) c.store(0);
    std::mutex member_mu;

    auto visit = [&](int n, const Elem& g) {
        auto r = is_barrier_free_element(m, g, q, budget);
        if (r.barrier_free) {
            free_counts[static_cast<std::size_t>(n)].fetch_add(1, std::memory_order_relaxed);
            if (retain_members) {
                std::lock_guard<std::mutex> lk(member_mu);
                out.members.push_back(g);
            }
        }
    };
    auto spheres = stream_ball(m, n_max, budget, threads, visit);

    for (int n = 0; n <= n_max; ++n)
        out.rows.push_back({n, spheres[static_cast<std::size_t>(n)],
                            free_counts[static_cast<std::size_t>(n)].load()});
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::vector<Elem> concave_region(const GroupModel& m, double M1, double M2, int n,
                                 const PointSet* orbit, const Budget& budget) {
    std::vector<Elem> out;
    if (!orbit) return out; // vertex-transitive: every vertex lies in N_0(Go)
    const int M2i = static_cast<int>(M2);
    auto shell = collect_ball(m, M2i, budget);
    for (const Elem& g : collect_ball(m, n, budget)) {
        if (g.is_identity()) continue;
        bool found = false;
        for (const Elem& x : shell) {
            for (const Elem& y : shell) {
                Elem z = m.multiply(g, y);
                auto stream = geodesics_between(m, x, z, budget.geodesic_cap);
                for (const Word& w : stream.words) {
                    auto verts = vertex_path(m, x, w);
                    bool interior_outside = true;
                    for (std::size_t i = 1; i + 1 < verts.size(); ++i)
                        if (dist_to_set(m, verts[i], *orbit) <= M1) interior_outside = false;
                    if (interior_outside) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (found) out.push_back(g);
    }
    return out;
}

bool in_K(const GroupModel& m, const Elem& g, double M, int D, const PointSet* orbit) {
    auto verts = vertex_path(m, m.identity(), g.w);
    if (static_cast<int>(g.length()) < D) return true; // no length-D subpath
    for (std::size_t i = 0; i + static_cast<std::size_t>(D) < verts.size(); ++i) {
        bool contained = true;
        for (std::size_t j = i; j <= i + static_cast<std::size_t>(D); ++j) {
            int d = orbit ? dist_to_set(m, verts[j], *orbit) : 0;
            if (d > M) contained = false;
        }
        if (contained) return false;
    }
    return true;
}

DLocalResult is_D_local_C_noncontracting(const GroupModel& m, const Elem& g, int D, double C,
                                         const GeodesicBudget& budget) {
    DLocalResult out;
    auto verts = vertex_path(m, m.identity(), g.w);
    if (static_cast<int>(g.length()) < D) {
        out.holds = true;
        out.vacuous = true;
        return out;
    }
    out.holds = true;
    for (std::size_t i = 0; i + static_cast<std::size_t>(D) < verts.size(); ++i) {
        // contraction is translation-invariant; pulling the window back to the
        // basepoint keeps the budgeted geodesic family centered on it
        Elem shift = m.inverse(verts[i]);
        PointSet window;
        for (std::size_t j = i; j <= i + static_cast<std::size_t>(D); ++j)
            window.points.push_back(m.multiply(shift, verts[j]));
        std::sort(window.points.begin(), window.points.end());
        window.label = "window@" + std::to_string(i);
        auto v = contraction_verdict(m, window, C, budget);
        if (v.pass) out.holds = false;
        out.window_verdicts.push_back(std::move(v));
    }
    return out;
}

MinimalRepReport classify_minimal_rep(const GroupModel& m, const Elem& g, double M, int D,
                                      double C, const GeodesicBudget& budget,
                                      const PointSet* orbit) {
    if (m.cyclic_reduce(g).length() < g.length())
        throw std::invalid_argument("classify_minimal_rep: g is not a minimal conjugacy representative");
    MinimalRepReport rep;
    rep.length = static_cast<int>(g.length());
    // a vacuous K membership (|g| < D) must not claim the K case: short
    // elements classify as CaseShort
    if (rep.length >= D && in_K(m, g, M, D, orbit)) {
        rep.result = MinimalRepCase::CaseK_MD;
        return rep;
    }
    if (rep.length <= 4 * D) {
        rep.result = MinimalRepCase::CaseShort;
        return rep;
    }
    rep.dlocal = is_D_local_C_noncontracting(m, g, D, C, budget);
    rep.result = rep.dlocal.holds ? MinimalRepCase::CaseP_DC : MinimalRepCase::TrichotomyViolation;
    return rep;
}

} // namespace cayley
