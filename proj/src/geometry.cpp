#include "cayley/geometry.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

namespace cayley {

namespace {

// Distances and nearest-point indices from one query point into X, memoized
// per canonical word across a whole verdict computation.
struct ProjInfo {
    int dist = 0;
    std::vector<int> argmins; // indices into X.points
};

struct ProjCache {
    const GroupModel& m;
    const PointSet& X;
    std::vector<std::vector<int>> xx; // pairwise distances inside X
    std::unordered_map<Word, ProjInfo> infos;

    ProjCache(const GroupModel& mm, const PointSet& XX) : m(mm), X(XX) {
        const auto n = X.points.size();
        xx.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                xx[i][j] = xx[j][i] = m.distance(X.points[i], X.points[j]);
    }

    const ProjInfo& at(const Elem& y) {
        auto it = infos.find(y.w);
        if (it != infos.end()) return it->second;
        ProjInfo info;
        info.dist = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < X.points.size(); ++i) {
            int d = m.distance(y, X.points[i]);
            if (d < info.dist) {
                info.dist = d;
                info.argmins.clear();
            }
            if (d == info.dist) info.argmins.push_back(static_cast<int>(i));
        }
        return infos.emplace(y.w, std::move(info)).first->second;
    }

    int diam(const std::vector<int>& idxs) const {
        int d = 0;
        for (std::size_t i = 0; i < idxs.size(); ++i)
            for (std::size_t j = i + 1; j < idxs.size(); ++j)
                d = std::max(d, xx[static_cast<std::size_t>(idxs[i])][static_cast<std::size_t>(idxs[j])]);
        return d;
    }
};

void merge_indices(std::vector<int>& into, const std::vector<int>& add) {
    for (int i : add)
        if (!std::binary_search(into.begin(), into.end(), i))
            into.insert(std::lower_bound(into.begin(), into.end(), i), i);
}

} // namespace

PointSet project(const GroupModel& m, const Elem& y, const PointSet& X) {
    if (X.empty()) throw std::invalid_argument("projection target must be nonempty");
    ProjCache cache(m, X);
    const ProjInfo& info = cache.at(y);
    PointSet out;
    for (int i : info.argmins) out.points.push_back(X.points[static_cast<std::size_t>(i)]);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

int dist_to_set(const GroupModel& m, const Elem& y, const PointSet& X) {
    if (X.empty()) throw std::invalid_argument("distance to empty set");
    int best = std::numeric_limits<int>::max();
    for (const Elem& x : X.points) best = std::min(best, m.distance(y, x));
    return best;
}

int proj_diameter(const GroupModel& m, const PointSet& X, const PointSet& Z1, const PointSet& Z2) {
    ProjCache cache(m, X);
    std::vector<int> idxs;
    for (const Elem& z : Z1.points) merge_indices(idxs, cache.at(z).argmins);
    for (const Elem& z : Z2.points) merge_indices(idxs, cache.at(z).argmins);
    return cache.diam(idxs);
}

PointSet translate(const GroupModel& m, const Elem& g, const PointSet& X) {
    PointSet out;
    out.points.reserve(X.points.size());
    for (const Elem& x : X.points) out.points.push_back(m.multiply(g, x));
    std::sort(out.points.begin(), out.points.end());
    out.label = X.label.empty() ? "" : m.to_string(g) + "." + X.label;
    return out;
}

// ---------------------------------------------------------------------------
// Contraction
// ---------------------------------------------------------------------------

namespace {

struct VerdictScan {
    const GroupModel& m;
    ProjCache cache;
    double C;
    std::uint64_t examined = 0;
    bool truncated = false;
    std::optional<ContractionWitness> witness;

    VerdictScan(const GroupModel& mm, const PointSet& X, double CC) : m(mm), cache(mm, X), C(CC) {}

    // Walks every geodesic between a and b, pruning branches whose prefix
    // already dips inside N_C(X): such geodesics satisfy the contraction
    // implication vacuously and cannot witness a violation.  Returns false
    // once a witness is found (scan stops).
    bool scan_pair(const Elem& a, const Elem& b, std::uint64_t cap) {
        Word start = m.free_inverse_word(a.w);
        start += b.w;
        Elem togo = m.normalize(start);
        Word prefix;
        std::vector<int> proj;
        merge_indices(proj, cache.at(a).argmins);
        if (cache.at(a).dist < C) return true; // every extension is vacuous
        return walk(a, togo, prefix, proj, cap);
    }

    bool walk(const Elem& at, const Elem& togo, Word& prefix, std::vector<int>& proj,
              std::uint64_t cap) {
        if (togo.is_identity()) {
            if (examined >= cap) {
                truncated = true;
                return false;
            }
            ++examined;
            int diam = cache.diam(proj);
            if (diam > C) {
                // d(gamma, X) >= C held along the way, so this is a violation;
                // the caller fills in endpoints and the exact min distance
                ContractionWitness w;
                w.word = prefix;
                w.proj_diam = diam;
                witness = std::move(w);
                return false;
            }
            return true;
        }
        for (int s = 0; s < m.alphabet_size(); ++s) {
            Word step(1, static_cast<char>(m.inverse_letter(s)));
            step += togo.w;
            Elem rest = m.normalize(step);
            if (rest.length() + 1 != togo.length()) continue;
            Word next = at.w;
            next.push_back(static_cast<char>(s));
            Elem v{m.normalize_word(next)};
            const ProjInfo& info = cache.at(v);
            if (info.dist < C) continue; // prune: hypothesis already false
            prefix.push_back(static_cast<char>(s));
            std::vector<int> saved = proj;
            merge_indices(proj, info.argmins);
            bool keep = walk(v, rest, prefix, proj, cap);
            proj = std::move(saved);
            prefix.pop_back();
            if (!keep) return false;
        }
        return true;
    }
};

} // namespace

bool verify_witness(const GroupModel& m, const PointSet& X, double C,
                    const ContractionWitness& w) {
    auto verts = vertex_path(m, w.from, w.word);
    if (verts.back() != w.to) return false;
    if (static_cast<int>(w.word.size()) != m.distance(w.from, w.to)) return false;
    ProjCache cache(m, X);
    int mind = std::numeric_limits<int>::max();
    std::vector<int> proj;
    for (const Elem& v : verts) {
        const ProjInfo& info = cache.at(v);
        mind = std::min(mind, info.dist);
        merge_indices(proj, info.argmins);
    }
    int diam = cache.diam(proj);
    return mind == w.dist_to_set && diam == w.proj_diam && mind >= C && diam > C;
}

ContractionVerdict contraction_verdict(const GroupModel& m, const PointSet& X, double C,
                                       const GeodesicBudget& budget) {
    ContractionVerdict v;
    v.constant_tested = C;

    std::vector<Elem> ball = collect_ball(m, budget.radius, budget.ball);
    VerdictScan scan(m, X, C);

    auto run_pair = [&](std::size_t i, std::size_t j) -> bool {
        bool keep = scan.scan_pair(ball[i], ball[j], budget.geodesics_per_pair);
        if (!keep && scan.witness) {
            scan.witness->from = ball[i];
            scan.witness->to = ball[j];
            // recompute the witness min-distance exactly for the record
            auto verts = vertex_path(m, ball[i], scan.witness->word);
            int mind = std::numeric_limits<int>::max();
            for (const Elem& u : verts) mind = std::min(mind, scan.cache.at(u).dist);
            scan.witness->dist_to_set = mind;
        }
        return keep;
    };

    if (budget.mode == GeodesicBudget::Mode::Exhaustive) {
        // only pairs with both endpoints outside N_C(X) can carry a witness;
        // the witness scan order (ShortLex pairs) is preserved on the rest
        std::vector<std::size_t> far;
        for (std::size_t i = 0; i < ball.size(); ++i)
            if (scan.cache.at(ball[i]).dist >= C) far.push_back(i);
        bool going = true;
        for (std::size_t a = 0; a < far.size() && going; ++a)
            for (std::size_t b = a; b < far.size() && going; ++b)
                going = run_pair(far[a], far[b]);
    } else {
        std::mt19937_64 rng(budget.seed);
        std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
        for (std::uint64_t k = 0; k < budget.sample_pairs; ++k) {
            std::size_t i = pick(rng), j = pick(rng);
            if (!run_pair(std::min(i, j), std::max(i, j))) break;
        }
        v.exhaustive = false;
    }

    v.geodesics_examined = scan.examined;
    if (scan.truncated) v.exhaustive = false;
    if (scan.witness) {
        v.pass = false;
        v.witness = scan.witness;
    } else {
        v.pass = true;
    }
    return v;
}

double estimate_contraction_constant(const GroupModel& m, const PointSet& X,
                                     const GeodesicBudget& budget) {
    for (double C = 0.5; C <= budget.radius + 0.25; C += 0.5) {
        ContractionVerdict v = contraction_verdict(m, X, C, budget);
        if (v.pass) return C;
    }
    return kInfinity;
}

// ---------------------------------------------------------------------------
// Orbit map and axes
// ---------------------------------------------------------------------------

QieFit qie_check(const GroupModel& m, const Elem& h, int n_max) {
    if (h.is_identity()) throw std::invalid_argument("qie_check: identity has no orbit map");
    QieFit fit;
    fit.lower_slope = kInfinity;
    Elem pow = m.identity();
    for (int n = 1; n <= n_max; ++n) {
        pow = m.multiply(pow, h);
        double d = static_cast<double>(pow.length()); // |h^-n| = |h^n|
        fit.lower_slope = std::min(fit.lower_slope, d / n);
        fit.upper_slope = std::max(fit.upper_slope, d / n);
        if (d == 0) fit.degenerate = true;
    }
    if (fit.lower_slope <= 0) fit.degenerate = true;
    return fit;
}

AxisSegment build_axis(const GroupModel& m, const Elem& h, int extent,
                       const std::vector<Elem>& extras) {
    if (h.is_identity()) throw std::invalid_argument("build_axis: identity generator");
    if (m.element_order(h) != 0) throw std::invalid_argument("build_axis: torsion generator");
    AxisSegment axis;
    axis.generator = h;
    axis.extent = extent;
    axis.extras = extras;

    std::vector<Elem> cosets{m.identity()};
    cosets.insert(cosets.end(), extras.begin(), extras.end());

    std::vector<Elem> powers{m.identity()};
    Elem pos = m.identity(), neg = m.identity();
    Elem hinv = m.inverse(h);
    for (int n = 1; n <= extent; ++n) {
        pos = m.multiply(pos, h);
        neg = m.multiply(neg, hinv);
        powers.push_back(pos);
        powers.push_back(neg);
    }
    for (const Elem& f : cosets)
        for (const Elem& p : powers) axis.points.points.push_back(m.multiply(f, p));
    std::sort(axis.points.points.begin(), axis.points.points.end());
    axis.points.points.erase(std::unique(axis.points.points.begin(), axis.points.points.end()),
                             axis.points.points.end());
    axis.points.label = "Ax(" + m.to_string(h) + ")@" + std::to_string(extent);
    return axis;
}

Elem maximal_cyclic_root(const GroupModel& m, const Elem& h) {
    const int n = m.length(h);
    for (int len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        Elem r = m.normalize(h.w.substr(0, static_cast<std::size_t>(len)));
        if (static_cast<int>(r.length()) != len) continue;
        Elem acc = m.identity();
        for (int k = 0; k < n / len; ++k) acc = m.multiply(acc, r);
        if (acc == h) return r;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Bounded projection / intersection
// ---------------------------------------------------------------------------

int neighborhood_intersection_diam(const GroupModel& m, const PointSet& X, const PointSet& Y,
                                   int r) {
    Budget b;
    std::vector<Elem> shell = collect_ball(m, r, b);
    std::vector<Elem> inter;
    std::set<Word> seen;
    for (const Elem& x : X.points) {
        for (const Elem& u : shell) {
            Elem y = m.multiply(x, u);
            if (!seen.insert(y.w).second) continue;
            if (dist_to_set(m, y, Y) <= r && dist_to_set(m, y, X) <= r) inter.push_back(y);
        }
    }
    int diam = 0;
    for (std::size_t i = 0; i < inter.size(); ++i)
        for (std::size_t j = i + 1; j < inter.size(); ++j)
            diam = std::max(diam, m.distance(inter[i], inter[j]));
    return diam;
}

BoundedProjectionReport bounded_projection_check(const GroupModel& m,
                                                 const std::vector<PointSet>& family, double B,
                                                 const std::vector<int>& rs) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (family[i].points == family[j].points)
                throw std::invalid_argument("bounded_projection_check: pairwise distinct required");

    BoundedProjectionReport rep;
    for (std::size_t onto = 0; onto < family.size(); ++onto) {
        for (std::size_t from = 0; from < family.size(); ++from) {
            if (onto == from) continue;
            int v = proj_diameter(m, family[onto], family[from], family[from]);
            if (v > rep.worst_value) {
                rep.worst_value = v;
                rep.worst_from = static_cast<int>(from);
                rep.worst_onto = static_cast<int>(onto);
            }
            if (v > B) rep.pass = false;
            for (int r : rs)
                rep.intersections.push_back({static_cast<int>(from), static_cast<int>(onto), r,
                                             neighborhood_intersection_diam(m, family[from],
                                                                            family[onto], r)});
        }
    }
    return rep;
}

} // namespace cayley
