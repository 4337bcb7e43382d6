#include "cayley/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "cayley/enumerate.hpp"

namespace cayley {

namespace {

std::vector<Elem> path_vertices(const GroupModel& m, const AdmissibleDecomposition& dec) {
    return vertex_path(m, m.identity(), dec.path);
}

bool in_set(const PointSet& X, const Elem& g) {
    return std::find(X.points.begin(), X.points.end(), g) != X.points.end();
}

} // namespace

void validate_decomposition(const GroupModel& m, const AdmissibleDecomposition& dec) {
    auto verts = path_vertices(m, dec);
    const std::size_t last = verts.size() - 1;
    std::size_t prev_end = 0;
    bool first = true;
    for (const auto& mk : dec.marked) {
        if (mk.begin > mk.end || mk.end > last)
            throw std::invalid_argument("malformed decomposition: range out of bounds");
        if (!first && mk.begin < prev_end)
            throw std::invalid_argument("malformed decomposition: ranges overlap or out of order");
        if (mk.set.empty())
            throw std::invalid_argument("malformed decomposition: empty contracting set");
        if (static_cast<int>(mk.end - mk.begin) != m.distance(verts[mk.begin], verts[mk.end]))
            throw std::invalid_argument("malformed decomposition: marked subpath is not geodesic");
        if (!in_set(mk.set, verts[mk.begin]) || !in_set(mk.set, verts[mk.end]))
            throw std::invalid_argument("malformed decomposition: leg endpoint not in its set");
        prev_end = mk.end;
        first = false;
    }
}

AdmissibilityReport check_admissible(const GroupModel& m, const AdmissibleDecomposition& dec,
                                     const AdmissibilityOptions& opts) {
    validate_decomposition(m, dec);
    AdmissibilityReport rep;
    auto verts = path_vertices(m, dec);
    const std::size_t last = verts.size() - 1;
    const std::size_t n = dec.marked.size();
    if (n == 0) {
        rep.vacuous = true;
        rep.verdict = true;
        return rep;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& mk = dec.marked[i];
        AdmissibilityReport::Leg leg;
        leg.i = i;
        leg.length = static_cast<int>(mk.end - mk.begin);
        leg.exempt = mk.begin == 0 || mk.end == last;
        leg.ok = leg.exempt || leg.length > dec.D;
        rep.ll1.push_back(leg);
    }

    auto dpi = [&](const PointSet& X, const Elem& y, const Elem& z) {
        return proj_diameter(m, X, PointSet{{y}, ""}, PointSet{{z}, ""});
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto& mk = dec.marked[i];
        AdmissibilityReport::Bp bp;
        bp.i = i;
        const Elem& fwd_from = verts[mk.end];
        const Elem& fwd_to = i + 1 < n ? verts[dec.marked[i + 1].begin] : verts[last];
        const Elem& bwd_from = i > 0 ? verts[dec.marked[i - 1].end] : verts[0];
        const Elem& bwd_to = verts[mk.begin];
        bp.forward = dpi(mk.set, fwd_from, fwd_to);
        bp.backward = dpi(mk.set, bwd_from, bwd_to);
        bp.ok = bp.forward <= dec.tau && bp.backward <= dec.tau;
        rep.bp.push_back(bp);
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        AdmissibilityReport::Ll2 ll2;
        ll2.i = i;
        ll2.gap = m.distance(verts[dec.marked[i].end], verts[dec.marked[i + 1].begin]);
        ll2.gap_ok = ll2.gap > dec.D;
        ll2.bounded_ok = true;
        for (int r : opts.intersection_radii) {
            int diam = neighborhood_intersection_diam(m, dec.marked[i].set, dec.marked[i + 1].set, r);
            ll2.intersection_diams.emplace_back(r, diam);
            if (diam > opts.intersection_coeff * r) ll2.bounded_ok = false;
        }
        ll2.ok = ll2.gap_ok || ll2.bounded_ok;
        rep.ll2.push_back(ll2);
    }

    rep.verdict = std::all_of(rep.ll1.begin(), rep.ll1.end(), [](const auto& x) { return x.ok; }) &&
                  std::all_of(rep.bp.begin(), rep.bp.end(), [](const auto& x) { return x.ok; }) &&
                  std::all_of(rep.ll2.begin(), rep.ll2.end(), [](const auto& x) { return x.ok; });
    return rep;
}

bool check_uniform(const GroupModel& m, const AdmissibleDecomposition& dec) {
    if (!dec.uniform) throw std::invalid_argument("check_uniform: uniform params missing");
    validate_decomposition(m, dec);
    auto verts = path_vertices(m, dec);
    auto [L, Delta] = *dec.uniform;
    for (std::size_t i = 0; i + 1 < dec.marked.size(); ++i) {
        int gap = m.distance(verts[dec.marked[i].end], verts[dec.marked[i + 1].begin]);
        if (std::abs(gap - L) > Delta) return false;
    }
    return true;
}

double fellow_travel_offset(const GroupModel& m, const Word& geodesic,
                            const AdmissibleDecomposition& dec) {
    validate_decomposition(m, dec);
    auto verts = path_vertices(m, dec);
    auto geo = vertex_path(m, m.identity(), geodesic);
    if (geo.back() != verts.back())
        throw std::invalid_argument("fellow_travel_offset: endpoint mismatch");

    std::vector<Elem> targets;
    for (const auto& mk : dec.marked) {
        targets.push_back(verts[mk.begin]);
        targets.push_back(verts[mk.end]);
    }
    if (targets.empty()) return 0.0;

    // f[k] = best achievable max-distance for targets 0..j with target j at
    // geo position k; positions must be nondecreasing (linear order).
    const std::size_t M = geo.size();
    std::vector<int> prev(M), cur(M);
    for (std::size_t k = 0; k < M; ++k) prev[k] = m.distance(geo[k], targets[0]);
    for (std::size_t j = 1; j < targets.size(); ++j) {
        int best_before = std::numeric_limits<int>::max();
        for (std::size_t k = 0; k < M; ++k) {
            best_before = std::min(best_before, prev[k]);
            cur[k] = std::max(best_before, m.distance(geo[k], targets[j]));
        }
        std::swap(prev, cur);
    }
    return static_cast<double>(*std::min_element(prev.begin(), prev.end()));
}

double quasi_geodesic_constant(const GroupModel& m, const Word& path) {
    auto verts = vertex_path(m, m.identity(), path);
    double worst = 1.0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            double len = static_cast<double>(j - i);
            double d = static_cast<double>(m.distance(verts[i], verts[j]));
            worst = std::max(worst, len / (d + 1.0));
        }
    }
    return std::ceil(worst * 4.0) / 4.0;
}

ContractionVerdict saturation_contraction(const GroupModel& m, const AdmissibleDecomposition& dec,
                                          const GeodesicBudget& budget,
                                          const AdmissibilityOptions& opts) {
    auto rep = check_admissible(m, dec, opts);
    if (!rep.verdict) throw std::invalid_argument("saturation_contraction: precondition");
    if (dec.uniform && !check_uniform(m, dec))
        throw std::invalid_argument("saturation_contraction: precondition");

    PointSet sat;
    for (const auto& mk : dec.marked)
        sat.points.insert(sat.points.end(), mk.set.points.begin(), mk.set.points.end());
    auto verts = path_vertices(m, dec);
    for (std::size_t v = 0; v < verts.size(); ++v) {
        bool interior = false;
        for (const auto& mk : dec.marked)
            if (v > mk.begin && v < mk.end) interior = true;
        if (!interior) sat.points.push_back(verts[v]);
    }
    std::sort(sat.points.begin(), sat.points.end());
    sat.points.erase(std::unique(sat.points.begin(), sat.points.end()), sat.points.end());
    sat.label = "saturation";

    double c = estimate_contraction_constant(m, sat, budget);
    if (c < kInfinity) return contraction_verdict(m, sat, c, budget);
    return contraction_verdict(m, sat, static_cast<double>(budget.radius), budget);
}

ExtensionResult extension_concat(const GroupModel& m, const Elem& g, const Elem& h,
                                 const std::vector<AxisSegment>& F, double D, double tau,
                                 const AdmissibilityOptions& opts) {
    std::vector<const AxisSegment*> order;
    for (const auto& ax : F) order.push_back(&ax);
    std::sort(order.begin(), order.end(),
              [](const AxisSegment* a, const AxisSegment* b) { return a->generator < b->generator; });

    for (const AxisSegment* ax : order) {
        if (ax->extent < 1) throw std::invalid_argument("extension_concat: axis extent must cover f");
        const Elem& f = ax->generator;
        AdmissibleDecomposition dec;
        dec.D = D;
        dec.tau = tau;
        dec.path = g.w;
        dec.path += f.w;
        dec.path += h.w;
        AdmissibleDecomposition::Marked mk;
        mk.begin = g.w.size();
        mk.end = g.w.size() + f.w.size();
        mk.set = translate(m, g, ax->points);
        dec.marked.push_back(std::move(mk));
        auto rep = check_admissible(m, dec, opts);
        if (rep.verdict) return {true, f, std::move(dec)};
    }
    return {};
}

InjectivityReport extension_injectivity_probe(const GroupModel& m, const std::vector<Elem>& B,
                                              const std::vector<AxisSegment>& F, double D,
                                              double tau, int word_len,
                                              const AdmissibilityOptions& opts) {
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            if (B[i] == B[j])
                throw std::invalid_argument("extension_injectivity_probe: duplicate letters in B");

    InjectivityReport rep;
    if (word_len <= 0) {
        rep.pass = true; // vacuous
        return rep;
    }

    std::map<std::pair<Word, Word>, ExtensionResult> bridge;
    auto get_bridge = [&](const Elem& x, const Elem& y) -> const ExtensionResult& {
        auto key = std::make_pair(x.w, y.w);
        auto it = bridge.find(key);
        if (it == bridge.end())
            it = bridge.emplace(key, extension_concat(m, x, y, F, D, tau, opts)).first;
        return it->second;
    };

    std::map<Word, std::vector<int>> image; // Phi(W) -> letter indices of first W
    std::vector<int> word;
    const std::size_t k = B.size();
    std::function<bool()> enumerate = [&]() -> bool {
        if (!word.empty()) {
            Elem phi = B[static_cast<std::size_t>(word[0])];
            for (std::size_t i = 1; i < word.size(); ++i) {
                const auto& br = get_bridge(B[static_cast<std::size_t>(word[i - 1])],
                                            B[static_cast<std::size_t>(word[i])]);
                if (!br.found) {
                    rep.extension_failed = true;
                    return false;
                }
                phi = m.multiply(phi, br.f);
                phi = m.multiply(phi, B[static_cast<std::size_t>(word[i])]);
            }
            ++rep.words_built;
            auto [it, fresh] = image.emplace(phi.w, word);
            if (!fresh) {
                rep.collision = std::make_pair(it->second, word);
                return false;
            }
        }
        if (word.size() == static_cast<std::size_t>(word_len)) return true;
        for (std::size_t s = 0; s < k; ++s) {
            word.push_back(static_cast<int>(s));
            bool keep = enumerate();
            word.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    rep.pass = enumerate() && !rep.extension_failed && !rep.collision;
    return rep;
}

} // namespace cayley
