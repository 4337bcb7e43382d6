#include "cayley/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <unordered_set>

namespace cayley {

std::uint64_t CensusTable::sphere_total(int n) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].n != n) continue;
        if (!cumulative) return rows[i].total;
        return rows[i].total - (i == 0 ? 0 : rows[i - 1].total);
    }
    throw std::out_of_range("census row missing");
}

std::uint64_t CensusTable::sphere_filtered(int n) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].n != n) continue;
        if (!rows[i].filtered)
            throw std::invalid_argument("census table has no filtered column");
        std::uint64_t v = *rows[i].filtered;
        if (!cumulative) return v;
        return v - (i == 0 ? 0 : rows[i - 1].filtered.value());
    }
    throw std::out_of_range("census row missing");
}

ElementPredicate pred_free_product_hyperbolic() {
    return [](const GroupModel& m, const Elem& g) {
        return classify_free_product(m, g).kind == FreeProductClass::Kind::Hyperbolic;
    };
}

ElementPredicate pred_conj_into_factor() {
    return [](const GroupModel& m, const Elem& g) {
        return classify_free_product(m, g).kind != FreeProductClass::Kind::Hyperbolic;
    };
}

ElementPredicate pred_raag_join_bound() {
    return [](const GroupModel& m, const Elem& g) {
        return classify_raag(m, g).kind == RaagClass::Kind::JoinBound;
    };
}

ElementPredicate pred_raag_rank1_candidate() {
    return [](const GroupModel& m, const Elem& g) {
        return classify_raag(m, g).kind == RaagClass::Kind::Rank1Candidate;
    };
}

ElementPredicate pred_barrier_free(BarrierQuery q, Budget budget) {
    return [q, budget](const GroupModel& m, const Elem& g) {
        return is_barrier_free_element(m, g, q, budget).barrier_free;
    };
}

CensusTable census(const GroupModel& m, int n_max, const ElementPredicate& predicate,
                   const Budget& budget, int threads) {
    std::vector<std::atomic<std::uint64_t>> hits(static_cast<std::size_t>(n_max) + 1);
    for (auto& h : hits) h.store(0);
    auto visit = [&](int n, const Elem& g) {
        if (predicate && !predicate(m, g)) return;
        hits[static_cast<std::size_t>(n)].fetch_add(1, std::memory_order_relaxed);
    };
    auto spheres = stream_ball(m, n_max, budget, threads, visit);

    CensusTable t;
    t.model_label = m.model_label();
    t.filter_label = predicate ? "filtered" : "all";
    std::uint64_t ctot = 0, cfil = 0;
    for (int n = 0; n <= n_max; ++n) {
        ctot += spheres[static_cast<std::size_t>(n)];
        CensusRow row;
        row.n = n;
        row.total = ctot;
        if (predicate) {
            cfil += hits[static_cast<std::size_t>(n)].load();
            row.filtered = cfil;
        }
        t.rows.push_back(row);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Exponent estimation
// ---------------------------------------------------------------------------

namespace {

struct FitResult {
    double slope = 0, residual = 0, ratio = 0;
    int n_lo = 0, n_hi = 0;
    bool shrunk = false;
};

// Tail fit over the last max(4, points/2) strictly positive counts.
FitResult fit_tail(const std::vector<std::pair<int, double>>& pts_in) {
    std::vector<std::pair<int, double>> pts;
    for (const auto& p : pts_in)
        if (p.second > 0) pts.push_back(p);
    FitResult fr;
    fr.shrunk = pts.size() != pts_in.size();
    if (pts.size() < 2) throw std::invalid_argument("exponent: fewer than 2 usable rows");
    std::size_t w = std::max<std::size_t>(4, pts.size() / 2);
    w = std::min(w, pts.size());
    std::vector<std::pair<int, double>> tail(pts.end() - static_cast<std::ptrdiff_t>(w), pts.end());

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, c] : tail) {
        double y = std::log(c);
        sx += n;
        sy += y;
        sxx += static_cast<double>(n) * n;
        sxy += n * y;
    }
    const double k = static_cast<double>(tail.size());
    const double denom = k * sxx - sx * sx;
    fr.slope = denom == 0 ? 0 : (k * sxy - sx * sy) / denom;
    const double intercept = (sy - fr.slope * sx) / k;
    double ssr = 0;
    for (const auto& [n, c] : tail) {
        double e = std::log(c) - (intercept + fr.slope * n);
        ssr += e * e;
    }
    fr.residual = std::sqrt(ssr / k);

    double rsum = 0;
    int rcount = 0;
    for (std::size_t i = 1; i < tail.size(); ++i) {
        if (tail[i].first != tail[i - 1].first + 1) continue;
        rsum += std::log(tail[i].second / tail[i - 1].second);
        ++rcount;
    }
    fr.ratio = rcount ? rsum / rcount : fr.slope;
    fr.n_lo = tail.front().first;
    fr.n_hi = tail.back().first;
    return fr;
}

std::vector<std::pair<int, double>> annulus_counts(const CensusTable& t, int delta,
                                                   bool use_filtered) {
    const int top = t.n_max();
    auto sphere = [&](int n) -> double {
        if (n < 0 || n > top) return 0;
        return use_filtered ? static_cast<double>(t.sphere_filtered(n))
                            : static_cast<double>(t.sphere_total(n));
    };
    std::vector<std::pair<int, double>> out;
    for (int n = delta; n + delta <= top; ++n) {
        double a = 0;
        for (int k = n - delta; k <= n + delta; ++k) a += sphere(k);
        out.emplace_back(n, a);
    }
    return out;
}

} // namespace

ExponentEstimate exponent(const CensusTable& table, int delta, bool use_filtered) {
    auto pts = annulus_counts(table, delta, use_filtered);
    std::size_t usable = 0;
    for (const auto& p : pts)
        if (p.second > 0) ++usable;
    if (usable < 4) throw std::invalid_argument("exponent: needs at least 4 usable rows");
    auto fr = fit_tail(pts);
    ExponentEstimate e;
    e.value = std::max(0.0, fr.slope);
    e.method = ExponentEstimate::Method::LogRegression;
    e.window = {fr.n_lo, fr.n_hi};
    e.residual = fr.residual;
    e.ratio_value = std::max(0.0, fr.ratio);
    e.window_shrunk = fr.shrunk;
    e.methods_agree = std::abs(e.value - e.ratio_value) <= 0.05;
    return e;
}

std::optional<double> exact_growth_rate(const GroupModel& m) {
    if (m.kind() == GroupSpec::Kind::FreeGroup) {
        int k = m.alphabet_size() / 2;
        return std::log(static_cast<double>(2 * k - 1));
    }
    return std::nullopt;
}

double poincare_partial(const GroupModel& m, double s, int n_max,
                        const ElementPredicate& predicate, const Budget& budget, int threads) {
    CensusTable t = census(m, n_max, predicate, budget, threads);
    double sum = 0;
    for (int n = 0; n <= n_max; ++n) {
        double c = predicate ? static_cast<double>(t.sphere_filtered(n))
                             : static_cast<double>(t.sphere_total(n));
        sum += c * std::exp(-s * n);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Conjugacy counting
// ---------------------------------------------------------------------------

ConjLengthResult conj_length(const GroupModel& m, const Elem& g, int search_radius) {
    Word key = m.conjugacy_key(g);
    ConjLengthResult out;
    out.length = static_cast<int>(key.size());
    out.minimal_rep = m.normalize(key);

    int brute = m.length(g);
    for (const Elem& x : collect_ball(m, search_radius, Budget{}))
        brute = std::min(brute, m.length(m.conjugate(x, g)));
    if (brute < out.length)
        throw invariant_violation("conj_length: brute-force conjugator search beat the cyclic "
                                  "reduction on " + m.to_string(g) + " (" + std::to_string(brute) +
                                  " < " + std::to_string(out.length) + ")");
    return out;
}

CensusTable conj_census(const GroupModel& m, int n_max, const ElementPredicate& predicate,
                        const Budget& budget, int threads) {
    constexpr std::size_t kShards = 64;
    std::array<std::unordered_set<Word>, kShards> shards;
    std::array<std::mutex, kShards> locks;
    std::hash<Word> hasher;

    auto visit = [&](int, const Elem& g) {
        Word key = m.conjugacy_key(g);
        if (static_cast<int>(key.size()) > n_max) return; // cannot happen: keys never grow
        std::size_t s = hasher(key) % kShards;
        std::lock_guard<std::mutex> lk(locks[s]);
        shards[s].insert(std::move(key));
    };
    stream_ball(m, n_max, budget, threads, visit);

    std::vector<Word> keys;
    for (auto& s : shards) keys.insert(keys.end(), s.begin(), s.end());
    std::sort(keys.begin(), keys.end(), shortlex_less);

    // conjugation-invariance spot-check on a deterministic sample
    if (predicate) {
        auto conjugators = collect_ball(m, 1, budget);
        std::size_t checked = 0;
        for (const Word& key : keys) {
            if (checked >= 200) break;
            Elem rep = m.normalize(key);
            bool base = predicate(m, rep);
            for (const Elem& x : conjugators)
                if (predicate(m, m.conjugate(x, rep)) != base)
                    throw invariant_violation("conj_census: predicate is not conjugation-invariant");
            ++checked;
        }
    }

    std::vector<std::uint64_t> per_len(static_cast<std::size_t>(n_max) + 1, 0);
    std::vector<std::uint64_t> per_len_f(static_cast<std::size_t>(n_max) + 1, 0);
    for (const Word& key : keys) {
        per_len[key.size()] += 1;
        if (predicate && predicate(m, m.normalize(key))) per_len_f[key.size()] += 1;
    }

    CensusTable t;
    t.model_label = m.model_label();
    t.filter_label = predicate ? "classes-filtered" : "classes";
    std::uint64_t ct = 0, cf = 0;
    for (int n = 0; n <= n_max; ++n) {
        ct += per_len[static_cast<std::size_t>(n)];
        CensusRow row;
        row.n = n;
        row.total = ct;
        if (predicate) {
            cf += per_len_f[static_cast<std::size_t>(n)];
            row.filtered = cf;
        }
        t.rows.push_back(row);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Genericity and tightness
// ---------------------------------------------------------------------------

GenericityCurve genericity_from_table(const CensusTable& table, double residual_threshold) {
    GenericityCurve curve;
    std::vector<std::pair<int, double>> ratios;
    for (const auto& row : table.rows) {
        GenericityCurve::Row r;
        r.n = row.n;
        r.total = row.total;
        r.filtered = row.filtered.value();
        r.ratio = row.total ? static_cast<double>(r.filtered) / static_cast<double>(r.total) : 0;
        curve.rows.push_back(r);
        ratios.emplace_back(r.n, r.ratio);
    }
    auto fr = fit_tail(ratios);
    curve.decay = -fr.slope;
    curve.residual = fr.residual;
    curve.exponential = curve.decay > 0 && curve.residual < residual_threshold;
    return curve;
}

GenericityCurve genericity_curve(const GroupModel& m, int n_max, const ElementPredicate& predicate,
                                 const Budget& budget, int threads, double residual_threshold) {
    if (!predicate) throw std::invalid_argument("genericity_curve: predicate required");
    return genericity_from_table(census(m, n_max, predicate, budget, threads), residual_threshold);
}

TightnessGap tightness_from_table(const CensusTable& table, int delta) {
    TightnessGap tg;
    tg.subset = exponent(table, delta, true);
    tg.whole = exponent(table, delta, false);
    tg.gap = tg.whole.value - tg.subset.value;
    return tg;
}

TightnessGap tightness_gap(const GroupModel& m, int n_max, const ElementPredicate& predicate,
                           int delta, const Budget& budget, int threads) {
    if (!predicate) throw std::invalid_argument("tightness_gap: predicate required");
    return tightness_from_table(census(m, n_max, predicate, budget, threads), delta);
}

} // namespace cayley
