#include "cayley/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace cayley {

namespace {

void check_streamed(std::uint64_t streamed, const Budget& b, const std::vector<std::uint64_t>& partial) {
    if (streamed > b.max_streamed)
        throw budget_error("ball enumeration exceeded streaming cap", partial);
}

// Children of g one sphere further out, as normalized words.
void append_children(const GroupModel& m, const Elem& g, int n, std::vector<Word>& out) {
    Word w = g.w;
    w.push_back(0);
    for (int s = 0; s < m.alphabet_size(); ++s) {
        w.back() = static_cast<char>(s);
        Word nf = m.normalize_word(w);
        if (static_cast<int>(nf.size()) == n + 1) out.push_back(std::move(nf));
    }
}

// Depth-first streaming enumeration for unique-geodesic models: every element
// of sphere n+1 is the child of exactly one element of sphere n, so no
// deduplication is needed and nothing is retained.
void dfs_stream(const GroupModel& m, const Elem& g, int n, int n_max, const Budget& budget,
                std::uint64_t& streamed, std::vector<std::uint64_t>& counts,
                const std::function<void(int, const Elem&)>& visit) {
    ++streamed;
    check_streamed(streamed, budget, counts);
    ++counts[static_cast<std::size_t>(n)];
    visit(n, g);
    if (n == n_max) return;
    Word w = g.w;
    w.push_back(0);
    for (int s = 0; s < m.alphabet_size(); ++s) {
        w.back() = static_cast<char>(s);
        Word nf = m.normalize_word(w);
        if (static_cast<int>(nf.size()) == n + 1)
            dfs_stream(m, Elem{std::move(nf)}, n + 1, n_max, budget, streamed, counts, visit);
    }
}

} // namespace

void for_each_sphere(const GroupModel& m, int n_max, const Budget& budget,
                     const std::function<void(int, const std::vector<Elem>&)>& sphere_fn) {
    std::vector<std::uint64_t> counts;
    std::uint64_t streamed = 0;
    std::vector<Elem> sphere{m.identity()};
    for (int n = 0; n <= n_max; ++n) {
        streamed += sphere.size();
        check_streamed(streamed, budget, counts);
        counts.push_back(sphere.size());
        sphere_fn(n, sphere);
        if (n == n_max) break;
        std::vector<Word> next;
        for (const Elem& g : sphere) append_children(m, g, n, next);
        if (next.size() > budget.max_retained)
            throw budget_error("ball enumeration exceeded retention cap", counts);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        sphere.clear();
        sphere.reserve(next.size());
        for (auto& w : next) sphere.push_back(Elem{std::move(w)});
    }
}

std::vector<std::uint64_t> stream_ball(const GroupModel& m, int n_max, const Budget& budget,
                                       int threads,
                                       const std::function<void(int, const Elem&)>& visit) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
    if (threads < 1) threads = 1;

    if (m.unique_geodesics()) {
        if (threads == 1) {
            std::uint64_t streamed = 0;
            dfs_stream(m, m.identity(), 0, n_max, budget, streamed, counts, visit);
            return counts;
        }
        // Partition by first letter; sphere 0 handled once.  Counts merge by
        // addition, so the reduction is deterministic regardless of schedule.
        visit(0, m.identity());
        counts[0] = 1;
        if (n_max == 0) return counts;
        std::vector<Elem> roots;
        for (int s = 0; s < m.alphabet_size(); ++s) {
            Word w(1, static_cast<char>(s));
            Word nf = m.normalize_word(w);
            if (nf.size() == 1) roots.push_back(Elem{std::move(nf)});
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::vector<std::vector<std::uint64_t>> part(roots.size());
        std::atomic<std::size_t> cursor{0};
        std::atomic<bool> failed{false};
        std::string error;
        std::mutex error_mu;
        auto worker = [&]() {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= roots.size() || failed.load()) return;
                part[i].assign(static_cast<std::size_t>(n_max) + 1, 0);
                std::uint64_t streamed = 0;
                Budget slice = budget; // per-partition stream cap keeps the abort prompt
                slice.max_streamed = budget.max_streamed / roots.size() + 1;
                try {
                    dfs_stream(m, roots[i], 1, n_max, slice, streamed, part[i], visit);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    failed.store(true);
                    if (error.empty()) error = e.what();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failed.load()) throw budget_error(error, counts);
        for (const auto& p : part)
            for (std::size_t n = 0; n < p.size(); ++n) counts[n] += p[n];
        return counts;
    }

    for_each_sphere(m, n_max, budget, [&](int n, const std::vector<Elem>& sphere) {
        counts[static_cast<std::size_t>(n)] = sphere.size();
        for (const Elem& g : sphere) visit(n, g);
    });
    return counts;
}

std::vector<Elem> collect_ball(const GroupModel& m, int n_max, const Budget& budget) {
    std::vector<Elem> out;
    for_each_sphere(m, n_max, budget, [&](int, const std::vector<Elem>& sphere) {
        if (out.size() + sphere.size() > budget.max_retained)
            throw budget_error("ball collection exceeded retention cap");
        out.insert(out.end(), sphere.begin(), sphere.end());
    });
    return out;
}

std::vector<std::uint64_t> sphere_sizes(const GroupModel& m, int n_max, const Budget& budget,
                                        int threads) {
    return stream_ball(m, n_max, budget, threads, [](int, const Elem&) {});
}

GeodesicStream geodesics_between(const GroupModel& m, const Elem& g, const Elem& h,
                                 std::uint64_t cap) {
    GeodesicStream out;
    Word start = m.free_inverse_word(g.w);
    start += h.w;
    Elem togo = m.normalize(start); // g^-1 h, remaining displacement
    Word prefix;
    // DFS in letter order: every geodesic from g spells a word whose steps
    // decrease |togo| by exactly one, and letter order makes the stream lex
    // (hence ShortLex: all words share the same length).
    std::function<bool(Elem&)> rec = [&](Elem& rest) -> bool {
        if (rest.is_identity()) {
            if (out.words.size() >= cap) {
                out.truncated = true;
                return false;
            }
            out.words.push_back(prefix);
            return true;
        }
        for (int s = 0; s < m.alphabet_size(); ++s) {
            Word w(1, static_cast<char>(m.inverse_letter(s)));
            w += rest.w;
            Elem next = m.normalize(w);
            if (next.length() + 1 == rest.length()) {
                prefix.push_back(static_cast<char>(s));
                bool ok = rec(next);
                prefix.pop_back();
                if (!ok) return false;
            }
        }
        return true;
    };
    rec(togo);
    return out;
}

std::vector<Elem> vertex_path(const GroupModel& m, const Elem& base, const Word& word) {
    std::vector<Elem> verts{base};
    Word cur = base.w;
    for (char c : word) {
        cur.push_back(c);
        cur = m.normalize_word(cur);
        verts.push_back(Elem{cur});
    }
    return verts;
}

} // namespace cayley
