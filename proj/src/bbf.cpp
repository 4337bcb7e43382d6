#include "cayley/bbf.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

#include "cayley/enumerate.hpp"

namespace cayley {

// ---------------------------------------------------------------------------
// ProjectionFamily
// ---------------------------------------------------------------------------

ProjectionFamily::ProjectionFamily(const GroupModel& m, std::vector<PointSet> members)
    : model_(&m), members_(std::move(members)) {
    if (members_.size() < 2) throw std::invalid_argument("projection family needs >= 2 members");
    for (auto& mem : members_) {
        if (mem.empty()) throw std::invalid_argument("projection family member is empty");
        std::sort(mem.points.begin(), mem.points.end());
    }
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (members_[i].points == members_[j].points)
                throw std::invalid_argument("projection family members must be pairwise distinct");

    const int n = static_cast<int>(members_.size());
    table_.assign(static_cast<std::size_t>(n) * n * n, -1);
    proj_.resize(static_cast<std::size_t>(n) * n);
    for (int w = 0; w < n; ++w)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (w == y || w == z || y == z) continue;
                table_[static_cast<std::size_t>(idx(w, y, z))] =
                    proj_diameter(m, members_[static_cast<std::size_t>(w)],
                                  members_[static_cast<std::size_t>(y)],
                                  members_[static_cast<std::size_t>(z)]);
            }
}

int ProjectionFamily::idx(int W, int Y, int Z) const {
    const int n = static_cast<int>(members_.size());
    return (W * n + Y) * n + Z;
}

int ProjectionFamily::dpi(int W, int Y, int Z) const {
    int v = table_[static_cast<std::size_t>(idx(W, Y, Z))];
    if (v < 0) throw std::invalid_argument("dpi: diagonal triple");
    return v;
}

int ProjectionFamily::dpi_points(int W, const Elem& y, const Elem& z) const {
    return proj_diameter(*model_, members_[static_cast<std::size_t>(W)], PointSet{{y}, ""},
                         PointSet{{z}, ""});
}

const PointSet& ProjectionFamily::member_projection(int W, int Y) const {
    const int n = static_cast<int>(members_.size());
    auto& slot = proj_[static_cast<std::size_t>(W * n + Y)];
    if (!slot) {
        PointSet acc;
        std::set<Word> seen;
        for (const Elem& z : members_[static_cast<std::size_t>(Y)].points)
            for (const Elem& p : project(*model_, z, members_[static_cast<std::size_t>(W)]).points)
                if (seen.insert(p.w).second) acc.points.push_back(p);
        std::sort(acc.points.begin(), acc.points.end());
        slot = std::move(acc);
    }
    return *slot;
}

std::vector<int> interval_set(const ProjectionFamily& family, int Y, int Z, double K) {
    if (Y == Z) throw std::invalid_argument("interval_set: Y = Z");
    std::vector<int> out;
    for (int w = 0; w < static_cast<int>(family.size()); ++w) {
        if (w == Y || w == Z) continue;
        if (static_cast<double>(family.dpi(w, Y, Z)) > K) out.push_back(w);
    }
    return out;
}

std::vector<int> interval_set_points(const ProjectionFamily& family, const Elem& y, const Elem& z,
                                     double K) {
    std::vector<int> out;
    for (int w = 0; w < static_cast<int>(family.size()); ++w)
        if (static_cast<double>(family.dpi_points(w, y, z)) > K) out.push_back(w);
    return out;
}

// ---------------------------------------------------------------------------
// MetricGraph
// ---------------------------------------------------------------------------

int MetricGraph::vertex_index(int member, const Elem& point) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].member == member && vertices[i].point == point) return static_cast<int>(i);
    return -1;
}

bool MetricGraph::connected() const {
    for (const auto& row : dist)
        for (double d : row)
            if (std::isinf(d)) return false;
    return true;
}

void MetricGraph::finalize() {
    const std::size_t n = vertices.size();
    dist.assign(n, std::vector<double>(n, kInfinity));
    for (std::size_t s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.push({0, s});
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > d[u]) continue;
            for (auto [v, w] : adj[u]) {
                if (du + w < d[static_cast<std::size_t>(v)]) {
                    d[static_cast<std::size_t>(v)] = du + w;
                    pq.push({du + w, static_cast<std::size_t>(v)});
                }
            }
        }
    }
}

namespace {

void add_edge(MetricGraph& g, int u, int v, double w) {
    g.adj[static_cast<std::size_t>(u)].emplace_back(v, w);
    g.adj[static_cast<std::size_t>(v)].emplace_back(u, w);
}

// Connectivity of a member's induced unit-distance graph.
bool member_connected(const GroupModel& m, const std::vector<Elem>& pts) {
    if (pts.empty()) return false;
    std::vector<bool> seen(pts.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < pts.size(); ++v) {
            if (seen[v] || m.distance(pts[u], pts[v]) != 1) continue;
            seen[v] = true;
            ++reached;
            stack.push_back(v);
        }
    }
    return reached == pts.size();
}

} // namespace

MetricGraph build_projection_complex(const ProjectionFamily& family, double K) {
    MetricGraph g;
    for (int i = 0; i < static_cast<int>(family.size()); ++i)
        g.vertices.push_back({i, Elem{}});
    g.adj.resize(g.vertices.size());
    for (int i = 0; i < static_cast<int>(family.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(family.size()); ++j)
            if (interval_set(family, i, j, K).empty()) add_edge(g, i, j, 1.0);
    g.finalize();
    return g;
}

MetricGraph build_quasi_tree_of_spaces(const ProjectionFamily& family, double K, double N) {
    const GroupModel& m = family.model();
    MetricGraph g;

    std::vector<std::vector<Elem>> spaces;
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<Elem> pts = family.members()[i].points;
        if (!member_connected(m, pts)) {
            // 1-neighborhood thickening restores connectivity of quasi-convex
            // members whose points sit at generator-power gaps
            std::set<Word> seen;
            std::vector<Elem> thick;
            for (const Elem& p : pts)
                for (const Elem& u : collect_ball(m, 1, Budget{})) {
                    Elem q = m.multiply(p, u);
                    if (seen.insert(q.w).second) thick.push_back(q);
                }
            std::sort(thick.begin(), thick.end());
            pts = std::move(thick);
            if (!member_connected(m, pts))
                throw std::invalid_argument("quasi-tree member disconnected after thickening");
        }
        spaces.push_back(std::move(pts));
    }

    for (std::size_t i = 0; i < spaces.size(); ++i)
        for (const Elem& p : spaces[i]) g.vertices.push_back({static_cast<int>(i), p});
    g.adj.resize(g.vertices.size());

    for (std::size_t u = 0; u < g.vertices.size(); ++u)
        for (std::size_t v = u + 1; v < g.vertices.size(); ++v)
            if (g.vertices[u].member == g.vertices[v].member &&
                m.distance(g.vertices[u].point, g.vertices[v].point) == 1)
                add_edge(g, static_cast<int>(u), static_cast<int>(v), 1.0);

    for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(family.size()); ++j) {
            if (!interval_set(family, i, j, K).empty()) continue;
            for (const Elem& y : family.member_projection(i, j).points)
                for (const Elem& z : family.member_projection(j, i).points)
                    add_edge(g, g.vertex_index(i, y), g.vertex_index(j, z), N);
        }
    }
    g.finalize();
    return g;
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

BottleneckResult bottleneck_certify(const MetricGraph& graph, double delta,
                                    std::uint64_t max_pairs) {
    BottleneckResult res;
    const int n = static_cast<int>(graph.vertices.size());
    for (int x = 0; x < n && res.pass; ++x) {
        for (int y = x + 1; y < n && res.pass; ++y) {
            if (res.pairs_checked >= max_pairs) throw budget_error("bottleneck_certify: pair cap");
            ++res.pairs_checked;
            double dxy = graph.distance(x, y);
            if (std::isinf(dxy)) continue;
            // midpoint vertex on some geodesic, closest to the half-way mark
            int mid = -1;
            double best = kInfinity;
            for (int v = 0; v < n; ++v) {
                if (std::abs(graph.distance(x, v) + graph.distance(v, y) - dxy) > 1e-9) continue;
                double off = std::abs(graph.distance(x, v) - dxy / 2);
                if (off < best) best = off, mid = v;
            }
            std::vector<bool> blocked(static_cast<std::size_t>(n), false);
            for (int v = 0; v < n; ++v)
                if (graph.distance(mid, v) <= delta) blocked[static_cast<std::size_t>(v)] = true;
            if (blocked[static_cast<std::size_t>(x)] || blocked[static_cast<std::size_t>(y)])
                continue; // the ball swallows an endpoint: nothing to avoid
            // can x reach y through unblocked vertices?
            std::vector<int> parent(static_cast<std::size_t>(n), -1);
            std::vector<int> stack{x};
            parent[static_cast<std::size_t>(x)] = x;
            bool reached = false;
            while (!stack.empty() && !reached) {
                int u = stack.back();
                stack.pop_back();
                for (auto [v, w] : graph.adj[static_cast<std::size_t>(u)]) {
                    (void)w;
                    if (blocked[static_cast<std::size_t>(v)] ||
                        parent[static_cast<std::size_t>(v)] != -1)
                        continue;
                    parent[static_cast<std::size_t>(v)] = u;
                    if (v == y) {
                        reached = true;
                        break;
                    }
                    stack.push_back(v);
                }
            }
            if (reached) {
                res.pass = false;
                res.x = x;
                res.y = y;
                res.midpoint = mid;
                for (int v = y; v != x; v = parent[static_cast<std::size_t>(v)])
                    res.avoiding_path.push_back(v);
                res.avoiding_path.push_back(x);
                std::reverse(res.avoiding_path.begin(), res.avoiding_path.end());
            }
        }
    }
    return res;
}

namespace {

// All geodesic vertex paths between two graph vertices, via the tight-edge
// relation, capped.
void enumerate_graph_geodesics(const MetricGraph& g, int from, int to, std::uint64_t cap,
                               std::vector<std::vector<int>>& out, bool& truncated) {
    std::vector<int> path{from};
    std::function<bool(int)> rec = [&](int u) -> bool {
        if (u == to) {
            if (out.size() >= cap) {
                truncated = true;
                return false;
            }
            out.push_back(path);
            return true;
        }
        for (auto [v, w] : g.adj[static_cast<std::size_t>(u)]) {
            if (std::abs(g.distance(from, u) + w + g.distance(v, to) -
                         g.distance(from, to)) > 1e-9)
                continue;
            path.push_back(v);
            bool keep = rec(v);
            path.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    rec(from);
}

} // namespace

StandardPathReport standard_path_check(const MetricGraph& qts, const ProjectionFamily& family,
                                       int y_member, const Elem& y, int z_member, const Elem& z,
                                       double K_tilde, double R, std::uint64_t geodesic_cap) {
    StandardPathReport rep;
    int yv = qts.vertex_index(y_member, y);
    int zv = qts.vertex_index(z_member, z);
    if (yv < 0 || zv < 0) throw std::invalid_argument("standard_path_check: vertex not in graph");

    std::vector<std::vector<int>> geodesics;
    enumerate_graph_geodesics(qts, yv, zv, geodesic_cap, geodesics, rep.truncated);
    rep.geodesics = geodesics.size();

    for (int w = 0; w < static_cast<int>(family.size()); ++w) {
        StandardPathReport::Row row;
        row.member = w;
        row.dpi = family.dpi_points(w, y, z);
        row.relevant = static_cast<double>(row.dpi) > K_tilde;
        if (row.relevant) {
            auto proj_vertices = [&](const Elem& point) {
                std::vector<int> vs;
                for (const Elem& p : project(family.model(), point,
                                             family.members()[static_cast<std::size_t>(w)]).points) {
                    int idx = qts.vertex_index(w, p);
                    if (idx >= 0) vs.push_back(idx);
                }
                return vs;
            };
            auto near = proj_vertices(y), far = proj_vertices(z);
            for (const auto& path : geodesics) {
                double dnear = kInfinity, dfar = kInfinity;
                for (int v : path) {
                    for (int p : near) dnear = std::min(dnear, qts.distance(v, p));
                    for (int p : far) dfar = std::min(dfar, qts.distance(v, p));
                }
                row.worst_start = std::max(row.worst_start, dnear);
                row.worst_end = std::max(row.worst_end, dfar);
            }
            row.ok = row.worst_start <= R && row.worst_end <= R;
            if (!row.ok) rep.pass = false;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

std::string graph_to_csv(const MetricGraph& g, const GroupModel& m) {
    std::ostringstream os;
    os << "u,v,weight\n";
    for (std::size_t u = 0; u < g.adj.size(); ++u)
        for (auto [v, w] : g.adj[u])
            if (static_cast<std::size_t>(v) > u)
                os << g.vertices[u].member << ":" << m.to_string(g.vertices[u].point) << ","
                   << g.vertices[static_cast<std::size_t>(v)].member << ":"
                   << m.to_string(g.vertices[static_cast<std::size_t>(v)].point) << "," << w << "\n";
    return os.str();
}

std::string graph_to_json(const MetricGraph& g, const ProjectionFamily& family) {
    const GroupModel& m = family.model();
    std::ostringstream os;
    os << "{\"members\":[";
    for (std::size_t i = 0; i < family.size(); ++i)
        os << (i ? "," : "") << "\"" << family.members()[i].label << "\"";
    os << "],\"vertices\":[";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << (i ? "," : "") << "{\"member\":" << g.vertices[i].member << ",\"point\":\""
           << m.to_string(g.vertices[i].point) << "\"}";
    os << "],\"edges\":[";
    bool first = true;
    for (std::size_t u = 0; u < g.adj.size(); ++u)
        for (auto [v, w] : g.adj[u])
            if (static_cast<std::size_t>(v) > u) {
                os << (first ? "" : ",") << "[" << u << "," << v << "," << w << "]";
                first = false;
            }
    os << "]}";
    return os.str();
}

} // namespace cayley
