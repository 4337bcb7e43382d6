#ifndef CAYLEY_BBF_HPP
#define CAYLEY_BBF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/geometry.hpp"
#include "cayley/group.hpp"

namespace cayley {

// A finite family of contracting candidates with the d^pi table precomputed
// for all ordered triples (W; Y, Z), W distinct from Y and Z.
class ProjectionFamily {
public:
    ProjectionFamily(const GroupModel& m, std::vector<PointSet> members);

    const GroupModel& model() const { return *model_; }
    const std::vector<PointSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    // d^pi_W(Y, Z) from the table.
    int dpi(int W, int Y, int Z) const;
    // d^pi_W(y, z) for points, computed on demand.
    int dpi_points(int W, const Elem& y, const Elem& z) const;
    // pi_W(member Y), memoized.
    const PointSet& member_projection(int W, int Y) const;

private:
    const GroupModel* model_;
    std::vector<PointSet> members_;
    std::vector<int> table_; // indexed [W][Y][Z]
    mutable std::vector<std::optional<PointSet>> proj_;
    int idx(int W, int Y, int Z) const;
};

// Members W (excluding Y, Z) with d^pi_W(Y, Z) > K.
std::vector<int> interval_set(const ProjectionFamily& family, int Y, int Z, double K);
// Same for a pair of points; no members are excluded.
std::vector<int> interval_set_points(const ProjectionFamily& family, const Elem& y, const Elem& z,
                                     double K);

// ---------------------------------------------------------------------------
// Metric graphs
// ---------------------------------------------------------------------------

struct MetricGraph {
    struct Vertex {
        int member = -1;
        Elem point;
    };
    std::vector<Vertex> vertices;
    std::vector<std::vector<std::pair<int, double>>> adj; // (neighbor, weight > 0)
    std::vector<std::vector<double>> dist;                // exact all-pairs (inf = disconnected)

    int vertex_index(int member, const Elem& point) const;
    double distance(int u, int v) const { return dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    bool connected() const;
    void finalize(); // builds the all-pairs distance oracle
};

// The projection complex P_K: one vertex per member, unit edges between pairs
// whose interval set is empty.
MetricGraph build_projection_complex(const ProjectionFamily& family, double K);

// The quasi-tree of spaces C_N: disjoint member graphs (unit Cayley edges,
// 1-neighborhood thickened when a member is not connected) plus length-N
// bridge edges between the mutual projection sets of adjacent pairs.
MetricGraph build_quasi_tree_of_spaces(const ProjectionFamily& family, double K, double N);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

// Bottleneck criterion: for every pair (x, y) there is a near-midpoint m such
// that every x-y path meets B(m, delta).  Certifies quasi-tree-ness of small
// graphs exactly.
struct BottleneckResult {
    bool pass = true;
    int x = -1, y = -1, midpoint = -1;
    std::vector<int> avoiding_path;
    std::uint64_t pairs_checked = 0;
};
BottleneckResult bottleneck_certify(const MetricGraph& graph, double delta,
                                    std::uint64_t max_pairs = UINT64_MAX);

// For each member W with point-d^pi over (y, z) exceeding K_tilde, every
// budgeted qts-geodesic from y to z must pass within R of pi_W(y) and
// pi_W(z) (distances measured in the qts).
struct StandardPathReport {
    struct Row {
        int member = -1;
        int dpi = 0;
        bool relevant = false;
        double worst_start = 0, worst_end = 0; // max over geodesics of min distance
        bool ok = true;
    };
    std::vector<Row> rows;
    std::uint64_t geodesics = 0;
    bool truncated = false;
    bool pass = true;
};
StandardPathReport standard_path_check(const MetricGraph& qts, const ProjectionFamily& family,
                                       int y_member, const Elem& y, int z_member, const Elem& z,
                                       double K_tilde, double R, std::uint64_t geodesic_cap = 10000);

// Edge-list CSV (u, v, weight) and a JSON description with member labels.
std::string graph_to_csv(const MetricGraph& g, const GroupModel& m);
std::string graph_to_json(const MetricGraph& g, const ProjectionFamily& family);

} // namespace cayley

#endif
