#include "doctest.h"

#include "cayley/enumerate.hpp"
#include "cayley/geometry.hpp"
#include "cayley/group.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

PointSet singleton(const Elem& g) { return PointSet{{g}, ""}; }

// Direct-minimization oracle for projections onto the F2xF2 diagonal segment:
// d((a^k, c^l), (a^m, c^m)) = |k-m| + |l-m|, minimized by enumeration.
std::pair<int, std::pair<int, int>> diag_proj_oracle(int k, int l, int extent) {
    int best = 1 << 30, lo = 0, hi = 0;
    for (int m = -extent; m <= extent; ++m) {
        int d = std::abs(k - m) + std::abs(l - m);
        if (d < best) best = d, lo = hi = m;
        else if (d == best) hi = m;
    }
    return {best, {lo, hi}};
}

} // namespace

TEST_CASE("project examples in the tree") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 4);

    auto p1 = project(*f2, f2->parse("b"), axis.points);
    REQUIRE(p1.points.size() == 1);
    CHECK(p1.points[0].is_identity());

    auto p2 = project(*f2, f2->parse("a.b.b"), axis.points);
    REQUIRE(p2.points.size() == 1);
    CHECK(p2.points[0] == f2->parse("a"));

    auto on = project(*f2, f2->parse("a.a"), axis.points);
    REQUIRE(on.points.size() == 1);
    CHECK(on.points[0] == f2->parse("a.a"));
}

TEST_CASE("proj_diameter examples") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 4);
    CHECK(proj_diameter(*f2, axis.points, singleton(f2->parse("a")), singleton(f2->parse("a"))) == 0);
    CHECK(proj_diameter(*f2, axis.points, singleton(f2->parse("b")), singleton(f2->parse("a.b"))) == 1);

    auto d = build_model(GroupSpec::direct_product(GroupSpec::free_group(2), GroupSpec::free_group(2)));
    const int k = 4;
    auto diag = build_axis(*d, d->parse("a.c"), k);
    Elem y = d->parse("a.a.a.a"); // (a^k, 1)
    auto [dist, range] = diag_proj_oracle(k, 0, k);
    CHECK(dist_to_set(*d, y, diag.points) == dist);
    auto proj = project(*d, y, diag.points);
    CHECK(static_cast<int>(proj.points.size()) == range.second - range.first + 1);
    CHECK(proj_diameter(*d, diag.points, singleton(y), singleton(y)) == 2 * k);
}

TEST_CASE("d^pi triangle inequality, exhaustive on the radius-3 ball") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 3);
    auto ball = collect_ball(*f2, 3, Budget{});
    std::vector<int> dpis(ball.size() * ball.size(), -1);
    auto dpi = [&](std::size_t i, std::size_t j) {
        int& slot = dpis[i * ball.size() + j];
        if (slot < 0) slot = proj_diameter(*f2, axis.points, singleton(ball[i]), singleton(ball[j]));
        return slot;
    };
    for (std::size_t a = 0; a < ball.size(); ++a)
        for (std::size_t b = 0; b < ball.size(); ++b)
            for (std::size_t c = 0; c < ball.size(); ++c)
                CHECK(dpi(a, c) <= dpi(a, b) + dpi(b, c));
}

TEST_CASE("d^pi triangle inequality off the tree (flat diagonal, radius 2)") {
    auto d = build_model(GroupSpec::direct_product(GroupSpec::free_group(2), GroupSpec::free_group(2)));
    auto diag = build_axis(*d, d->parse("a.c"), 4);
    auto ball = collect_ball(*d, 2, Budget{});
    std::vector<std::vector<int>> dpi(ball.size(), std::vector<int>(ball.size(), -1));
    auto get = [&](std::size_t i, std::size_t j) {
        if (dpi[i][j] < 0)
            dpi[i][j] = proj_diameter(*d, diag.points, singleton(ball[i]), singleton(ball[j]));
        return dpi[i][j];
    };
    for (std::size_t a = 0; a < ball.size(); ++a)
        for (std::size_t b = 0; b < ball.size(); ++b)
            for (std::size_t c = 0; c < ball.size(); ++c)
                CHECK(get(a, c) <= get(a, b) + get(b, c));
}

TEST_CASE("1-Lipschitz projection with C = 1 in the tree, radius 4") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 6);
    auto ball = collect_ball(*f2, 4, Budget{});
    for (const Elem& y : ball)
        for (const Elem& z : ball)
            CHECK(proj_diameter(*f2, axis.points, singleton(y), singleton(z)) <= f2->distance(y, z) + 1);
}

TEST_CASE("contraction verdict on the free-group axis passes") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 8);
    GeodesicBudget budget;
    budget.radius = 4;
    auto v = contraction_verdict(*f2, axis.points, 1.0, budget);
    CHECK(v.pass);
    CHECK(v.exhaustive);
    CHECK(estimate_contraction_constant(*f2, axis.points, budget) == 0.5);
}

TEST_CASE("whole-ball point set passes vacuously") {
    auto f2 = build_model(GroupSpec::free_group(2));
    PointSet X{collect_ball(*f2, 2, Budget{}), "ball2"};
    GeodesicBudget budget;
    budget.radius = 2;
    auto v = contraction_verdict(*f2, X, 0.5, budget);
    CHECK(v.pass);
}

TEST_CASE("flat diagonal fails contraction with a replayable witness") {
    auto d = build_model(GroupSpec::direct_product(GroupSpec::free_group(2), GroupSpec::free_group(2)));
    auto diag = build_axis(*d, d->parse("a.c"), 6);
    GeodesicBudget budget;
    budget.radius = 4;
    auto v = contraction_verdict(*d, diag.points, 2.0, budget);
    REQUIRE(!v.pass);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->dist_to_set >= 2);
    CHECK(v.witness->proj_diam > 2);
    CHECK(verify_witness(*d, diag.points, 2.0, *v.witness));

    CHECK(estimate_contraction_constant(*d, diag.points, budget) == kInfinity);
}

TEST_CASE("sampled budgets are seeded and reproducible") {
    auto d = build_model(GroupSpec::direct_product(GroupSpec::free_group(2), GroupSpec::free_group(2)));
    auto diag = build_axis(*d, d->parse("a.c"), 6);
    GeodesicBudget budget;
    budget.mode = GeodesicBudget::Mode::Sampled;
    budget.radius = 4;
    budget.sample_pairs = 500;
    budget.seed = 42;
    auto v1 = contraction_verdict(*d, diag.points, 2.0, budget);
    auto v2 = contraction_verdict(*d, diag.points, 2.0, budget);
    CHECK(!v1.exhaustive);
    CHECK(v1.pass == v2.pass);
    CHECK(v1.geodesics_examined == v2.geodesics_examined);
    if (v1.witness) {
        REQUIRE(v2.witness);
        CHECK(v1.witness->word == v2.witness->word);
        CHECK(verify_witness(*d, diag.points, 2.0, *v1.witness));
    }
}

TEST_CASE("singleton point set has grid-minimal constant") {
    auto f2 = build_model(GroupSpec::free_group(2));
    GeodesicBudget budget;
    budget.radius = 3;
    CHECK(estimate_contraction_constant(*f2, singleton(f2->identity()), budget) == 0.5);
}

TEST_CASE("finite-neighborhood stability") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 8);
    GeodesicBudget budget;
    budget.radius = 4;
    double c0 = estimate_contraction_constant(*f2, axis.points, budget);
    PointSet enlarged = axis.points;
    enlarged.points.push_back(f2->parse("b")); // one extra point at distance 1
    std::sort(enlarged.points.begin(), enlarged.points.end());
    double c1 = estimate_contraction_constant(*f2, enlarged, budget);
    CHECK(c1 <= c0 + 4.0);
}

TEST_CASE("subpath contraction stability") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 6);
    GeodesicBudget budget;
    budget.radius = 4;
    double c0 = estimate_contraction_constant(*f2, axis.points, budget);
    // sub-segments a^i .. a^j of the axis
    for (int lo = -2; lo <= 0; ++lo) {
        for (int hi = 1; hi <= 3; ++hi) {
            PointSet sub;
            for (int e = lo; e <= hi; ++e) {
                Elem p = f2->identity();
                Elem step = e >= 0 ? f2->parse("a") : f2->parse("A");
                for (int i = 0; i < std::abs(e); ++i) p = f2->multiply(p, step);
                sub.points.push_back(p);
            }
            std::sort(sub.points.begin(), sub.points.end());
            CHECK(estimate_contraction_constant(*f2, sub, budget) <= c0 + 0.5);
        }
    }
}

TEST_CASE("quasi-convexity of the axis at c = 1") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 5);
    for (const Elem& x : axis.points.points) {
        for (const Elem& y : axis.points.points) {
            auto st = geodesics_between(*f2, x, y, 10);
            for (const Word& w : st.words)
                for (const Elem& v : vertex_path(*f2, x, w))
                    CHECK(dist_to_set(*f2, v, axis.points) == 0);
        }
    }
}

TEST_CASE("qie_check") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto fit = qie_check(*f2, f2->parse("a"), 6);
    CHECK(fit.lower_slope == 1.0);
    CHECK(fit.upper_slope == 1.0);
    CHECK(fit.additive == 0);
    CHECK(!fit.degenerate);

    auto m = build_model(GroupSpec::free_product(GroupSpec::cyclic(2), GroupSpec::cyclic(3)));
    auto fab = qie_check(*m, m->parse("a.b"), 6);
    CHECK(fab.lower_slope == 2.0);
    CHECK(fab.upper_slope == 2.0);
    auto fa = qie_check(*m, m->parse("a"), 6);
    CHECK(fa.degenerate);
}

TEST_CASE("build_axis") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto axis = build_axis(*f2, f2->parse("a"), 3);
    CHECK(axis.points.size() == 7);

    auto m = build_model(GroupSpec::free_product(GroupSpec::cyclic(2), GroupSpec::cyclic(3)));
    auto ab = build_axis(*m, m->parse("a.b"), 2);
    CHECK(ab.points.size() == 5);
    CHECK_THROWS_WITH_AS(build_axis(*m, m->parse("a"), 3), "build_axis: torsion generator",
                         std::invalid_argument);

    // extras: E(a^2) = <a> in F2 fills in the odd powers
    auto sparse = build_axis(*f2, f2->parse("a.a"), 2);
    CHECK(sparse.points.size() == 5);
    auto filled = build_axis(*f2, f2->parse("a.a"), 2, {f2->parse("a")});
    CHECK(filled.points.size() == 10);
}

TEST_CASE("maximal_cyclic_root") {
    auto f2 = build_model(GroupSpec::free_group(2));
    CHECK(maximal_cyclic_root(*f2, f2->parse("a.b.a.b.a.b")) == f2->parse("a.b"));
    CHECK(maximal_cyclic_root(*f2, f2->parse("a.a.a.a")) == f2->parse("a"));
    CHECK(maximal_cyclic_root(*f2, f2->parse("a.b")) == f2->parse("a.b"));
}

TEST_CASE("bounded projection and intersection") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto ax = build_axis(*f2, f2->parse("a"), 5);
    auto bax = translate(*f2, f2->parse("b"), ax.points);
    auto rep = bounded_projection_check(*f2, {ax.points, bax}, 1.0);
    CHECK(rep.pass);
    for (const auto& row : rep.intersections)
        CHECK(row.diam <= 4 * row.r);

    CHECK_THROWS_WITH_AS(bounded_projection_check(*f2, {ax.points, ax.points}, 1.0),
                         "bounded_projection_check: pairwise distinct required",
                         std::invalid_argument);

    auto d = build_model(GroupSpec::direct_product(GroupSpec::free_group(2), GroupSpec::free_group(2)));
    auto ax1 = build_axis(*d, d->parse("a"), 4);
    auto ax2 = build_axis(*d, d->parse("c"), 4);
    auto rep2 = bounded_projection_check(*d, {ax1.points, ax2.points}, 1.0);
    CHECK(rep2.worst_value >= 0); // values reported; verdict per B
}

TEST_CASE("translate keeps labels and order") {
    auto f2 = build_model(GroupSpec::free_group(2));
    auto ax = build_axis(*f2, f2->parse("a"), 2);
    auto moved = translate(*f2, f2->parse("b"), ax.points);
    CHECK(moved.size() == ax.points.size());
    CHECK(std::is_sorted(moved.points.begin(), moved.points.end()));
}
