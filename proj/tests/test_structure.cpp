#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ramlift/models.hpp"
#include "ramlift/structure.hpp"
#include "ramlift/test_fixtures.hpp"

using namespace ramlift;

TEST_CASE("a single cycle is bicycle-free at every radius") {
    Multigraph c6 = fixtures::cycle(6);
    const std::uint32_t cap = default_radius_cap(c6);
    CHECK(bicycle_free_radius(c6) == static_cast<int>(cap));
    CHECK(is_bicycle_free_at(c6, 100));
}

TEST_CASE("bowtie fails at radius 1") {
    Multigraph g = fixtures::bowtie();
    CHECK(is_bicycle_free_at(g, 0));
    CHECK_FALSE(is_bicycle_free_at(g, 1));
    CHECK(bicycle_free_radius(g) == 0);
}

TEST_CASE("forests pass at any radius") {
    for (auto g : {fixtures::path(7), fixtures::star(5)}) {
        CHECK(is_bicycle_free_at(g, 0));
        CHECK(is_bicycle_free_at(g, 3));
        CHECK(is_bicycle_free_at(g, 50));
        CHECK(bicycle_free_radius(g) == static_cast<int>(default_radius_cap(g)));
    }
}

TEST_CASE("theta graph fails at its diameter") {
    Multigraph g = fixtures::theta_graph();  // diameter 2
    CHECK_FALSE(is_bicycle_free_at(g, 2));
    CHECK(bicycle_free_radius(g) < 2);
}

TEST_CASE("K4 at radius 1 is the whole graph with excess 2") {
    Multigraph g = fixtures::complete(4);
    const NeighborhoodReport rep = neighborhood(g, 0, 1);
    CHECK(rep.vertices == 4);
    CHECK(rep.edges == 6);
    CHECK(rep.excess == 2);
    CHECK(rep.classification == NeighborhoodClass::bicyclic_or_worse);
    CHECK_FALSE(is_bicycle_free_at(g, 1));
}

TEST_CASE("two loops at one vertex already fail at radius 0") {
    const std::vector<Edge> edges = {{0, 0}, {0, 0}};
    Multigraph g = Multigraph::from_edges(1, edges);
    CHECK(bicycle_free_radius(g, 5) == -1);
}

TEST_CASE("monotonicity of bicycle-freeness in the radius") {
    std::uint64_t trial = 0;
    for (int rep = 0; rep < 10; ++rep) {
        ModelSpec spec;
        spec.model = GraphModel::configuration;
        spec.n = 40;
        spec.d = 3;
        spec.seed = parse_hex_seed("66");
        Multigraph g = sample(spec, trial++);
        const int rad = bicycle_free_radius(g);
        if (rad < 0) continue;
        for (int r = 0; r <= rad; ++r) CHECK(is_bicycle_free_at(g, r));
        if (rad < static_cast<int>(default_radius_cap(g)))
            CHECK_FALSE(is_bicycle_free_at(g, rad + 1));
    }
}

TEST_CASE("short cycle enumeration on named graphs") {
    CHECK(enumerate_short_cycles(fixtures::cycle(6), 6).size() == 1);
    CHECK(enumerate_short_cycles(fixtures::cycle(6), 5).empty());

    auto two_triangles =
        fixtures::disjoint_union(fixtures::cycle(3), fixtures::cycle(3));
    auto cycles = enumerate_short_cycles(two_triangles, 3);
    REQUIRE(cycles.size() == 2);
    std::set<std::uint32_t> s0(cycles[0].vertices.begin(), cycles[0].vertices.end());
    std::set<std::uint32_t> s1(cycles[1].vertices.begin(), cycles[1].vertices.end());
    std::vector<std::uint32_t> overlap;
    std::set_intersection(s0.begin(), s0.end(), s1.begin(), s1.end(),
                          std::back_inserter(overlap));
    CHECK(overlap.empty());

    auto bowtie_cycles = enumerate_short_cycles(fixtures::bowtie(), 3);
    REQUIRE(bowtie_cycles.size() == 2);
    std::set<std::uint32_t> b0(bowtie_cycles[0].vertices.begin(), bowtie_cycles[0].vertices.end());
    std::set<std::uint32_t> b1(bowtie_cycles[1].vertices.begin(), bowtie_cycles[1].vertices.end());
    overlap.clear();
    std::set_intersection(b0.begin(), b0.end(), b1.begin(), b1.end(),
                          std::back_inserter(overlap));
    CHECK(overlap == std::vector<std::uint32_t>{0});

    // K4: four triangles, three quadrilaterals
    CHECK(enumerate_short_cycles(fixtures::complete(4), 3).size() == 4);
    CHECK(enumerate_short_cycles(fixtures::complete(4), 4).size() == 7);

    // doubled edge: one 2-cycle plus two triangles through either copy
    auto doubled = enumerate_short_cycles(fixtures::doubled_triangle(), 3);
    CHECK(doubled.size() == 3);
    int two_cycles = 0;
    for (const Cycle& c : doubled) two_cycles += c.length() == 2;
    CHECK(two_cycles == 1);

    // loops count as length-1 cycles
    const std::vector<Edge> loop_edges = {{0, 0}, {0, 1}};
    CHECK(enumerate_short_cycles(Multigraph::from_edges(2, loop_edges), 1).size() == 1);
}

TEST_CASE("every cycle is reported once up to rotation and reflection") {
    // each enumerated cycle's edge multiset must be unique
    for (const Multigraph& g :
         {fixtures::petersen(), fixtures::complete(5), fixtures::hypercube3()}) {
        auto cycles = enumerate_short_cycles(g, 6);
        std::set<std::vector<std::uint32_t>> seen;
        for (Cycle c : cycles) {
            std::sort(c.edge_ids.begin(), c.edge_ids.end());
            CHECK(seen.insert(c.edge_ids).second);
        }
    }
    CHECK(enumerate_short_cycles(fixtures::petersen(), 5).size() == 12);  // girth-5 count
}

namespace {

// path spine with small far-apart cycles hanging off it
Multigraph far_apart_cycles(std::uint32_t spine, std::uint32_t cycle_len,
                            const std::vector<std::uint32_t>& anchors) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
    std::uint32_t next = spine;
    for (std::uint32_t a : anchors) {
        std::uint32_t prev = a;
        for (std::uint32_t s = 0; s + 1 < cycle_len; ++s) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, a});
    }
    return Multigraph::from_edges(next, edges);
}

} // namespace

TEST_CASE("Fact 2.10 and Prop 2.11 on bicycle-free graphs") {
    Multigraph g = far_apart_cycles(200, 4, {10, 180});
    const int rad = bicycle_free_radius(g, 60);
    REQUIRE(rad >= 40);
    const auto r = static_cast<std::uint32_t>(rad);
    auto cycles = enumerate_short_cycles(g, 2 * r);
    REQUIRE(cycles.size() == 2);

    // vertex-disjointness
    std::set<std::uint32_t> seen;
    for (const Cycle& c : cycles)
        for (std::uint32_t v : c.vertices) CHECK(seen.insert(v).second);

    // C+ balls pairwise disjoint: multi-source BFS to depth r - len/2
    std::vector<std::set<std::uint32_t>> plus_balls;
    for (const Cycle& c : cycles) {
        const std::uint32_t depth = r - c.length() / 2;
        std::set<std::uint32_t> ball(c.vertices.begin(), c.vertices.end());
        std::vector<std::uint32_t> frontier(c.vertices.begin(), c.vertices.end());
        for (std::uint32_t step = 0; step < depth; ++step) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t v : frontier)
                for (std::uint32_t eid : g.incident(v)) {
                    const Edge& e = g.edges()[eid];
                    const std::uint32_t w = e.u == v ? e.v : e.u;
                    if (ball.insert(w).second) next.push_back(w);
                }
            frontier = std::move(next);
        }
        plus_balls.push_back(std::move(ball));
    }
    std::vector<std::uint32_t> overlap;
    std::set_intersection(plus_balls[0].begin(), plus_balls[0].end(),
                          plus_balls[1].begin(), plus_balls[1].end(),
                          std::back_inserter(overlap));
    CHECK(overlap.empty());
}

TEST_CASE("excess bound: trees and single cycles satisfy it") {
    Multigraph tree = fixtures::path(50);
    CHECK(check_excess_bound(tree, 40) == ExcessBoundResult::holds);

    Multigraph c50 = fixtures::cycle(50);
    // r = ceil(10 ln 50) = 40
    CHECK(check_excess_bound(c50, 40) == ExcessBoundResult::holds);
}

TEST_CASE("excess bound hypothesis failures are inapplicable") {
    Multigraph k4 = fixtures::complete(4);
    CHECK(check_excess_bound(k4, 2) == ExcessBoundResult::inapplicable);   // r < 10 ln 4
    CHECK(check_excess_bound(k4, 50) == ExcessBoundResult::inapplicable);  // not bicycle-free
}

TEST_CASE("excess bound never reports violated on fuzzed sparse graphs") {
    std::uint64_t state = 4242;
    int applicable = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        // random tree plus up to two extra edges
        const std::uint32_t n = 120 + splitmix64(state) % 100;
        std::vector<Edge> edges;
        for (std::uint32_t v = 1; v < n; ++v)
            edges.push_back({static_cast<std::uint32_t>(splitmix64(state) % v), v});
        const int extra = static_cast<int>(splitmix64(state) % 3);
        for (int x = 0; x < extra; ++x) {
            const auto a = static_cast<std::uint32_t>(splitmix64(state) % n);
            const auto b = static_cast<std::uint32_t>(splitmix64(state) % n);
            if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
        }
        Multigraph g = Multigraph::from_edges(n, edges);
        const auto r = static_cast<std::uint32_t>(std::ceil(10.0 * std::log(n)));
        const ExcessBoundResult res = check_excess_bound(g, r);
        CHECK(res != ExcessBoundResult::violated);
        applicable += res == ExcessBoundResult::holds;
    }
    CHECK(applicable > 0);
}

TEST_CASE("random cubic graphs at n = 4096 are bicycle-free at radius 2") {
    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = 4096;
    spec.d = 3;
    spec.seed = parse_hex_seed("4096");
    int at_least_two = 0;
    for (std::uint64_t t = 0; t < 3; ++t)
        at_least_two += bicycle_free_radius(sample(spec, t)) >= 2;
    CHECK(at_least_two >= 2);
}
