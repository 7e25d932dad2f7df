#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ramlift/models.hpp"
#include "ramlift/spectra.hpp"
#include "ramlift/structure.hpp"
#include "ramlift/test_fixtures.hpp"

using namespace ramlift;

namespace {

SignedGraph random_signed(std::uint32_t n, std::uint32_t d, std::uint64_t t) {
    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = n;
    spec.d = d;
    spec.seed = parse_hex_seed("f00d");
    return sign_from_bits(sample(spec, t),
                          SignSource::uniform_hash(derive_seed(spec.seed, "w", t)));
}

int component_count(const Multigraph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    int comps = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        ++comps;
        std::vector<std::uint32_t> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            const std::uint32_t x = stack.back();
            stack.pop_back();
            for (std::uint32_t eid : g.incident(x)) {
                const Edge& e = g.edges()[eid];
                const std::uint32_t w = e.u == x ? e.v : e.u;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

} // namespace

TEST_CASE("all-plus lift is two disjoint copies") {
    SignedGraph sg = sign_all(fixtures::complete(4), +1);
    Multigraph lifted = two_lift(sg);
    CHECK(lifted.vertex_count() == 8);
    CHECK(lifted.degree() == 3);
    CHECK(component_count(lifted) == 2);
    // spectrum doubles
    std::vector<double> base = adjacency_spectrum(sg.graph);
    std::vector<double> expect;
    for (double x : base) { expect.push_back(x); expect.push_back(x); }
    std::sort(expect.begin(), expect.end());
    std::vector<double> got = adjacency_spectrum(lifted);
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-9));
}

TEST_CASE("C4 with one negated edge lifts to C8") {
    SignedGraph sg = sign_all(fixtures::cycle(4), +1);
    sg.signing.signs[2] = -1;
    Multigraph lifted = two_lift(sg);
    CHECK(lifted.vertex_count() == 8);
    CHECK(lifted.regular());
    CHECK(lifted.degree() == 2);
    CHECK(component_count(lifted) == 1);  // connected 2-regular on 8 vertices = C8
    CHECK(lifted.is_simple());
}

TEST_CASE("all-minus signing negates the spectrum of a bipartite base") {
    SignedGraph sg = sign_all(fixtures::cycle(6), -1);
    std::vector<double> got = adjacency_spectrum(sg);
    std::vector<double> base = adjacency_spectrum(sg.graph);
    std::reverse(base.begin(), base.end());
    for (auto& x : base) x = -x;
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(base[i]).epsilon(1e-9));
}

TEST_CASE("signing determinism and insufficient-bits error") {
    Multigraph g = fixtures::petersen();
    const SeedBytes seed = parse_hex_seed("1020304050607080");
    SignedGraph a = sign_from_bits(g, SignSource::uniform_hash(seed));
    SignedGraph b = sign_from_bits(g, SignSource::uniform_hash(seed));
    CHECK(a.signing.signs == b.signing.signs);
    bool mixed = false;
    for (auto s : a.signing.signs) mixed |= s == -1;
    CHECK(mixed);

    BitSource tiny(4, 3, 5, 2);  // only 15 indices available
    Multigraph big = fixtures::complete(8);  // 28 edges
    CHECK_THROWS_AS(sign_from_bits(big, tiny), std::invalid_argument);
    BitSource ok(parse_hex_seed("a1b2c3d4e5f60718"), 32, 8);
    SignedGraph sb = sign_from_bits(big, ok);
    CHECK(sb.signing.signs.size() == 28);
}

TEST_CASE("spectrum union on Petersen and on fuzzed pairs") {
    Multigraph petersen = fixtures::petersen();
    SignedGraph sg = sign_from_bits(petersen, SignSource::uniform_hash(parse_hex_seed("31")));
    CHECK(verify_spectrum_union(sg, 1e-8));

    for (std::uint64_t t = 0; t < 25; ++t) {
        SignedGraph fuzz = random_signed(10 + 2 * (t % 8), 3, t);
        CHECK(verify_spectrum_union(fuzz, 1e-8));
    }
}

TEST_CASE("lift preserves regularity, simplicity, and bicycle radius") {
    for (std::uint64_t t = 0; t < 15; ++t) {
        SignedGraph sg = random_signed(16, 3, 100 + t);
        Multigraph lifted = two_lift(sg);
        CHECK(lifted.vertex_count() == 2 * sg.graph.vertex_count());
        CHECK(lifted.regular());
        CHECK(lifted.degree() == 3);
        if (sg.graph.is_simple()) CHECK(lifted.is_simple());

        const std::uint32_t cap = default_radius_cap(sg.graph);
        const int base_rad = bicycle_free_radius(sg.graph, cap);
        const int lift_rad = bicycle_free_radius(lifted, cap);
        if (base_rad >= 0) CHECK(lift_rad >= base_rad);
    }
}

TEST_CASE("the deck transformation is an automorphism") {
    SignedGraph sg = random_signed(12, 3, 777);
    Multigraph lifted = two_lift(sg);
    const std::uint32_t n = sg.graph.vertex_count();
    Eigen::MatrixXd a = adjacency_matrix(lifted);
    auto flip = [n](std::uint32_t v) { return v < n ? v + n : v - n; };
    for (std::uint32_t u = 0; u < 2 * n; ++u)
        for (std::uint32_t v = 0; v < 2 * n; ++v)
            CHECK(a(u, v) == a(flip(u), flip(v)));
}

TEST_CASE("lifted edge ids project back: id mod m, vertex ids: id mod n") {
    SignedGraph sg = random_signed(10, 3, 4242);
    const std::uint32_t n = sg.graph.vertex_count();
    const auto m = static_cast<std::uint32_t>(sg.graph.edge_count());
    Multigraph lifted = two_lift(sg);
    REQUIRE(lifted.edge_count() == 2 * m);
    for (std::uint32_t j = 0; j < 2 * m; ++j) {
        const Edge& le = lifted.edges()[j];
        const Edge& be = sg.graph.edges()[j % m];
        const std::uint32_t pu = le.u % n, pv = le.v % n;
        CHECK(((pu == be.u && pv == be.v) || (pu == be.v && pv == be.u)));
        // +1 edges join equal bits, -1 edges opposite bits
        const bool same_bit = (le.u / n) == (le.v / n);
        CHECK(same_bit == (sg.sign(j % m) > 0));
    }
}

TEST_CASE("lifting loops keeps the degree convention") {
    // one loop at each endpoint of a connecting double edge, 4-regular
    const std::vector<Edge> edges = {{0, 0}, {1, 1}, {0, 1}, {0, 1}};
    Multigraph g = Multigraph::from_edges(2, edges);
    SignedGraph plus = sign_all(g, +1);
    Multigraph lifted_plus = two_lift(plus);
    CHECK(lifted_plus.regular());
    CHECK(lifted_plus.degree() == 4);
    CHECK(verify_spectrum_union(plus, 1e-8));

    SignedGraph minus = sign_all(g, -1);
    Multigraph lifted_minus = two_lift(minus);
    CHECK(lifted_minus.regular());
    CHECK(lifted_minus.degree() == 4);
    CHECK_FALSE(lifted_minus.has_loops());  // -1 loops become cross edges
    CHECK(verify_spectrum_union(minus, 1e-8));
}
