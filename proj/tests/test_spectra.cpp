#include <doctest.h>

#include <cmath>

#include "ramlift/models.hpp"
#include "ramlift/nb_matrix.hpp"
#include "ramlift/spectra.hpp"
#include "ramlift/test_fixtures.hpp"

using namespace ramlift;

TEST_CASE("closed-form spectra: K4 and C6") {
    const std::vector<double> k4 = adjacency_spectrum(fixtures::complete(4));
    const std::vector<double> k4_expect = {3, -1, -1, -1};
    REQUIRE(k4.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(k4[i] == doctest::Approx(k4_expect[i]).epsilon(1e-10));

    const std::vector<double> c6 = adjacency_spectrum(fixtures::cycle(6));
    const std::vector<double> c6_expect = {2, 1, 1, -1, -1, -2};
    REQUIRE(c6.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(c6[i] == doctest::Approx(c6_expect[i]).epsilon(1e-10));
}

TEST_CASE("Petersen: lambda1 = 3, lambda = 2, verdict ramanujan") {
    Multigraph g = fixtures::petersen();
    SpectraOptions opt;
    const SpectralReport rep = spectral_report(g, opt);
    CHECK(rep.lambda1 == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(rep.lambda == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(rep.threshold == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.verdict == Verdict::ramanujan);
    CHECK_FALSE(rep.estimate);
}

TEST_CASE("decide_threshold examples") {
    Multigraph petersen = fixtures::petersen();
    CHECK(decide_threshold(petersen, 2.0 * std::sqrt(2.0)));
    CHECK_FALSE(decide_threshold(petersen, 1.9));

    Multigraph two_k4 = fixtures::disjoint_union(fixtures::complete(4), fixtures::complete(4));
    CHECK_FALSE(decide_threshold(two_k4, 2.0 * std::sqrt(2.0)));  // lambda2 = 3
    CHECK(decide_threshold(two_k4, 3.0));
}

TEST_CASE("trivial eigenvalue d with the all-ones eigenvector") {
    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = 40;
    spec.d = 4;
    spec.seed = parse_hex_seed("88");
    Multigraph g = sample(spec);
    const std::vector<double> spectrum = adjacency_spectrum(g);
    CHECK(spectrum.front() == doctest::Approx(4.0).epsilon(1e-10));
    // A 1 = d 1 exactly by regularity
    Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(40);
    CHECK((a * ones - 4.0 * ones).norm() <= 1e-10);
    // spectrum lies in [-d, d]
    CHECK(spectrum.back() >= -4.0 - 1e-10);
}

TEST_CASE("signed spectra stay within [-d, d]") {
    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = 30;
    spec.d = 3;
    spec.seed = parse_hex_seed("99");
    for (std::uint64_t t = 0; t < 10; ++t) {
        SignedGraph sg = sign_from_bits(sample(spec, t),
                                        SignSource::uniform_hash(derive_seed(spec.seed, "s", t)));
        const std::vector<double> spectrum = adjacency_spectrum(sg);
        CHECK(spectrum.front() <= 3.0 + 1e-9);
        CHECK(spectrum.back() >= -3.0 - 1e-9);
    }
}

TEST_CASE("iterative and dense extremes agree to 1e-6") {
    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = 200;
    spec.d = 3;
    spec.seed = parse_hex_seed("aa");
    for (std::uint64_t t = 0; t < 3; ++t) {
        Multigraph g = sample(spec, t);
        const std::vector<double> dense = adjacency_spectrum(g);
        const IterativeExtremes it = iterative_extremes(g);
        CHECK(it.lambda_max == doctest::Approx(dense.front()).epsilon(1e-6));
        CHECK(it.lambda_min == doctest::Approx(dense.back()).epsilon(1e-6));
        CHECK(std::abs(it.lambda2 - dense[1]) <= 1e-6 * std::max(1.0, std::abs(dense[1])));
    }
}

TEST_CASE("dense cap forces flagged estimates that still match") {
    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = 120;
    spec.d = 3;
    spec.seed = parse_hex_seed("bb");
    Multigraph g = sample(spec);
    SpectraOptions opt;
    opt.dense_cap = 50;  // force the iterative path
    const SpectralReport est = spectral_report(g, opt);
    CHECK(est.estimate);
    opt.dense_cap = 4096;
    const SpectralReport exact = spectral_report(g, opt);
    CHECK(est.lambda == doctest::Approx(exact.lambda).epsilon(1e-6));
    CHECK(decide_threshold(g, exact.lambda + 0.01, 1e-6, 50));
}

TEST_CASE("nb spectral radius: trace bound dominates the exact value") {
    SignedGraph k4 = sign_all(fixtures::complete(4), +1);
    const NbRadiusEstimate est = nb_spectral_radius(k4, 12);
    REQUIRE(est.exact.has_value());
    CHECK(*est.exact == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(est.trace_bound >= *est.exact - 1e-9);

    SignedGraph c3 = sign_all(fixtures::cycle(3), +1);
    const NbRadiusEstimate c3est = nb_spectral_radius(c3, 8);
    REQUIRE(c3est.exact.has_value());
    CHECK(*c3est.exact == doctest::Approx(1.0).epsilon(1e-8));

    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = 16;
    spec.d = 3;
    spec.seed = parse_hex_seed("cc");
    for (std::uint64_t t = 0; t < 8; ++t) {
        Multigraph g = sample(spec, t);
        if (g.has_loops()) continue;
        SignedGraph sg = sign_from_bits(std::move(g),
                                        SignSource::uniform_hash(derive_seed(spec.seed, "s", t)));
        const NbRadiusEstimate est2 = nb_spectral_radius(sg, 10);
        REQUIRE(est2.exact.has_value());
        CHECK(est2.trace_bound >= *est2.exact - 1e-9);
    }
}

TEST_CASE("A-side magnitudes above 2 sqrt(q) appear on the B side as translated") {
    ModelSpec spec;
    spec.model = GraphModel::configuration;
    spec.n = 14;
    spec.d = 3;
    spec.seed = parse_hex_seed("dd");
    int checked = 0;
    for (std::uint64_t t = 0; t < 30 && checked < 8; ++t) {
        Multigraph g = sample(spec, t);
        if (g.has_loops()) continue;
        SignedGraph sg = sign_from_bits(std::move(g),
                                        SignSource::uniform_hash(derive_seed(spec.seed, "s", t)));
        const double rho_a = spectral_radius_of(adjacency_spectrum(sg));
        const double eps = rho_a - 2.0 * std::sqrt(2.0);
        if (eps < 1e-9) continue;
        ++checked;
        const NbRadiusEstimate est = nb_spectral_radius(sg, 8);
        REQUIRE(est.exact.has_value());
        CHECK(*est.exact >= translate_eigenvalue_bound(3, eps) - 1e-6);
    }
    CHECK(checked > 0);
}
