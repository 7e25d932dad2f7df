#include "ramlift/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "ramlift/structure.hpp"

namespace ramlift {

namespace {

SignSource make_sign_source(const PipelineConfig& cfg, const SeedBytes& seed) {
    if (cfg.small_bias_signs) return SignSource::small_bias(seed, cfg.bits_m, cfg.bits_k);
    return SignSource::uniform_hash(seed);
}

double threshold_of(const PipelineConfig& cfg) {
    return 2.0 * std::sqrt(static_cast<double>(cfg.d) - 1.0) + cfg.eps;
}

} // namespace

std::uint32_t pipeline_stage_count(std::uint64_t N, std::uint32_t n0) {
    if (n0 == 0) throw std::invalid_argument("n0 must be positive");
    std::uint32_t t = 0;
    std::uint64_t size = n0;
    while (size < N) {
        size *= 2;
        ++t;
    }
    return t;
}

BaseSearchResult search_base(const PipelineConfig& cfg) {
    if (cfg.n0 % 2 != 0) throw std::invalid_argument("n0 must be even");
    if (cfg.d < 3) throw std::invalid_argument("degree must be at least 3");
    if (cfg.base_model == GraphModel::lift_of_complete && cfg.n0 % (cfg.d + 1) != 0)
        throw std::invalid_argument("lift-of-complete base needs (d+1) | n0");

    const double rho = threshold_of(cfg);
    BaseSearchResult result;
    SpectraOptions opt;
    opt.dense_cap = cfg.dense_cap;
    opt.tolerance = cfg.tol;
    opt.eps = cfg.eps;

    for (int attempt = 0; attempt < cfg.max_base_attempts; ++attempt) {
        ++result.attempts_used;
        const SeedBytes attempt_seed = derive_seed(cfg.s1, "base", attempt);
        Multigraph g =
            cfg.base_model == GraphModel::configuration
                ? sample_configuration(cfg.n0, cfg.d, attempt_seed, cfg.perm_mode)
                : sample_lift_of_complete(cfg.d, cfg.n0 / (cfg.d + 1), attempt_seed, cfg.perm_mode);
        if (cfg.base_model == GraphModel::configuration && !g.is_simple()) continue;
        const int radius = bicycle_free_radius(g);
        if (radius < static_cast<int>(cfg.r0)) continue;
        if (!decide_threshold(g, rho, cfg.tol, cfg.dense_cap)) continue;
        result.graph = std::move(g);
        result.attempt_index = attempt;
        result.bicycle_radius = radius;
        result.report = spectral_report(*result.graph, opt);
        return result;
    }
    return result;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    PipelineResult result;
    result.threshold = threshold_of(cfg);
    result.t = cfg.t_override ? *cfg.t_override : pipeline_stage_count(cfg.N, cfg.n0);
    if (!cfg.t_override) {
        const std::uint64_t final_size = static_cast<std::uint64_t>(cfg.n0) << result.t;
        if (final_size > 2 * cfg.N)
            throw std::invalid_argument("n0 2^t overshoots 2N; pick a smaller n0");
    }

    BaseSearchResult base = search_base(cfg);
    if (!base.graph)
        throw std::runtime_error("base search exhausted " +
                                 std::to_string(base.attempts_used) + " seeds");
    result.base_report = base.report;
    result.base_bicycle_radius = base.bicycle_radius;
    result.base_attempt = base.attempt_index;
    result.seeds.s1_hex = seed_to_hex(cfg.s1);
    result.seeds.s2_hex = seed_to_hex(cfg.s2);
    result.seeds.base_attempt = base.attempt_index;

    const double base_lambda = base.report.lambda;

    for (int sign_attempt = 0; sign_attempt < cfg.max_sign_attempts; ++sign_attempt) {
        const SeedBytes stream_seed = derive_seed(cfg.s2, "signs", sign_attempt);
        const SignSource shared = make_sign_source(cfg, stream_seed);

        Multigraph g = *base.graph;
        std::vector<StageReport> stages;
        double worst = base_lambda;
        bool all_passed = true;

        for (std::uint32_t stage = 1; stage <= result.t; ++stage) {
            SignedGraph sg =
                cfg.force_all_plus
                    ? sign_all(g, +1)
                    : sign_from_bits(g, cfg.fresh_seed_per_stage
                                            ? make_sign_source(
                                                  cfg, derive_seed(stream_seed, "stage", stage))
                                            : shared);

            StageReport rep;
            rep.stage = stage;
            if (static_cast<int>(sg.graph.vertex_count()) <= cfg.dense_cap) {
                rep.rho_signed = spectral_radius_of(adjacency_spectrum(sg));
            } else {
                const IterativeExtremes it = iterative_extremes(sg);
                rep.rho_signed = std::max(std::abs(it.lambda_max), std::abs(it.lambda_min));
                rep.rho_is_estimate = true;
            }
            rep.passed = rep.rho_signed <= result.threshold + cfg.tol;

            Multigraph lifted = two_lift(sg);
            rep.vertices = lifted.vertex_count();
            rep.bicycle_radius = bicycle_free_radius(lifted);
            if (cfg.check_union_per_stage)
                rep.union_verified = verify_spectrum_union(sg, 1e-8);
            stages.push_back(rep);

            if (!rep.passed) {
                ++result.stage_failures;
                all_passed = false;
                break;
            }
            worst = std::max(worst, rep.rho_signed);
            g = std::move(lifted);
        }

        result.stages = std::move(stages);
        if (all_passed) {
            result.success = true;
            result.graph = std::move(g);
            result.final_lambda = worst;
            result.final_vertices = result.graph.vertex_count();
            result.seeds.sign_attempt = sign_attempt;
            return result;
        }
    }

    // Every signing attempt failed some stage; report the base graph.
    result.graph = *base.graph;
    result.final_lambda = base_lambda;
    result.final_vertices = result.graph.vertex_count();
    result.seeds.sign_attempt = cfg.max_sign_attempts;
    return result;
}

AugmentResult augment_with_matchings(const Multigraph& g, std::uint32_t count,
                                     const SeedBytes& seed) {
    if (!g.regular()) throw std::invalid_argument("augmentation needs a regular graph");
    if (g.vertex_count() % 2 != 0)
        throw std::invalid_argument("no perfect matching on an odd vertex count");

    AugmentResult out;
    out.added = count;
    out.lambda_before = lambda_nontrivial(adjacency_spectrum(g));

    std::vector<Edge> edges = g.edges();
    const std::uint32_t n = g.vertex_count();
    for (std::uint32_t j = 0; j < count; ++j) {
        const PermutationFamily shuffle(derive_seed(seed, "matching", j), n,
                                        PermutationFamily::Mode::shuffled);
        for (std::uint32_t i = 0; i < n; i += 2) {
            const auto a = static_cast<std::uint32_t>(shuffle.forward(i));
            const auto b = static_cast<std::uint32_t>(shuffle.forward(i + 1));
            edges.push_back({a, b});
        }
    }
    out.graph = Multigraph::from_edges(n, edges);
    out.lambda_after = lambda_nontrivial(adjacency_spectrum(out.graph));
    return out;
}

} // namespace ramlift
