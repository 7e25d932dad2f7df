#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramlift/models.hpp"
#include "ramlift/spectra.hpp"

namespace ramlift {

struct PipelineConfig {
    std::uint64_t N = 4096;
    std::uint32_t d = 3;
    double eps = 0.3;
    std::uint32_t n0 = 64;
    std::optional<std::uint32_t> t_override;
    GraphModel base_model = GraphModel::configuration;
    SeedBytes s1;
    SeedBytes s2;
    PermutationFamily::Mode perm_mode = PermutationFamily::Mode::shuffled;

    // signing stream: seeded hash by default, small-bias source on request
    bool small_bias_signs = false;
    unsigned bits_m = 64;
    unsigned bits_k = 64;

    std::uint32_t r0 = 1;  // base graph must be bicycle-free at this radius
    int max_base_attempts = 1000;
    int max_sign_attempts = 1;
    int dense_cap = 4096;
    double tol = 1e-6;

    bool fresh_seed_per_stage = false;  // ablation of the seed-reuse policy
    bool force_all_plus = false;        // exercises the disconnect failure path
    bool check_union_per_stage = false;
};

struct StageReport {
    std::uint32_t stage = 0;       // 1-based
    std::uint64_t vertices = 0;    // after this lift
    double rho_signed = 0;         // spectral radius of the signed predecessor
    int bicycle_radius = 0;        // of the lifted graph
    bool passed = false;
    bool rho_is_estimate = false;
    bool union_verified = false;
};

struct SeedRecord {
    std::string s1_hex;
    std::string s2_hex;
    int base_attempt = 0;
    int sign_attempt = 0;
};

struct BaseSearchResult {
    std::optional<Multigraph> graph;
    int attempts_used = 0;
    int attempt_index = -1;  // index of the accepted seed
    int bicycle_radius = 0;
    SpectralReport report;
};

// Iterates sub-seeds of s1 until a base graph passes simplicity (configuration
// model), bicycle-freeness at r0, and lambda <= 2 sqrt(d-1) + eps.
BaseSearchResult search_base(const PipelineConfig& cfg);

struct PipelineResult {
    bool success = false;
    Multigraph graph;
    std::vector<StageReport> stages;
    SpectralReport base_report;
    int base_bicycle_radius = 0;
    int base_attempt = -1;
    double final_lambda = 0;
    double threshold = 0;  // 2 sqrt(d-1) + eps
    std::uint32_t t = 0;
    std::uint64_t final_vertices = 0;
    SeedRecord seeds;
    int stage_failures = 0;
};

// Step 1 + Step 2: search a base graph from s1, then t 2-lifts whose signings
// all read prefixes of the single sign stream derived from s2.  A failed
// stage discards the attempt and re-derives the stream from the next s2
// sub-seed.
PipelineResult run_pipeline(const PipelineConfig& cfg);

std::uint32_t pipeline_stage_count(std::uint64_t N, std::uint32_t n0);

struct AugmentResult {
    Multigraph graph;
    double lambda_before = 0;
    double lambda_after = 0;
    std::uint32_t added = 0;
};

// Adds `count` seeded-random perfect matchings to a regular graph on an even
// number of vertices; lambda grows by at most 1 per matching.
AugmentResult augment_with_matchings(const Multigraph& g, std::uint32_t count,
                                     const SeedBytes& seed);

} // namespace ramlift
