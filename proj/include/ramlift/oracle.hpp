#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramlift/pipeline.hpp"

namespace ramlift {

// Vertex of the stage-t pipeline graph as (base vertex, block coordinate,
// lift bits).  Integer id = id0 + n0 * x where id0 encodes (v, a) in the base
// graph and bit s-1 of x is the stage-s copy bit.
struct LiftedVertexLabel {
    std::uint32_t base_vertex = 0;  // v: K_{d+1} vertex (lift model) or [n0] (configuration)
    std::uint32_t copy = 0;         // a: block coordinate (0 in the configuration model)
    std::uint64_t lift_bits = 0;    // x
};

struct OracleConfig {
    GraphModel base_model = GraphModel::configuration;
    std::uint32_t n0 = 64;
    std::uint32_t d = 3;
    std::uint32_t t = 0;
    PermutationFamily::Mode perm_mode = PermutationFamily::Mode::shuffled;
    SeedBytes base_seed;  // resolved sub-seed the accepted base was sampled from
    SeedBytes sign_seed;  // resolved sub-seed of the accepted sign stream
    bool small_bias_signs = false;
    unsigned bits_m = 64;
    unsigned bits_k = 64;
    bool fresh_seed_per_stage = false;

    static OracleConfig from_pipeline(const PipelineConfig& cfg, const PipelineResult& result);
};

// Answers adjacency queries on the final pipeline graph straight from the
// seeds: the base graph's neighbors come from per-index permutation
// evaluation, and each lift stage resolves one copy bit per neighbor from
// the stage sign of the connecting edge (+1 keeps the bit, -1 flips it).
// Nothing larger than the base permutation state is ever materialized.
class NeighborOracle {
public:
    explicit NeighborOracle(OracleConfig cfg);

    std::uint64_t vertex_count() const { return static_cast<std::uint64_t>(cfg_.n0) << cfg_.t; }
    std::uint32_t degree() const { return cfg_.d; }

    LiftedVertexLabel decode(std::uint64_t id) const;
    std::uint64_t encode(const LiftedVertexLabel& label) const;

    std::vector<std::uint64_t> neighbors(std::uint64_t id) const;
    std::uint64_t neighbor_by_port(std::uint64_t id, std::uint32_t port) const;

private:
    struct Entry {
        std::uint64_t vertex;
        std::uint64_t edge;
    };
    std::vector<Entry> base_neighbors(std::uint32_t v0) const;
    int stage_sign(std::uint32_t stage, std::uint64_t edge_id) const;

    OracleConfig cfg_;
    std::optional<PermutationFamily> config_pi_;
    std::vector<PermutationFamily> lift_pis_;
    std::optional<SignSource> shared_signs_;
    std::vector<SignSource> stage_signs_;
};

} // namespace ramlift
