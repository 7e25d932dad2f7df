#pragma once

#include <cstdint>
#include <optional>

#include "ramlift/multigraph.hpp"
#include "ramlift/permutation.hpp"

namespace ramlift {

enum class GraphModel { configuration, lift_of_complete };

struct ModelSpec {
    GraphModel model = GraphModel::configuration;
    std::uint32_t n = 0;       // vertex count; for the lift model (d+1)*n_lift
    std::uint32_t d = 3;
    SeedBytes seed;
    PermutationFamily::Mode perm_mode = PermutationFamily::Mode::shuffled;

    std::uint32_t lift_blocks() const;  // n_lift, requires (d+1) | n
};

// Configuration model: matching pairs pi(2j) <-> pi(2j+1); edge j is the j-th
// matched pair, so an edge id is recoverable from the permutation alone.
Multigraph sample_configuration(std::uint32_t n, std::uint32_t d,
                                const PermutationFamily& pi);
Multigraph sample_configuration(std::uint32_t n, std::uint32_t d,
                                const SeedBytes& seed,
                                PermutationFamily::Mode mode = PermutationFamily::Mode::shuffled);

// Random n_lift-lift of K_{d+1}: vertex (u, i) has id u + (d+1)*i, and the
// i-th instance of base edge (u, v) joins (u, i) to (v, pi_uv(i)) with edge
// id index(u,v)*n_lift + i.  pi_vu = pi_uv^{-1} by construction.
Multigraph sample_lift_of_complete(std::uint32_t d, std::uint32_t n_lift,
                                   std::span<const PermutationFamily> perms);
Multigraph sample_lift_of_complete(std::uint32_t d, std::uint32_t n_lift,
                                   const SeedBytes& seed,
                                   PermutationFamily::Mode mode = PermutationFamily::Mode::shuffled);

// Shared seed-derivation helpers (the neighbor oracle reproduces these).
PermutationFamily configuration_family(const SeedBytes& seed, std::uint32_t n,
                                       std::uint32_t d, PermutationFamily::Mode mode);
std::vector<PermutationFamily> lift_families(const SeedBytes& seed, std::uint32_t d,
                                             std::uint32_t n_lift, PermutationFamily::Mode mode);

std::uint32_t complete_edge_count(std::uint32_t d);
std::uint32_t complete_edge_index(std::uint32_t d, std::uint32_t u, std::uint32_t v);

Multigraph sample(const ModelSpec& spec, std::uint64_t trial = 0);

// Rejection sampling until simple; empty when the retry cap is exhausted.
std::optional<Multigraph> sample_simple(const ModelSpec& spec, std::uint64_t trial = 0,
                                        int max_retries = 10000);

struct SimplicityEstimate {
    double rate = 0;
    double ci_halfwidth = 0;  // 1.96 * binomial standard error
    std::uint64_t trials = 0;
    std::uint64_t simple_count = 0;
};

SimplicityEstimate simplicity_rate(const ModelSpec& spec, std::uint64_t trials);

} // namespace ramlift
