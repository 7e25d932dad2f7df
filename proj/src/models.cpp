#include "ramlift/models.hpp"

#include <cmath>
#include <stdexcept>

namespace ramlift {

std::uint32_t ModelSpec::lift_blocks() const {
    if (model != GraphModel::lift_of_complete)
        throw std::logic_error("lift_blocks only applies to the lift model");
    if (n % (d + 1) != 0)
        throw std::invalid_argument("lift model needs (d+1) | n");
    return n / (d + 1);
}

Multigraph sample_configuration(std::uint32_t n, std::uint32_t d,
                                const PermutationFamily& pi) {
    const std::uint64_t total = static_cast<std::uint64_t>(n) * d;
    if (total % 2 != 0) throw std::invalid_argument("n*d must be even");
    if (pi.domain() != total) throw std::invalid_argument("permutation domain must be n*d");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(total / 2);
    for (std::uint64_t j = 0; 2 * j < total; ++j)
        pairs.emplace_back(static_cast<std::uint32_t>(pi.forward(2 * j)),
                           static_cast<std::uint32_t>(pi.forward(2 * j + 1)));
    return Multigraph::from_pairs(n, d, pairs);
}

PermutationFamily configuration_family(const SeedBytes& seed, std::uint32_t n,
                                       std::uint32_t d, PermutationFamily::Mode mode) {
    return PermutationFamily(derive_seed(seed, "config-perm"),
                             static_cast<std::uint64_t>(n) * d, mode);
}

Multigraph sample_configuration(std::uint32_t n, std::uint32_t d, const SeedBytes& seed,
                                PermutationFamily::Mode mode) {
    return sample_configuration(n, d, configuration_family(seed, n, d, mode));
}

std::uint32_t complete_edge_count(std::uint32_t d) { return (d + 1) * d / 2; }

std::uint32_t complete_edge_index(std::uint32_t d, std::uint32_t u, std::uint32_t v) {
    if (u >= v || v > d) throw std::invalid_argument("need 0 <= u < v <= d");
    // edges of K_{d+1} in lexicographic (u, v) order
    return u * (d + 1) - u * (u + 1) / 2 + (v - u - 1);
}

std::vector<PermutationFamily> lift_families(const SeedBytes& seed, std::uint32_t d,
                                             std::uint32_t n_lift,
                                             PermutationFamily::Mode mode) {
    std::vector<PermutationFamily> out;
    const std::uint32_t count = complete_edge_count(d);
    out.reserve(count);
    for (std::uint32_t idx = 0; idx < count; ++idx)
        out.emplace_back(derive_seed(seed, "lift-perm", idx), n_lift, mode);
    return out;
}

Multigraph sample_lift_of_complete(std::uint32_t d, std::uint32_t n_lift,
                                   std::span<const PermutationFamily> perms) {
    if (n_lift < 1) throw std::invalid_argument("n_lift must be at least 1");
    if (perms.size() != complete_edge_count(d))
        throw std::invalid_argument("need d(d+1)/2 permutations");
    for (const auto& p : perms)
        if (p.domain() != n_lift) throw std::invalid_argument("permutation domain must be n_lift");

    const std::uint32_t base = d + 1;
    auto vid = [base](std::uint32_t u, std::uint32_t i) { return u + base * i; };
    // port of the edge towards w, as seen from u
    auto port = [](std::uint32_t u, std::uint32_t w) { return w < u ? w : w - 1; };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(complete_edge_count(d)) * n_lift);
    for (std::uint32_t u = 0; u < base; ++u) {
        for (std::uint32_t v = u + 1; v < base; ++v) {
            const PermutationFamily& pi = perms[complete_edge_index(d, u, v)];
            for (std::uint32_t i = 0; i < n_lift; ++i) {
                const auto j = static_cast<std::uint32_t>(pi.forward(i));
                pairs.emplace_back(vid(u, i) * d + port(u, v),
                                   vid(v, j) * d + port(v, u));
            }
        }
    }
    return Multigraph::from_pairs(base * n_lift, d, pairs);
}

Multigraph sample_lift_of_complete(std::uint32_t d, std::uint32_t n_lift,
                                   const SeedBytes& seed, PermutationFamily::Mode mode) {
    return sample_lift_of_complete(d, n_lift, lift_families(seed, d, n_lift, mode));
}

Multigraph sample(const ModelSpec& spec, std::uint64_t trial) {
    const SeedBytes trial_seed = derive_seed(spec.seed, "trial", trial);
    if (spec.model == GraphModel::configuration)
        return sample_configuration(spec.n, spec.d, trial_seed, spec.perm_mode);
    return sample_lift_of_complete(spec.d, spec.lift_blocks(), trial_seed, spec.perm_mode);
}

std::optional<Multigraph> sample_simple(const ModelSpec& spec, std::uint64_t trial,
                                        int max_retries) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Multigraph g = sample(spec, trial * 0x10000ull + attempt);
        if (g.is_simple()) return g;
    }
    return std::nullopt;
}

SimplicityEstimate simplicity_rate(const ModelSpec& spec, std::uint64_t trials) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    SimplicityEstimate est;
    est.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t)
        if (sample(spec, t).is_simple()) ++est.simple_count;
    est.rate = static_cast<double>(est.simple_count) / static_cast<double>(trials);
    est.ci_halfwidth = 1.96 * std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(trials));
    return est;
}

} // namespace ramlift
