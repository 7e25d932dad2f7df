#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ramlift/lifts.hpp"

namespace ramlift {

// An ell-hike: a closed walk of exactly 2*ell directed-edge steps that is
// non-backtracking at every interior transition except possibly between
// steps ell and ell+1 (the turnaround); the wrap from the last step back to
// the first is unconstrained.  Backtracking reverses the same edge id, so a
// distinct parallel copy never backtracks.
struct Hike {
    std::vector<DirectedEdgeId> steps;
    std::uint32_t ell = 0;
};

bool hike_is_valid(const Multigraph& g, const Hike& h);
// every traversed edge is traversed an even number of times
bool hike_is_even(const Multigraph& g, const Hike& h);
// every traversed edge is traversed at least twice
bool hike_is_singleton_free(const Multigraph& g, const Hike& h);
// step ell+1 reverses step ell, and the last step reverses the first
bool hike_is_special(const Hike& h);

// Product of traversed edge signs, counted with multiplicity.
int hike_sign(const SignedGraph& sg, const Hike& h);

enum class HikeFilter { all, even, singleton_free, special, even_special };

struct HikeCount {
    std::uint64_t count = 0;
    bool complete = true;  // false when the step budget ran out
};

HikeCount enumerate_hikes(const Multigraph& g, std::uint32_t ell, HikeFilter filter,
                          const std::function<void(const Hike&)>& visit = nullptr,
                          std::uint64_t budget = 200'000'000);

// Exact check of the trace identity: averaging tr(B^ell (B^T)^ell) over all
// 2^|E| edge-signings equals the number of even special (ell+1)-hikes.
// Integer arithmetic throughout.
struct ExpectationCheck {
    std::int64_t signed_average = 0;
    std::int64_t even_special_hikes = 0;
    std::int64_t residual() const {
        const std::int64_t d = signed_average - even_special_hikes;
        return d < 0 ? -d : d;
    }
};

ExpectationCheck verify_expectation_identity(const Multigraph& g, std::uint32_t ell,
                                             std::size_t max_edges = 14);

enum class StepLabel : std::uint8_t { fresh, boundary, stale };

// Reveal-order classification: a step over an already-revealed edge is stale;
// otherwise it is fresh when it reaches an unvisited vertex and boundary when
// it closes into a visited one.  The start vertex counts as visited.
struct StepClassification {
    std::vector<StepLabel> labels;
    std::uint64_t fresh_count = 0;
    std::uint64_t boundary_count = 0;
    std::uint64_t stale_count = 0;
    std::int64_t traversed_excess = 0;  // exc(G_H)
    // maximal stale runs, split at the turnaround, subdivided to length <= r
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stretches;  // [begin, end)
    std::uint32_t stretch_limit = 0;
};

StepClassification classify_steps(const Multigraph& g, const Hike& h, std::uint32_t r);

struct BoundParams {
    std::uint64_t n = 0;
    std::uint32_t d = 3;
    std::uint32_t ell = 1;
    std::uint32_t r = 1;
    double eta = 0.01;
    double delta = 0;  // 0 = fully uniform signs
};

double epsilon1(const BoundParams& p);  // ln(n/eta) / ell
double epsilon2(const BoundParams& p);  // ln(d*ell) * ln(ell) / r

// Numeric envelopes with every unspecified constant set to 1; monitoring
// output, never a pass/fail criterion.
struct BoundEnvelope {
    double eps1 = 0;
    double eps2 = 0;
    double derand_term = 0;  // (delta n / eta)^(1/2 ell) * d
    double b_side = 0;       // sqrt(d-1) (1 + eps1 + eps2) + derand_term
    double a_side = 0;       // exact inversion of the B-to-A translation
};

BoundEnvelope evaluate_bound(const BoundParams& p);

} // namespace ramlift
