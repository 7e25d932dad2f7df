#pragma once

#include <cstdint>
#include <vector>

#include "ramlift/multigraph.hpp"

namespace ramlift {

enum class NeighborhoodClass { acyclic, unicyclic, bicyclic_or_worse };

struct NeighborhoodReport {
    std::uint32_t root = 0;
    std::uint32_t radius = 0;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;  // edges of the induced subgraph on the ball
    std::int64_t excess = 0;
    NeighborhoodClass classification = NeighborhoodClass::acyclic;
};

// Induced subgraph on the vertices within distance r of root (always
// connected); loops and parallel edges count as cycles of length 1 and 2.
NeighborhoodReport neighborhood(const Multigraph& g, std::uint32_t root, std::uint32_t r);

// Every distance-r neighborhood has excess <= 0.
bool is_bicycle_free_at(const Multigraph& g, std::uint32_t r);

// Search cap: ceil(2 log_{max(d-1,2)} n) + 2, since the radius never exceeds
// ~log_{d-1} n on graphs with more than one cycle.
std::uint32_t default_radius_cap(const Multigraph& g);

// Largest r <= cap with the graph bicycle-free at radius r; -1 if it already
// fails at radius 0 (two loops on one vertex).
int bicycle_free_radius(const Multigraph& g, std::uint32_t cap);
int bicycle_free_radius(const Multigraph& g);

struct Cycle {
    std::vector<std::uint32_t> vertices;  // one per step, rotation-canonical
    std::vector<std::uint32_t> edge_ids;
    std::uint32_t length() const { return static_cast<std::uint32_t>(edge_ids.size()); }
};

// All cycles of length <= length_cap, each reported once up to rotation and
// reflection.  Distinct parallel edges give distinct cycles.
std::vector<Cycle> enumerate_short_cycles(const Multigraph& g, std::uint32_t length_cap,
                                          std::uint64_t budget = 10'000'000);

enum class ExcessBoundResult { holds, violated, inapplicable };

// exc(H) <= (ln(e*v)/r) * v whenever H is bicycle-free at radius r >= 10 ln v.
ExcessBoundResult check_excess_bound(const Multigraph& h, std::uint32_t r);

} // namespace ramlift
