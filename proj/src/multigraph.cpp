#include "ramlift/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ramlift {

void Multigraph::build_from_pairs(std::uint32_t n, std::span<const std::uint64_t> offsets,
                                  std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
    n_ = n;
    offsets_.assign(offsets.begin(), offsets.end());
    const std::uint64_t total = offsets_.back();
    if (total != 2 * pairs.size())
        throw std::invalid_argument("half-edge count does not match pair list");
    if (total > (std::uint64_t{1} << 31))
        throw std::invalid_argument("graph too large for 32-bit half-edge indices");

    owner_.resize(total);
    for (std::uint32_t v = 0; v < n_; ++v)
        for (std::uint64_t h = offsets_[v]; h < offsets_[v + 1]; ++h)
            owner_[h] = v;

    matching_.assign(total, static_cast<std::uint32_t>(total));
    half_to_edge_.assign(total, 0);
    edges_.reserve(pairs.size());
    ehu_.reserve(pairs.size());
    ehv_.reserve(pairs.size());

    for (std::size_t eid = 0; eid < pairs.size(); ++eid) {
        const auto [h1, h2] = pairs[eid];
        if (h1 >= total || h2 >= total) throw std::invalid_argument("half-edge index out of range");
        if (h1 == h2) throw std::invalid_argument("matching has a fixed point");
        if (matching_[h1] != total || matching_[h2] != total)
            throw std::invalid_argument("half-edge matched twice");
        matching_[h1] = h2;
        matching_[h2] = h1;
        std::uint32_t a = owner_[h1], b = owner_[h2];
        std::uint32_t hu = h1, hv = h2;
        if (a > b) {
            std::swap(a, b);
            std::swap(hu, hv);
        }
        edges_.push_back({a, b});
        ehu_.push_back(hu);
        ehv_.push_back(hv);
        half_to_edge_[h1] = static_cast<std::uint32_t>(eid);
        half_to_edge_[h2] = static_cast<std::uint32_t>(eid);
    }

    degree_ = -1;
    if (n_ > 0) {
        const std::uint64_t d0 = offsets_[1] - offsets_[0];
        bool uniform = true;
        for (std::uint32_t v = 1; v < n_ && uniform; ++v)
            uniform = (offsets_[v + 1] - offsets_[v]) == d0;
        if (uniform) degree_ = static_cast<int>(d0);
    }
}

Multigraph Multigraph::from_matching(std::uint32_t n, std::uint32_t d,
                                     std::span<const std::uint32_t> matching) {
    const std::uint64_t total = static_cast<std::uint64_t>(n) * d;
    if (matching.size() != total)
        throw std::invalid_argument("matching size must equal n*d");
    if (total % 2 != 0) throw std::invalid_argument("n*d must be even");
    for (std::uint64_t h = 0; h < total; ++h) {
        if (matching[h] >= total) throw std::invalid_argument("matching value out of range");
        if (matching[h] == h) throw std::invalid_argument("matching has a fixed point");
        if (matching[matching[h]] != h) throw std::invalid_argument("matching is not an involution");
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(total / 2);
    for (std::uint32_t h = 0; h < total; ++h)
        if (h < matching[h]) pairs.emplace_back(h, matching[h]);
    return from_pairs(n, d, pairs);
}

Multigraph Multigraph::from_pairs(std::uint32_t n, std::uint32_t d,
                                  std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
    std::vector<std::uint64_t> offsets(n + 1);
    for (std::uint32_t v = 0; v <= n; ++v) offsets[v] = static_cast<std::uint64_t>(v) * d;
    Multigraph g;
    g.build_from_pairs(n, offsets, pairs);
    return g;
}

Multigraph Multigraph::from_edges(std::uint32_t n, std::span<const Edge> edges) {
    std::vector<std::uint64_t> offsets(n + 1, 0);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        offsets[e.u + 1] += 1;
        offsets[e.v + 1] += 1;
    }
    for (std::uint32_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

    std::vector<std::uint64_t> next(offsets.begin(), offsets.end() - 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) {
        const auto h1 = static_cast<std::uint32_t>(next[e.u]++);
        const auto h2 = static_cast<std::uint32_t>(next[e.v]++);
        pairs.emplace_back(h1, h2);
    }
    Multigraph g;
    g.build_from_pairs(n, offsets, pairs);
    return g;
}

std::uint32_t Multigraph::degree() const {
    if (degree_ < 0) throw std::logic_error("graph is not regular");
    return static_cast<std::uint32_t>(degree_);
}

bool Multigraph::is_simple() const {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
        if (e.u == e.v) return false;
        const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
        if (!seen.insert(key).second) return false;
    }
    return true;
}

bool Multigraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.u == e.v; });
}

} // namespace ramlift
