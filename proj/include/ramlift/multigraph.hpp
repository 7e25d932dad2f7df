#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ramlift {

struct HalfEdge {
    std::uint32_t vertex;
    std::uint32_t port;
};

// Undirected edge, stored with u <= v.
struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    bool operator==(const Edge&) const = default;
};

// Directed edge index: 2*edge_id + orientation, where orientation 0 runs
// from the stored u endpoint to v.  Reversal is an involution.
using DirectedEdgeId = std::uint32_t;
inline DirectedEdgeId reverse_edge(DirectedEdgeId e) { return e ^ 1u; }

inline std::int64_t subgraph_excess(std::uint64_t vertices, std::uint64_t edges) {
    return static_cast<std::int64_t>(edges) - static_cast<std::int64_t>(vertices);
}

// Multigraph stored as a fixed-point-free involution ("matching") on
// half-edges.  Half-edge h belongs to vertex owner(h); vertex v owns the
// contiguous block [offset(v), offset(v+1)) and its ports index into it.
// Loops pair two half-edges of the same vertex and contribute degree 2.
// The undirected edge list carries one entry per matched pair; edge ids are
// assigned by the constructing operation and are the indices every signing,
// non-backtracking row, and sign-stream lookup refers to.
class Multigraph {
public:
    Multigraph() = default;  // empty graph

    // d-regular graph from an involution on n*d half-edges; edges ordered by
    // their smaller half-edge index.
    static Multigraph from_matching(std::uint32_t n, std::uint32_t d,
                                    std::span<const std::uint32_t> matching);

    // d-regular graph from an explicit list of matched half-edge pairs; edge
    // ids follow the pair order (the configuration model uses this).
    static Multigraph from_pairs(std::uint32_t n, std::uint32_t d,
                                 std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);

    // Arbitrary multigraph from an edge list; endpoints may come in either
    // order, edge ids follow the list order, ports are assigned in list order.
    static Multigraph from_edges(std::uint32_t n, std::span<const Edge> edges);

    std::uint32_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t half_edge_count() const { return matching_.size(); }

    bool regular() const { return degree_ >= 0; }
    std::uint32_t degree() const;
    std::uint32_t degree_of(std::uint32_t v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    const std::vector<Edge>& edges() const { return edges_; }
    std::int64_t excess() const {
        return subgraph_excess(n_, edges_.size());
    }
    bool is_simple() const;

    // half-edge layer
    std::uint32_t half_edge(std::uint32_t v, std::uint32_t port) const {
        return static_cast<std::uint32_t>(offsets_[v] + port);
    }
    HalfEdge half_edge_at(std::uint32_t h) const { return {owner_[h], port_of(h)}; }
    std::uint32_t owner(std::uint32_t h) const { return owner_[h]; }
    std::uint32_t matching_partner(std::uint32_t h) const { return matching_[h]; }
    std::span<const std::uint32_t> matching() const { return matching_; }
    std::uint32_t edge_of_half(std::uint32_t h) const { return half_to_edge_[h]; }

    std::uint32_t neighbor_by_port(std::uint32_t v, std::uint32_t port) const {
        return owner_[matching_[half_edge(v, port)]];
    }

    // Edge ids incident to v, one per port.
    std::span<const std::uint32_t> incident(std::uint32_t v) const {
        return {half_to_edge_.data() + offsets_[v], degree_of(v)};
    }

    // directed-edge layer
    std::uint32_t directed_edge_count() const { return static_cast<std::uint32_t>(2 * edges_.size()); }
    std::uint32_t de_tail(DirectedEdgeId de) const {
        const Edge& e = edges_[de >> 1];
        return (de & 1) ? e.v : e.u;
    }
    std::uint32_t de_head(DirectedEdgeId de) const {
        const Edge& e = edges_[de >> 1];
        return (de & 1) ? e.u : e.v;
    }

    // Half-edges of an edge on its stored u / v side.
    std::uint32_t edge_half_u(std::uint32_t eid) const { return ehu_[eid]; }
    std::uint32_t edge_half_v(std::uint32_t eid) const { return ehv_[eid]; }

    bool has_loops() const;

private:
    void build_from_pairs(std::uint32_t n, std::span<const std::uint64_t> offsets,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);
    std::uint32_t port_of(std::uint32_t h) const { return static_cast<std::uint32_t>(h - offsets_[owner_[h]]); }

    std::uint32_t n_ = 0;
    int degree_ = -1;  // uniform degree, or -1 when irregular
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint32_t> owner_;
    std::vector<std::uint32_t> matching_;
    std::vector<std::uint32_t> half_to_edge_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> ehu_, ehv_;

    friend Multigraph lift_multigraph(const Multigraph&, const std::vector<std::int8_t>&);
};

} // namespace ramlift
