#include "ramlift/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace ramlift {

namespace {

// Reusable BFS scratch; `stamp[v] == epoch` marks ball membership.
struct BallScratch {
    std::vector<std::uint32_t> stamp;
    std::vector<std::uint32_t> dist;
    std::uint32_t epoch = 0;
};

std::vector<std::uint32_t> ball_vertices(const Multigraph& g, std::uint32_t root,
                                         std::uint32_t r, BallScratch& scratch) {
    if (scratch.stamp.size() != g.vertex_count()) {
        scratch.stamp.assign(g.vertex_count(), 0);
        scratch.dist.assign(g.vertex_count(), 0);
        scratch.epoch = 0;
    }
    const std::uint32_t epoch = ++scratch.epoch;
    std::vector<std::uint32_t> order;
    order.push_back(root);
    scratch.stamp[root] = epoch;
    scratch.dist[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::uint32_t v = order[head];
        if (scratch.dist[v] == r) continue;
        for (std::uint32_t eid : g.incident(v)) {
            const Edge& e = g.edges()[eid];
            const std::uint32_t w = e.u == v ? e.v : e.u;
            if (scratch.stamp[w] != epoch) {
                scratch.stamp[w] = epoch;
                scratch.dist[w] = scratch.dist[v] + 1;
                order.push_back(w);
            }
        }
    }
    return order;
}

NeighborhoodReport ball_report(const Multigraph& g, std::uint32_t root, std::uint32_t r,
                               BallScratch& scratch) {
    const std::vector<std::uint32_t> ball = ball_vertices(g, root, r, scratch);
    const std::uint32_t epoch = scratch.epoch;

    // Each non-loop edge has one half-edge at each endpoint, so counting from
    // the stored u side sees it once; a loop has both half-edges at its vertex
    // and is seen twice.
    std::uint64_t edges = 0;
    std::uint64_t loop_halves = 0;
    for (std::uint32_t v : ball) {
        for (std::uint32_t eid : g.incident(v)) {
            const Edge& e = g.edges()[eid];
            if (e.u == e.v) {
                ++loop_halves;
            } else if (e.u == v && scratch.stamp[e.v] == epoch) {
                ++edges;
            }
        }
    }
    edges += loop_halves / 2;

    NeighborhoodReport rep;
    rep.root = root;
    rep.radius = r;
    rep.vertices = ball.size();
    rep.edges = edges;
    rep.excess = subgraph_excess(rep.vertices, rep.edges);
    rep.classification = rep.excess <= -1  ? NeighborhoodClass::acyclic
                         : rep.excess == 0 ? NeighborhoodClass::unicyclic
                                           : NeighborhoodClass::bicyclic_or_worse;
    return rep;
}

} // namespace

NeighborhoodReport neighborhood(const Multigraph& g, std::uint32_t root, std::uint32_t r) {
    if (root >= g.vertex_count()) throw std::out_of_range("root vertex out of range");
    BallScratch scratch;
    return ball_report(g, root, r, scratch);
}

bool is_bicycle_free_at(const Multigraph& g, std::uint32_t r) {
    BallScratch scratch;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (ball_report(g, v, r, scratch).excess > 0) return false;
    return true;
}

std::uint32_t default_radius_cap(const Multigraph& g) {
    const double n = std::max<double>(2.0, g.vertex_count());
    double base = 2.0;
    if (g.regular() && g.degree() >= 3) base = static_cast<double>(g.degree()) - 1.0;
    return static_cast<std::uint32_t>(std::ceil(2.0 * std::log(n) / std::log(base))) + 2;
}

int bicycle_free_radius(const Multigraph& g, std::uint32_t cap) {
    // A graph whose components each hold at most one cycle is bicycle-free at
    // every radius; skip the scan entirely.
    {
        std::vector<std::uint32_t> comp(g.vertex_count(), 0);
        std::uint32_t ncomp = 0;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            if (comp[v] != 0) continue;
            ++ncomp;
            std::deque<std::uint32_t> queue{v};
            comp[v] = ncomp;
            while (!queue.empty()) {
                const std::uint32_t x = queue.front();
                queue.pop_front();
                for (std::uint32_t eid : g.incident(x)) {
                    const Edge& e = g.edges()[eid];
                    const std::uint32_t w = e.u == x ? e.v : e.u;
                    if (comp[w] == 0) {
                        comp[w] = ncomp;
                        queue.push_back(w);
                    }
                }
            }
        }
        std::vector<std::int64_t> balance(ncomp, 0);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) --balance[comp[v] - 1];
        for (const Edge& e : g.edges()) ++balance[comp[e.u] - 1];
        if (std::all_of(balance.begin(), balance.end(),
                        [](std::int64_t b) { return b <= 0; }))
            return static_cast<int>(cap);
    }

    if (!is_bicycle_free_at(g, 0)) return -1;
    for (std::uint32_t r = 1; r <= cap; ++r)
        if (!is_bicycle_free_at(g, r)) return static_cast<int>(r) - 1;
    return static_cast<int>(cap);
}

int bicycle_free_radius(const Multigraph& g) {
    return bicycle_free_radius(g, default_radius_cap(g));
}

namespace {

// Paths grow only through vertices larger than the root, so the root is the
// cycle minimum; the reflection with second vertex < last vertex is kept.
void dfs_cycles(const Multigraph& g, std::uint32_t root, std::uint32_t cap,
                std::vector<std::uint32_t>& pv, std::vector<std::uint32_t>& pe,
                std::vector<char>& on_path, std::vector<Cycle>& out, std::uint64_t& budget) {
    const std::uint32_t v = pv.back();
    for (std::uint32_t eid : g.incident(v)) {
        if (budget == 0) throw std::runtime_error("cycle enumeration budget exceeded");
        --budget;
        const Edge& e = g.edges()[eid];
        if (e.u == e.v) continue;  // loops are length-1 cycles, handled separately
        const std::uint32_t w = e.u == v ? e.v : e.u;
        if (!pe.empty() && eid == pe.back()) continue;
        if (w == root) {
            if (pv.size() >= 3 && pv[1] < pv.back()) {
                Cycle c;
                c.vertices = pv;
                c.edge_ids = pe;
                c.edge_ids.push_back(eid);
                out.push_back(std::move(c));
            }
            continue;
        }
        if (w < root || on_path[w]) continue;
        if (pv.size() >= cap) continue;  // closing later would exceed the cap
        pv.push_back(w);
        pe.push_back(eid);
        on_path[w] = 1;
        dfs_cycles(g, root, cap, pv, pe, on_path, out, budget);
        on_path[w] = 0;
        pe.pop_back();
        pv.pop_back();
    }
}

} // namespace

std::vector<Cycle> enumerate_short_cycles(const Multigraph& g, std::uint32_t length_cap,
                                          std::uint64_t budget) {
    std::vector<Cycle> out;

    if (length_cap >= 1) {
        for (std::uint32_t eid = 0; eid < g.edge_count(); ++eid) {
            const Edge& e = g.edges()[eid];
            if (e.u == e.v) out.push_back({{e.u}, {eid}});
        }
    }
    if (length_cap >= 2) {
        for (std::uint32_t a = 0; a < g.edge_count(); ++a) {
            const Edge& ea = g.edges()[a];
            if (ea.u == ea.v) continue;
            for (std::uint32_t b = a + 1; b < g.edge_count(); ++b) {
                const Edge& eb = g.edges()[b];
                if (ea.u == eb.u && ea.v == eb.v)
                    out.push_back({{ea.u, ea.v}, {a, b}});
            }
        }
    }
    if (length_cap >= 3) {
        std::vector<std::uint32_t> pv, pe;
        std::vector<char> on_path(g.vertex_count(), 0);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            pv.assign(1, v);
            pe.clear();
            std::fill(on_path.begin(), on_path.end(), 0);
            on_path[v] = 1;
            dfs_cycles(g, v, length_cap, pv, pe, on_path, out, budget);
        }
    }
    return out;
}

ExcessBoundResult check_excess_bound(const Multigraph& h, std::uint32_t r) {
    const double v = static_cast<double>(h.vertex_count());
    if (v < 1) return ExcessBoundResult::inapplicable;
    if (static_cast<double>(r) < 10.0 * std::log(v)) return ExcessBoundResult::inapplicable;
    if (!is_bicycle_free_at(h, r)) return ExcessBoundResult::inapplicable;
    const double bound = std::log(std::exp(1.0) * v) / static_cast<double>(r) * v;
    return static_cast<double>(h.excess()) <= bound ? ExcessBoundResult::holds
                                                    : ExcessBoundResult::violated;
}

} // namespace ramlift
