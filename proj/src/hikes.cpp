#include "ramlift/hikes.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "ramlift/nb_matrix.hpp"

namespace ramlift {

namespace {

std::unordered_map<std::uint32_t, std::uint32_t> edge_use_counts(const Hike& h) {
    std::unordered_map<std::uint32_t, std::uint32_t> counts;
    for (DirectedEdgeId de : h.steps) ++counts[de >> 1];
    return counts;
}

} // namespace

bool hike_is_valid(const Multigraph& g, const Hike& h) {
    const std::uint32_t len = 2 * h.ell;
    if (h.steps.size() != len || len == 0) return false;
    for (DirectedEdgeId de : h.steps)
        if (de >= g.directed_edge_count()) return false;
    for (std::uint32_t i = 0; i + 1 < len; ++i) {
        if (g.de_head(h.steps[i]) != g.de_tail(h.steps[i + 1])) return false;
        if (i + 1 != h.ell && h.steps[i + 1] == reverse_edge(h.steps[i])) return false;
    }
    return g.de_head(h.steps[len - 1]) == g.de_tail(h.steps[0]);
}

bool hike_is_even(const Multigraph&, const Hike& h) {
    for (const auto& [eid, c] : edge_use_counts(h))
        if (c % 2 != 0) return false;
    return true;
}

bool hike_is_singleton_free(const Multigraph&, const Hike& h) {
    for (const auto& [eid, c] : edge_use_counts(h))
        if (c < 2) return false;
    return true;
}

bool hike_is_special(const Hike& h) {
    const std::uint32_t len = 2 * h.ell;
    if (h.steps.size() != len || len == 0) return false;
    return h.steps[h.ell] == reverse_edge(h.steps[h.ell - 1]) &&
           h.steps[len - 1] == reverse_edge(h.steps[0]);
}

int hike_sign(const SignedGraph& sg, const Hike& h) {
    int s = 1;
    for (DirectedEdgeId de : h.steps) s *= sg.sign(de >> 1);
    return s;
}

namespace {

struct HikeEnumerator {
    const Multigraph& g;
    std::uint32_t ell;
    HikeFilter filter;
    const std::function<void(const Hike&)>& visit;
    std::uint64_t budget;
    HikeCount result;
    Hike current;

    bool passes_filter() const {
        switch (filter) {
            case HikeFilter::all: return true;
            case HikeFilter::even: return hike_is_even(g, current);
            case HikeFilter::singleton_free: return hike_is_singleton_free(g, current);
            case HikeFilter::special: return hike_is_special(current);
            case HikeFilter::even_special:
                return hike_is_special(current) && hike_is_even(g, current);
        }
        return false;
    }

    void extend(std::uint32_t pos) {
        if (!result.complete) return;
        const std::uint32_t len = 2 * ell;
        if (pos == len) {
            if (g.de_head(current.steps.back()) == g.de_tail(current.steps[0]) &&
                passes_filter()) {
                ++result.count;
                if (visit) visit(current);
            }
            return;
        }
        const DirectedEdgeId prev = current.steps[pos - 1];
        const std::uint32_t at = g.de_head(prev);
        for (std::uint32_t eid : g.incident(at)) {
            if (budget == 0) { result.complete = false; return; }
            --budget;
            const Edge& e = g.edges()[eid];
            const DirectedEdgeId f = 2 * eid + (e.u == at ? 0u : 1u);
            if (pos != ell && f == reverse_edge(prev)) continue;
            current.steps.push_back(f);
            extend(pos + 1);
            current.steps.pop_back();
        }
    }
};

} // namespace

HikeCount enumerate_hikes(const Multigraph& g, std::uint32_t ell, HikeFilter filter,
                          const std::function<void(const Hike&)>& visit,
                          std::uint64_t budget) {
    if (ell == 0) throw std::invalid_argument("ell must be at least 1");
    if (g.has_loops()) throw std::invalid_argument("hike enumeration needs a loopless graph");
    HikeEnumerator en{g, ell, filter, visit, budget, {}, {{}, ell}};
    en.current.steps.reserve(2 * ell);
    for (DirectedEdgeId s0 = 0; s0 < g.directed_edge_count(); ++s0) {
        en.current.steps.assign(1, s0);
        en.extend(1);
        if (!en.result.complete) break;
    }
    return en.result;
}

ExpectationCheck verify_expectation_identity(const Multigraph& g, std::uint32_t ell,
                                             std::size_t max_edges) {
    if (ell == 0) throw std::invalid_argument("ell must be at least 1");
    const std::size_t m = g.edge_count();
    if (m > max_edges)
        throw std::invalid_argument("too many edges for exhaustive signing enumeration");
    if (g.has_loops()) throw std::invalid_argument("needs a loopless graph");

    using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::MatrixXd bu_d = build_nb_matrix(g);
    const IMat bu = bu_d.cast<std::int64_t>();
    const auto dim = bu.rows();

    std::int64_t total = 0;
    IMat bw(dim, dim), power(dim, dim);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bw = bu;
        for (std::size_t j = 0; j < m; ++j) {
            if (mask & (std::uint64_t{1} << j)) {
                bw.col(2 * j) *= -1;
                bw.col(2 * j + 1) *= -1;
            }
        }
        power = bw;
        for (std::uint32_t step = 1; step < ell; ++step) power = bw * power;
        std::int64_t trace = 0;
        for (Eigen::Index c = 0; c < dim; ++c)
            for (Eigen::Index r = 0; r < dim; ++r) trace += power(r, c) * power(r, c);
        total += trace;
    }

    ExpectationCheck check;
    const std::uint64_t signings = std::uint64_t{1} << m;
    if (total % static_cast<std::int64_t>(signings) != 0)
        throw std::logic_error("signing average is not an integer");
    check.signed_average = total / static_cast<std::int64_t>(signings);
    check.even_special_hikes =
        static_cast<std::int64_t>(enumerate_hikes(g, ell + 1, HikeFilter::even_special).count);
    return check;
}

StepClassification classify_steps(const Multigraph& g, const Hike& h, std::uint32_t r) {
    if (!hike_is_valid(g, h)) throw std::invalid_argument("not a valid hike");
    if (r == 0) throw std::invalid_argument("stretch limit r must be at least 1");
    StepClassification out;
    out.stretch_limit = r;
    out.labels.reserve(h.steps.size());

    std::vector<char> revealed(g.edge_count(), 0);
    std::vector<char> visited(g.vertex_count(), 0);
    visited[g.de_tail(h.steps[0])] = 1;
    std::uint64_t revealed_edges = 0, visited_vertices = 1;

    for (DirectedEdgeId de : h.steps) {
        const std::uint32_t eid = de >> 1;
        const std::uint32_t head = g.de_head(de);
        StepLabel label;
        if (revealed[eid]) {
            label = StepLabel::stale;
            ++out.stale_count;
        } else if (!visited[head]) {
            label = StepLabel::fresh;
            ++out.fresh_count;
        } else {
            label = StepLabel::boundary;
            ++out.boundary_count;
        }
        out.labels.push_back(label);
        if (!revealed[eid]) {
            revealed[eid] = 1;
            ++revealed_edges;
        }
        if (!visited[head]) {
            visited[head] = 1;
            ++visited_vertices;
        }
    }
    out.traversed_excess = subgraph_excess(visited_vertices, revealed_edges);

    // maximal stale runs, split at the turnaround (between steps ell and
    // ell+1), then subdivided to length at most r
    const std::uint32_t len = static_cast<std::uint32_t>(h.steps.size());
    std::uint32_t i = 0;
    while (i < len) {
        if (out.labels[i] != StepLabel::stale) { ++i; continue; }
        std::uint32_t j = i;
        while (j < len && out.labels[j] == StepLabel::stale) ++j;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> runs;
        if (i < h.ell && j > h.ell) {
            runs.emplace_back(i, h.ell);
            runs.emplace_back(h.ell, j);
        } else {
            runs.emplace_back(i, j);
        }
        for (auto [b, e] : runs)
            for (std::uint32_t s = b; s < e; s += r)
                out.stretches.emplace_back(s, std::min(e, s + r));
        i = j;
    }
    return out;
}

double epsilon1(const BoundParams& p) {
    return std::log(static_cast<double>(p.n) / p.eta) / static_cast<double>(p.ell);
}

double epsilon2(const BoundParams& p) {
    return std::log(static_cast<double>(p.d) * p.ell) * std::log(static_cast<double>(p.ell)) /
           static_cast<double>(p.r);
}

BoundEnvelope evaluate_bound(const BoundParams& p) {
    if (p.n < 1 || p.d < 3 || p.ell < 1 || p.r < 1 || p.eta <= 0 || p.eta >= 1)
        throw std::invalid_argument("bad bound parameters");
    BoundEnvelope env;
    env.eps1 = epsilon1(p);
    env.eps2 = epsilon2(p);
    if (env.eps1 > 1.0 || env.eps2 > 1.0)
        throw std::invalid_argument("parameter regime violated: need eps1, eps2 <= 1");

    const double q = static_cast<double>(p.d) - 1.0;
    if (p.delta > 0)
        env.derand_term =
            std::pow(p.delta * static_cast<double>(p.n) / p.eta, 1.0 / (2.0 * p.ell)) *
            static_cast<double>(p.d);
    env.b_side = std::sqrt(q) * (1.0 + env.eps1 + env.eps2) + env.derand_term;

    // invert eps -> sqrt(q) + sqrt(eps) sqrt(sqrt(q) + eps/4) + eps/2 at b_side
    if (env.b_side <= std::sqrt(q)) {
        env.a_side = 2.0 * std::sqrt(q);
    } else {
        double lo = 0.0, hi = 1.0;
        while (translate_eigenvalue_bound(static_cast<int>(p.d), hi) < env.b_side) hi *= 2.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = (lo + hi) / 2.0;
            if (translate_eigenvalue_bound(static_cast<int>(p.d), mid) < env.b_side)
                lo = mid;
            else
                hi = mid;
        }
        env.a_side = 2.0 * std::sqrt(q) + (lo + hi) / 2.0;
    }
    return env;
}

} // namespace ramlift
