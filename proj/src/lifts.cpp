#include "ramlift/lifts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramlift/spectra.hpp"

namespace ramlift {

SignedGraph sign_all(Multigraph g, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    EdgeSigning s;
    s.signs.assign(g.edge_count(), static_cast<std::int8_t>(sign));
    return {std::move(g), std::move(s)};
}

SignedGraph sign_from_bits(Multigraph g, const SignSource& source) {
    EdgeSigning s;
    s.signs.resize(g.edge_count());
    for (std::size_t i = 0; i < s.signs.size(); ++i)
        s.signs[i] = static_cast<std::int8_t>(source.at(i));
    return {std::move(g), std::move(s)};
}

SignedGraph sign_from_bits(Multigraph g, const BitSource& source) {
    if (g.edge_count() > source.max_length())
        throw std::invalid_argument("bit source too short for edge count");
    EdgeSigning s;
    s.signs.resize(g.edge_count());
    for (std::size_t i = 0; i < s.signs.size(); ++i)
        s.signs[i] = static_cast<std::int8_t>(source.sign_at(i));
    return {std::move(g), std::move(s)};
}

Multigraph lift_multigraph(const Multigraph& base, const std::vector<std::int8_t>& signs) {
    const std::uint32_t n = base.vertex_count();
    const auto h_total = static_cast<std::uint32_t>(base.half_edge_count());
    const std::size_t m = base.edge_count();

    std::vector<std::uint64_t> offsets(2 * static_cast<std::size_t>(n) + 1);
    offsets[0] = 0;
    for (std::uint32_t w = 0; w < 2 * n; ++w)
        offsets[w + 1] = offsets[w] + base.degree_of(w % n);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(2 * m);
    for (std::uint32_t b = 0; b < 2; ++b) {
        for (std::uint32_t j = 0; j < m; ++j) {
            const std::uint32_t neg = signs[j] < 0 ? 1u : 0u;
            pairs.emplace_back(b * h_total + base.edge_half_u(j),
                               (b ^ neg) * h_total + base.edge_half_v(j));
        }
    }
    Multigraph lifted;
    lifted.build_from_pairs(2 * n, offsets, pairs);
    return lifted;
}

Multigraph two_lift(const SignedGraph& sg) {
    if (sg.signing.signs.size() != sg.graph.edge_count())
        throw std::invalid_argument("signing size does not match edge count");
    return lift_multigraph(sg.graph, sg.signing.signs);
}

bool verify_spectrum_union(const SignedGraph& sg, double tol) {
    const Multigraph lifted = two_lift(sg);
    std::vector<double> expected = adjacency_spectrum(sg.graph);
    {
        std::vector<double> signed_part = adjacency_spectrum(sg);
        expected.insert(expected.end(), signed_part.begin(), signed_part.end());
    }
    std::sort(expected.begin(), expected.end());
    std::vector<double> actual = adjacency_spectrum(lifted);
    std::sort(actual.begin(), actual.end());
    if (expected.size() != actual.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (std::abs(expected[i] - actual[i]) > tol) return false;
    return true;
}

} // namespace ramlift
