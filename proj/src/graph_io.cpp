#include "ramlift/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ramlift {

void write_edge_list(std::ostream& os, const Multigraph& g, const EdgeSigning* signing) {
    if (signing && signing->signs.size() != g.edge_count())
        throw std::invalid_argument("signing size does not match edge count");
    os << g.vertex_count() << ' ' << (g.regular() ? g.degree() : 0u) << '\n';
    std::vector<std::uint32_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const Edge& ea = g.edges()[a];
        const Edge& eb = g.edges()[b];
        return std::tie(ea.u, ea.v, a) < std::tie(eb.u, eb.v, b);
    });
    for (std::uint32_t eid : order) {
        const Edge& e = g.edges()[eid];
        os << e.u << ' ' << e.v;
        if (signing) os << ' ' << static_cast<int>(signing->signs[eid]);
        os << '\n';
    }
}

void write_edge_list(std::ostream& os, const SignedGraph& sg) {
    write_edge_list(os, sg.graph, &sg.signing);
}

SignedGraph LoadedGraph::as_signed() const {
    if (signing) return {graph, *signing};
    EdgeSigning all_plus;
    all_plus.signs.assign(graph.edge_count(), 1);
    return {graph, all_plus};
}

LoadedGraph read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty graph file");
    std::istringstream header(line);
    std::uint32_t n = 0, d = 0;
    if (!(header >> n >> d)) throw std::runtime_error("bad graph header, expected 'n d'");

    std::vector<Edge> edges;
    std::vector<std::int8_t> signs;
    bool any_sign = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::uint32_t u, v;
        if (!(row >> u >> v)) throw std::runtime_error("bad edge line: " + line);
        int s = 1;
        if (row >> s) {
            if (s != 1 && s != -1) throw std::runtime_error("edge sign must be +1 or -1");
            any_sign = true;
        }
        edges.push_back({u, v});
        signs.push_back(static_cast<std::int8_t>(s));
    }

    LoadedGraph out{Multigraph::from_edges(n, edges), std::nullopt};
    if (d != 0 && (!out.graph.regular() || out.graph.degree() != d))
        throw std::runtime_error("graph is not " + std::to_string(d) + "-regular as declared");
    if (any_sign) out.signing = EdgeSigning{std::move(signs)};
    return out;
}

void save_graph(const std::string& path, const Multigraph& g, const EdgeSigning* signing) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(os, g, signing);
}

LoadedGraph load_graph(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_edge_list(is);
}

} // namespace ramlift
