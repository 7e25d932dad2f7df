#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ramlift/lifts.hpp"

namespace ramlift {

// Edge-list text format: header line "n d" (d = 0 for irregular graphs),
// then one line per undirected edge "u v" or "u v sign", loops written
// "v v".  Lines are ordered by (min endpoint, max endpoint, edge id).
void write_edge_list(std::ostream& os, const Multigraph& g,
                     const EdgeSigning* signing = nullptr);
void write_edge_list(std::ostream& os, const SignedGraph& sg);

struct LoadedGraph {
    Multigraph graph;
    std::optional<EdgeSigning> signing;  // present when any line carried a sign

    SignedGraph as_signed() const;  // missing signs default to +1
};

LoadedGraph read_edge_list(std::istream& is);

void save_graph(const std::string& path, const Multigraph& g,
                const EdgeSigning* signing = nullptr);
LoadedGraph load_graph(const std::string& path);

} // namespace ramlift
