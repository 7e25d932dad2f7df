#pragma once

#include <cstdint>
#include <vector>

#include "ramlift/bits.hpp"
#include "ramlift/multigraph.hpp"

namespace ramlift {

// One sign per edge id, in the graph's canonical edge order.
struct EdgeSigning {
    std::vector<std::int8_t> signs;
};

struct SignedGraph {
    Multigraph graph;
    EdgeSigning signing;

    int sign(std::uint32_t eid) const { return signing.signs[eid]; }
};

SignedGraph sign_all(Multigraph g, int sign);
SignedGraph sign_from_bits(Multigraph g, const SignSource& source);
SignedGraph sign_from_bits(Multigraph g, const BitSource& source);

// 2-lift determined by the signing.  Vertex (v, b) of the lift is encoded as
// v + n*b, so repeated lifts append one bit per stage to the vertex id.  The
// two lifted copies of edge j get ids j and j+m, indexed by the bit of the
// copy of the edge's stored u endpoint; a +1 edge joins equal bits, a -1 edge
// joins opposite bits.  Ports carry over unchanged.
Multigraph two_lift(const SignedGraph& sg);

// Sorted spectrum of the lift equals the multiset union of the base spectrum
// and the signed spectrum, elementwise within tol.
bool verify_spectrum_union(const SignedGraph& sg, double tol);

} // namespace ramlift
