#ifndef MESHCA_TESTS_SUPPORT_HPP
#define MESHCA_TESTS_SUPPORT_HPP

#include <vector>

#include "meshca/assignment.hpp"
#include "meshca/channel_assignment.hpp"
#include "meshca/wmn_graph.hpp"

namespace meshca::test {

/// n collinear nodes 200 m apart with 250 m range: consecutive nodes are
/// adjacent, nothing else.
WmnGraph path_graph(int n, int radios_per_node, int channel_count);

/// A hub and three leaves 200 m out; leaf-to-leaf distances exceed the range,
/// so the only edges are hub-leaf.
WmnGraph star_graph(int radios_per_node, int channel_count);

/// Hand-built 10-vertex conflict graph around a gateway-adjacent reference
/// vertex (id 0), used to pin the elevated-interference-zone walk. The
/// expected tagging order under reference 0 is zone_walk_order(), traced by
/// hand from the selection rules (first: max degree; then: most mutual
/// neighbors with the previous zone, ties higher degree then lower id).
Adjacency zone_fixture_adjacency();
const std::vector<int>& zone_walk_order();

/// Per-node count of same-channel radio pairs, the co-location duplicates
/// the optimization pass is meant to clear.
long long duplicate_scr_count(const WmnGraph& g, const ChannelAssignment& ca);

}  // namespace meshca::test

#endif
