#ifndef MESHCA_CONFLICT_GRAPH_HPP
#define MESHCA_CONFLICT_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "meshca/channel_assignment.hpp"
#include "meshca/wmn_graph.hpp"

namespace meshca {

/// One potential wireless link: a concrete radio pair across a WMN edge.
/// Normalized so node_a < node_b.
struct LinkVertex {
    int id = 0;
    int node_a = 0;
    int radio_a = 0;
    int node_b = 0;
    int radio_b = 0;

    bool operator==(const LinkVertex&) const = default;
};

/// Link-conflict graph of a WMN, extended with co-location edges.
///
/// Vertices are all radio-pair realizations of the WMN edges. Two vertices
/// sharing a node id get a co-location edge; node-disjoint vertices whose
/// links have endpoint nodes within range of each other get an interference
/// edge. The two edge sets are disjoint: co-location takes precedence.
/// Immutable after construction.
class ConflictGraph {
  public:
    explicit ConflictGraph(const WmnGraph& g);

    const WmnGraph& source() const { return source_; }
    const std::vector<LinkVertex>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    const std::vector<std::pair<int, int>>& colocation_edges() const { return colocation_edges_; }
    const std::vector<std::pair<int, int>>& interference_edges() const { return interference_edges_; }
    long long edge_count() const {
        return static_cast<long long>(colocation_edges_.size() + interference_edges_.size());
    }

    /// Union of both edge kinds, as sorted neighbor lists.
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
    int degree(int vertex) const { return static_cast<int>(adjacency_[vertex].size()); }

    /// V_r: vertices whose link uses the given radio (flat index).
    const std::vector<int>& vertices_of_radio(int flat_radio) const {
        return radio_vertices_[flat_radio];
    }

    /// Vertices realizing WMN edge e (index into source().edges()) are the
    /// contiguous id block [edge_vertex_begin(e), edge_vertex_end(e)),
    /// because enumeration is grouped by edge.
    int edge_vertex_begin(int edge_index) const { return edge_vertex_offsets_[edge_index]; }
    int edge_vertex_end(int edge_index) const { return edge_vertex_offsets_[edge_index + 1]; }

    /// Graphviz rendering; co-location edges are dashed.
    std::string to_dot() const;

    /// Adjacency dump for fixtures: vertices plus both edge lists.
    nlohmann::json adjacency_json() const;

  private:
    WmnGraph source_;
    std::vector<LinkVertex> vertices_;
    std::vector<std::pair<int, int>> colocation_edges_;
    std::vector<std::pair<int, int>> interference_edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> radio_vertices_;
    std::vector<int> edge_vertex_offsets_;  // size edge_count() + 1
};

/// All radio-pair link vertices, sorted by (node_a, node_b, radio_a, radio_b)
/// and numbered from 0 in that order.
std::vector<LinkVertex> enumerate_links(const WmnGraph& g);

ConflictGraph build_emmcg(const WmnGraph& g);

/// Edges of cg whose two link vertices carry identical channels under ca.
/// A vertex carries a channel only when its two radios agree; links whose
/// radios differ are unrealized and never conflict. Result is sorted.
std::vector<std::pair<int, int>> active_conflicts(const ConflictGraph& cg,
                                                  const ChannelAssignment& ca);

/// Channel carried by each vertex under ca; 0 marks an unrealized link.
std::vector<int> vertex_channels(const ConflictGraph& cg, const ChannelAssignment& ca);

}  // namespace meshca

#endif
