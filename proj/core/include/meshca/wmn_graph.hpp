#ifndef MESHCA_WMN_GRAPH_HPP
#define MESHCA_WMN_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace meshca {

/// A mesh router. Positions are in meters, ids are contiguous from 0.
struct Node {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    int radios = 1;

    bool operator==(const Node&) const = default;
};

/// Wireless mesh network under the protocol interference model.
///
/// Edges are always derived from node positions and the transmission range
/// (two nodes are adjacent iff their distance is <= range_m); they are never
/// stored or loaded independently. Immutable after construction.
class WmnGraph {
  public:
    /// Validates ids (unique, contiguous from 0), radio counts (>= 1),
    /// channel count (> max radios per node) and connectivity, then derives
    /// the edge set. Nodes may arrive in any order; they are sorted by id.
    WmnGraph(std::vector<Node> nodes, double range_m, int channel_count);

    const std::vector<Node>& nodes() const { return nodes_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    double range_m() const { return range_m_; }
    int channel_count() const { return channel_count_; }

    /// Derived edges, sorted, with first < second.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }

    int radios_of(int node) const { return nodes_[node].radios; }
    int max_radios() const { return max_radios_; }
    int total_radios() const { return radio_offsets_.back(); }

    /// Flat radio indexing: radios of node n occupy
    /// [radio_offset(n), radio_offset(n) + radios_of(n)).
    int radio_offset(int node) const { return radio_offsets_[node]; }
    int flat_radio(int node, int radio) const { return radio_offsets_[node] + radio; }
    const std::vector<int>& radio_offsets() const { return radio_offsets_; }

    bool operator==(const WmnGraph& other) const {
        return nodes_ == other.nodes_ && range_m_ == other.range_m_ &&
               channel_count_ == other.channel_count_;
    }

  private:
    std::vector<Node> nodes_;
    double range_m_ = 0.0;
    int channel_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> radio_offsets_;  // size node_count() + 1
    int max_radios_ = 0;
};

/// n x n lattice with 250 m spacing and 250 m range, so exactly the four
/// orthogonal neighbors of a node are adjacent. Requires n >= 2,
/// radios_per_node >= 1 and channel_count > radios_per_node.
WmnGraph generate_grid(int n, int radios_per_node, int channel_count);

/// Uniform random placement of node_count nodes in an area_m x area_m square,
/// retried until the derived graph is connected (at most 1000 attempts, then
/// ErrorKind::disconnected). Deterministic for a given seed.
WmnGraph generate_random(int node_count, double area_m, double range_m, int radios_per_node,
                         int channel_count, std::uint64_t seed);

}  // namespace meshca

#endif
