#include "support.hpp"

#include <algorithm>

namespace meshca::test {

WmnGraph path_graph(int n, int radios_per_node, int channel_count) {
    std::vector<Node> nodes;
    for (int i = 0; i < n; ++i) {
        nodes.push_back({i, 200.0 * i, 0.0, radios_per_node});
    }
    return WmnGraph(std::move(nodes), 250.0, channel_count);
}

WmnGraph star_graph(int radios_per_node, int channel_count) {
    std::vector<Node> nodes = {{0, 0.0, 0.0, radios_per_node},
                               {1, 200.0, 0.0, radios_per_node},
                               {2, -200.0, 0.0, radios_per_node},
                               {3, 0.0, 200.0, radios_per_node}};
    return WmnGraph(std::move(nodes), 250.0, channel_count);
}

Adjacency zone_fixture_adjacency() {
    const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {2, 3}, {2, 4},
        {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 6}, {3, 7}, {4, 6}, {4, 8},
        {4, 9}, {5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}, {8, 9}};
    Adjacency adj(10);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::vector<int>& neighbors : adj) {
        std::sort(neighbors.begin(), neighbors.end());
    }
    return adj;
}

const std::vector<int>& zone_walk_order() {
    static const std::vector<int> order = {2, 3, 4, 1, 6, 7, 5, 8, 9};
    return order;
}

long long duplicate_scr_count(const WmnGraph& g, const ChannelAssignment& ca) {
    long long duplicates = 0;
    for (int node = 0; node < g.node_count(); ++node) {
        for (int i = 0; i < g.radios_of(node); ++i) {
            for (int j = i + 1; j < g.radios_of(node); ++j) {
                if (ca.channel(node, i) == ca.channel(node, j)) ++duplicates;
            }
        }
    }
    return duplicates;
}

}  // namespace meshca::test
