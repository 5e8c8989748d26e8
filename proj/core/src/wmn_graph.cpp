#include "meshca/wmn_graph.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

#include "meshca/error.hpp"

namespace meshca {

namespace {

bool within_range(const Node& a, const Node& b, double range_m) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy <= range_m * range_m;
}

bool connected(int n, const std::vector<std::vector<int>>& adjacency) {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adjacency[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

// Maps a raw 64-bit draw to [0, 1). Hand-rolled so layouts do not depend on
// the standard library's distribution implementation.
double to_unit(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

}  // namespace

WmnGraph::WmnGraph(std::vector<Node> nodes, double range_m, int channel_count)
    : nodes_(std::move(nodes)), range_m_(range_m), channel_count_(channel_count) {
    if (nodes_.empty()) {
        throw Error(ErrorKind::invalid_argument, "graph needs at least one node");
    }
    if (range_m_ <= 0.0) {
        throw Error(ErrorKind::invalid_argument, "range_m must be positive");
    }

    std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
    std::unordered_set<int> ids;
    for (const Node& node : nodes_) {
        if (!ids.insert(node.id).second) {
            throw Error(ErrorKind::duplicate_id, "node id " + std::to_string(node.id) + " appears twice");
        }
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id != static_cast<int>(i)) {
            throw Error(ErrorKind::invalid_argument, "node ids must be contiguous from 0");
        }
        if (nodes_[i].radios < 1) {
            throw Error(ErrorKind::invalid_argument,
                        "node " + std::to_string(nodes_[i].id) + " has no radios");
        }
    }

    max_radios_ = 0;
    radio_offsets_.assign(nodes_.size() + 1, 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        max_radios_ = std::max(max_radios_, nodes_[i].radios);
        radio_offsets_[i + 1] = radio_offsets_[i] + nodes_[i].radios;
    }
    if (channel_count_ <= max_radios_) {
        throw Error(ErrorKind::invalid_argument,
                    "channel count " + std::to_string(channel_count_) +
                        " must exceed the maximum radios per node (" + std::to_string(max_radios_) + ")");
    }

    const int n = node_count();
    adjacency_.assign(n, {});
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (within_range(nodes_[u], nodes_[v], range_m_)) {
                edges_.emplace_back(u, v);
                adjacency_[u].push_back(v);
                adjacency_[v].push_back(u);
            }
        }
    }

    if (!connected(n, adjacency_)) {
        throw Error(ErrorKind::disconnected, "derived graph is not connected");
    }
}

WmnGraph generate_grid(int n, int radios_per_node, int channel_count) {
    if (n < 2) {
        throw Error(ErrorKind::invalid_argument, "grid side must be at least 2");
    }
    constexpr double spacing_m = 250.0;  // equal to the range, so only orthogonal neighbors touch
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            nodes.push_back({row * n + col, col * spacing_m, row * spacing_m, radios_per_node});
        }
    }
    return WmnGraph(std::move(nodes), spacing_m, channel_count);
}

WmnGraph generate_random(int node_count, double area_m, double range_m, int radios_per_node,
                         int channel_count, std::uint64_t seed) {
    if (node_count < 2) {
        throw Error(ErrorKind::invalid_argument, "random layout needs at least 2 nodes");
    }
    if (area_m <= 0.0) {
        throw Error(ErrorKind::invalid_argument, "area_m must be positive");
    }
    std::mt19937_64 rng(seed);
    constexpr int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Node> nodes;
        nodes.reserve(node_count);
        for (int id = 0; id < node_count; ++id) {
            const double x = to_unit(rng()) * area_m;
            const double y = to_unit(rng()) * area_m;
            nodes.push_back({id, x, y, radios_per_node});
        }
        try {
            return WmnGraph(std::move(nodes), range_m, channel_count);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::disconnected) throw;
        }
    }
    throw Error(ErrorKind::disconnected,
                "no connected layout after " + std::to_string(max_attempts) + " attempts (node_count=" +
                    std::to_string(node_count) + ", area_m=" + std::to_string(area_m) +
                    ", range_m=" + std::to_string(range_m) + ")");
}

}  // namespace meshca
