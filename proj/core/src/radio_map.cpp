#include <algorithm>
#include <random>
#include <string>

#include "meshca/assignment.hpp"
#include "meshca/error.hpp"

namespace meshca {

namespace {

long long require_covered(const std::vector<long long>& last_position, int vertex) {
    if (last_position[vertex] < 0) {
        throw Error(ErrorKind::precondition, "touch order does not cover every vertex");
    }
    return last_position[vertex];
}

ChannelAssignment map_first_claim(const ConflictGraph& cg, std::span<const int> channels,
                                  std::span<const int> touch_order) {
    const WmnGraph& g = cg.source();
    ChannelAssignment ca(g, 1);
    std::vector<char> claimed(g.total_radios(), 0);
    for (int v : touch_order) {
        const LinkVertex& vertex = cg.vertices()[v];
        const int flat_a = g.flat_radio(vertex.node_a, vertex.radio_a);
        const int flat_b = g.flat_radio(vertex.node_b, vertex.radio_b);
        if (!claimed[flat_a]) {
            ca.set_flat(flat_a, channels[v]);
            claimed[flat_a] = 1;
        }
        if (!claimed[flat_b]) {
            ca.set_flat(flat_b, channels[v]);
            claimed[flat_b] = 1;
        }
    }
    for (int node = 0; node < g.node_count(); ++node) {
        for (int radio = 0; radio < g.radios_of(node); ++radio) {
            const int flat = g.flat_radio(node, radio);
            if (cg.vertices_of_radio(flat).empty()) {
                throw Error(ErrorKind::precondition,
                            "radio " + std::to_string(node) + "." + std::to_string(radio) +
                                " realizes no link");
            }
            if (!claimed[flat]) {
                throw Error(ErrorKind::precondition, "touch order does not cover every vertex");
            }
        }
    }
    return ca;
}

}  // namespace

ChannelAssignment map_vertex_channels_to_radios(const ConflictGraph& cg,
                                                std::span<const int> channels,
                                                std::span<const int> touch_order,
                                                RadioMapMode mode, std::uint64_t seed) {
    const WmnGraph& g = cg.source();
    if (static_cast<int>(channels.size()) != cg.vertex_count()) {
        throw Error(ErrorKind::invalid_argument,
                    "vertex channel vector does not match the conflict graph");
    }

    if (mode == RadioMapMode::first_claim) {
        return map_first_claim(cg, channels, touch_order);
    }

    std::vector<long long> last_position(cg.vertex_count(), -1);
    for (std::size_t pos = 0; pos < touch_order.size(); ++pos) {
        last_position[touch_order[pos]] = static_cast<long long>(pos);
    }

    std::mt19937_64 rng(seed);
    ChannelAssignment ca(g, 1);
    for (int node = 0; node < g.node_count(); ++node) {
        for (int radio = 0; radio < g.radios_of(node); ++radio) {
            const std::vector<int>& incident = cg.vertices_of_radio(g.flat_radio(node, radio));
            if (incident.empty()) {
                throw Error(ErrorKind::precondition,
                            "radio " + std::to_string(node) + "." + std::to_string(radio) +
                                " realizes no link");
            }
            int chosen_channel;
            if (mode == RadioMapMode::c_last) {
                int last_vertex = incident.front();
                for (int v : incident) {
                    if (last_position[v] > last_position[last_vertex]) last_vertex = v;
                }
                require_covered(last_position, last_vertex);
                chosen_channel = channels[last_vertex];
            } else {
                std::vector<int> counts(g.channel_count() + 1, 0);
                for (int v : incident) {
                    if (channels[v] >= 1 && channels[v] <= g.channel_count()) ++counts[channels[v]];
                }
                int best = 0;
                for (int c = 1; c <= g.channel_count(); ++c) {
                    if (counts[c] > best) best = counts[c];
                }
                std::vector<int> candidates;
                for (int c = 1; c <= g.channel_count(); ++c) {
                    if (counts[c] == best && best > 0) candidates.push_back(c);
                }
                if (candidates.empty()) candidates.push_back(1);
                chosen_channel = candidates[rng() % candidates.size()];
            }
            ca.set(node, radio, chosen_channel);
        }
    }
    return ca;
}

}  // namespace meshca
