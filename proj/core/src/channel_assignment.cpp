#include "meshca/channel_assignment.hpp"

#include <string>

#include "meshca/error.hpp"

namespace meshca {

ChannelAssignment::ChannelAssignment(const WmnGraph& g, int uniform_channel) {
    if (uniform_channel < 1 || uniform_channel > g.channel_count()) {
        throw Error(ErrorKind::invalid_argument,
                    "channel " + std::to_string(uniform_channel) + " outside 1.." +
                        std::to_string(g.channel_count()));
    }
    radio_offsets_ = g.radio_offsets();
    channels_.assign(g.total_radios(), uniform_channel);
}

ChannelAssignment ChannelAssignment::from_map(const WmnGraph& g,
                                              const std::map<std::pair<int, int>, int>& channels) {
    ChannelAssignment ca;
    ca.radio_offsets_ = g.radio_offsets();
    ca.channels_.assign(g.total_radios(), 0);
    for (const auto& [key, channel] : channels) {
        const auto [node, radio] = key;
        if (node < 0 || node >= g.node_count() || radio < 0 || radio >= g.radios_of(node)) {
            throw Error(ErrorKind::incomplete_assignment,
                        "radio " + std::to_string(node) + "." + std::to_string(radio) +
                            " does not exist in the graph");
        }
        if (channel < 1 || channel > g.channel_count()) {
            throw Error(ErrorKind::invalid_argument,
                        "channel " + std::to_string(channel) + " outside 1.." +
                            std::to_string(g.channel_count()));
        }
        ca.channels_[g.flat_radio(node, radio)] = channel;
    }
    for (int node = 0; node < g.node_count(); ++node) {
        for (int radio = 0; radio < g.radios_of(node); ++radio) {
            if (ca.channel(node, radio) == 0) {
                throw Error(ErrorKind::incomplete_assignment,
                            "radio " + std::to_string(node) + "." + std::to_string(radio) +
                                " has no channel");
            }
        }
    }
    return ca;
}

bool ChannelAssignment::share_channel(int node_a, int node_b) const {
    for (int a : channels_of(node_a)) {
        for (int b : channels_of(node_b)) {
            if (a == b) return true;
        }
    }
    return false;
}

std::vector<long long> ChannelAssignment::channel_counts(int channel_count) const {
    std::vector<long long> counts(channel_count, 0);
    for (int c : channels_) {
        if (c >= 1 && c <= channel_count) ++counts[c - 1];
    }
    return counts;
}

}  // namespace meshca
