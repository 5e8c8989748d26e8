#ifndef MESHCA_CHANNEL_ASSIGNMENT_HPP
#define MESHCA_CHANNEL_ASSIGNMENT_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "meshca/wmn_graph.hpp"

namespace meshca {

/// Maps every (node, radio) pair of a WMN to a channel in 1..M. Always
/// complete by construction; the incomplete-assignment error surfaces when
/// building from an external map or document that misses a radio. Value
/// semantics: algorithms mutate private copies.
class ChannelAssignment {
  public:
    /// Empty assignment (no radios); useful only as a placeholder.
    ChannelAssignment() : radio_offsets_{0} {}

    /// Every radio on the same channel.
    ChannelAssignment(const WmnGraph& g, int uniform_channel);

    /// Validates that the map covers exactly the radios of g and that every
    /// channel lies in 1..g.channel_count().
    static ChannelAssignment from_map(const WmnGraph& g,
                                      const std::map<std::pair<int, int>, int>& channels);

    int channel(int node, int radio) const { return channels_[radio_offsets_[node] + radio]; }
    int channel_flat(int flat_radio) const { return channels_[flat_radio]; }
    void set(int node, int radio, int channel) { channels_[radio_offsets_[node] + radio] = channel; }
    void set_flat(int flat_radio, int channel) { channels_[flat_radio] = channel; }

    /// Ch_i: the channels of node i's radios, in radio-index order.
    std::span<const int> channels_of(int node) const {
        return {channels_.data() + radio_offsets_[node],
                static_cast<std::size_t>(radio_offsets_[node + 1] - radio_offsets_[node])};
    }

    /// True iff the two nodes share at least one channel value.
    bool share_channel(int node_a, int node_b) const;

    int node_count() const { return static_cast<int>(radio_offsets_.size()) - 1; }
    int radios_of(int node) const { return radio_offsets_[node + 1] - radio_offsets_[node]; }
    int total_radios() const { return radio_offsets_.back(); }
    const std::vector<int>& radio_offsets() const { return radio_offsets_; }

    /// Radios per channel; index c-1 holds the count for channel c.
    std::vector<long long> channel_counts(int channel_count) const;

    bool operator==(const ChannelAssignment&) const = default;

  private:
    std::vector<int> radio_offsets_;  // copied from the graph
    std::vector<int> channels_;       // indexed by flat radio id
};

}  // namespace meshca

#endif
