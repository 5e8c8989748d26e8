#ifndef MESHCA_METRICS_HPP
#define MESHCA_METRICS_HPP

#include <span>
#include <string>
#include <vector>

#include "meshca/channel_assignment.hpp"
#include "meshca/conflict_graph.hpp"
#include "meshca/wmn_graph.hpp"

namespace meshca {

/// Interference summary of one channel assignment. tid counts unordered
/// conflicting pairs; conflict_numbers holds per-vertex incident counts, so
/// their sum is exactly 2 * tid.
struct TidReport {
    long long tid = 0;
    std::vector<long long> conflict_numbers;      // indexed by vertex id
    std::vector<long long> channel_radio_counts;  // index c-1 for channel c
    bool topology_preserved = false;
};

/// Full recomputation from scratch; also the reference for the incremental
/// evaluator's equivalence tests.
TidReport tid(const ConflictGraph& cg, const ChannelAssignment& ca);

/// Per-channel radio counts divided by the minimum nonzero count, in channel
/// order. Channels with no radios report 0.
std::vector<double> channel_distribution(const ChannelAssignment& ca, int channel_count);

/// "1.00 : 1.06 : 1.06" rendering of a distribution vector.
std::string format_distribution(std::span<const double> ratios);

/// True iff every WMN edge's endpoints share at least one channel.
bool net_topo_preserved(const WmnGraph& g, const ChannelAssignment& ca);

/// For each WMN edge, the vertex id of its chosen realization: among the
/// radio pairs sharing a channel, the one with the fewest active conflicts,
/// ties to the lowest vertex id; -1 when no pair shares a channel.
std::vector<int> realized_links(const ConflictGraph& cg, const ChannelAssignment& ca);

/// TDMA-style rounds needed to activate every WMN edge once: greedy
/// largest-degree-first coloring of the active-conflict graph restricted to
/// one realization per edge. A conflict-free assignment yields 1.
int scheduling_rounds(const ConflictGraph& cg, const ChannelAssignment& ca);

std::string csv_header(int channel_count);
std::string csv_row(const std::string& scenario, const std::string& algorithm,
                    const TidReport& report, int rounds, int channel_count);

}  // namespace meshca

#endif
