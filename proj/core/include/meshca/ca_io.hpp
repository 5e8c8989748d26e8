#ifndef MESHCA_CA_IO_HPP
#define MESHCA_CA_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meshca/assignment.hpp"
#include "meshca/channel_assignment.hpp"
#include "meshca/wmn_graph.hpp"

namespace meshca {

/// Channel-assignment document:
///   {"algorithm": string, "seed": int,
///    "channels": {"<node>.<radio>": int, ...},
///    "tid_trace": [initial, post_topology, final]}
nlohmann::json save_ca(const CaTrace& trace, std::uint64_t seed);

struct LoadedCa {
    std::string algorithm;
    std::uint64_t seed = 0;
    ChannelAssignment ca;
    std::vector<long long> tid_trace;
};

/// Parses and validates a document against the graph: every radio of g must
/// appear exactly once with a channel in 1..g.channel_count().
LoadedCa load_ca(const nlohmann::json& doc, const WmnGraph& g);

}  // namespace meshca

#endif
