#ifndef MESHCA_ASSIGNMENT_HPP
#define MESHCA_ASSIGNMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meshca/channel_assignment.hpp"
#include "meshca/conflict_graph.hpp"

namespace meshca {

/// Sorted neighbor lists of an undirected graph on 0..n-1. Conflict-graph
/// level algorithms take this shape so they can also run on hand-built
/// fixtures that were not derived from a WMN.
using Adjacency = std::vector<std::vector<int>>;

/// Ordered list of disjoint independent sets covering all vertices.
struct IsPartition {
    std::vector<std::vector<int>> sets;
};

/// BFS level decomposition: levels[k] holds the vertices at distance k from
/// the root, in discovery order.
struct LevelStructure {
    std::vector<std::vector<int>> levels;
    int root = 0;
};

/// One committed link re-channeling of the optimization phase. Commits are
/// only made when TID strictly decreases, so tid_after < tid_before holds
/// for every record.
struct RcoCommit {
    int node_i = 0;
    int node_j = 0;
    int from_channel = 0;
    int to_channel = 0;
    long long tid_before = 0;
    long long tid_after = 0;
};

/// A duplicate radio the de-duplication phase had to leave in place because
/// every distinct channel would have broken topology preservation.
struct RcoGuardKeep {
    int node = 0;
    int radio = 0;
    int channel = 0;
};

struct RcoReport {
    std::vector<RcoCommit> commits;
    std::vector<RcoGuardKeep> guard_kept;
};

/// Full run record of a channel-assignment algorithm. tid_sequence holds the
/// TID at the three phase boundaries: initial mapping, after topology
/// restoration, after radio co-location optimization (algorithms without an
/// optimization phase repeat the restored value).
struct CaTrace {
    std::string algorithm;
    ChannelAssignment initial_ca;
    ChannelAssignment post_topology_ca;
    ChannelAssignment final_ca;
    std::vector<long long> tid_sequence;
    std::vector<int> eiz_sequence;  // only filled by eizm_ca
    RcoReport rco;
};

/// How vertex channels are folded onto radios.
///   max_count    selective coloring: the radio takes its most frequent
///                incident vertex channel; count ties are broken uniformly
///                at random with a seeded generator.
///   c_last       O(1) shortcut: the channel of the radio's last-processed
///                link vertex.
///   first_claim  sequential commitment: walking vertices in processing
///                order, each vertex tunes its two radios unless a radio was
///                already claimed by an earlier vertex.
enum class RadioMapMode { max_count, c_last, first_claim };

struct AlgorithmOptions {
    std::uint64_t seed = 0;
    /// Unset: the algorithm's own default (first_claim for mais_ca,
    /// max_count everywhere else).
    std::optional<RadioMapMode> radio_map;
    int gateway = 0;                       // BFS traversal anchor node
    std::optional<int> reference_vertex;   // EIZM root override (excluded from re-channeling)
};

/// Single ascending-id pass: each vertex joins the minimum-cardinality
/// existing set it is independent of (ties to the lowest set index), else
/// opens a new set.
IsPartition partition_independent_sets(const Adjacency& adj);
IsPartition partition_independent_sets(const ConflictGraph& cg);

/// BFS levels from root, neighbors explored in ascending id order.
LevelStructure level_structure(const Adjacency& adj, int root);

/// Outcome of a conflict-graph coloring pass: per-vertex channels plus the
/// order vertices were processed in (last occurrence wins for the c_last
/// radio mapping). eiz_sequence is the tagging order of the elevated
/// interference zone walk, empty for the other algorithms.
struct VertexPhaseResult {
    std::vector<int> channels;
    std::vector<int> touch_order;
    std::vector<int> eiz_sequence;
};

VertexPhaseResult ois_vertex_phase(const Adjacency& adj, int channel_count);
VertexPhaseResult eizm_vertex_phase(const Adjacency& adj, int channel_count,
                                    std::optional<int> reference = std::nullopt);
VertexPhaseResult mais_vertex_phase(const Adjacency& adj, int channel_count);
VertexPhaseResult bfs_vertex_phase(const Adjacency& adj, int channel_count, int start_vertex);

/// Folds vertex channels onto radios (see RadioMapMode). The seed feeds the
/// max_count tie-break generator; the other modes ignore it.
ChannelAssignment map_vertex_channels_to_radios(const ConflictGraph& cg,
                                                std::span<const int> channels,
                                                std::span<const int> touch_order,
                                                RadioMapMode mode = RadioMapMode::max_count,
                                                std::uint64_t seed = 0);

/// Forward correction: for every WMN edge (i, j) with i < j whose endpoints
/// share no channel, one radio of j is re-channeled to a channel of i,
/// choosing the candidate that minimizes TID (ties: lowest channel, then
/// lowest radio index). Passes repeat until no broken edge remains; the
/// result always satisfies net_topo_preserved.
ChannelAssignment topology_restore(const ConflictGraph& cg, const ChannelAssignment& ca,
                                   int channel_count);

/// Radio co-location optimization. Phase 1 re-channels duplicate radios per
/// node onto distinct channels (keeping one on the original channel,
/// minimizing TID, skipping candidates that would break topology). Phase 2
/// scans every WMN edge once and re-channels its realized radio pair when
/// that strictly decreases TID without breaking topology; the Phase 1 sweep
/// then runs once more to clear any duplicates Phase 2 re-introduced.
/// Requires a topology-preserving input.
ChannelAssignment rco(const ConflictGraph& cg, const ChannelAssignment& ca, int channel_count,
                      RcoReport* report = nullptr);

CaTrace ois_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options = {});
CaTrace eizm_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options = {});
CaTrace mais_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options = {});
CaTrace bfs_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options = {});

/// Every radio on channel 1; the degenerate baseline.
CaTrace uniform_ca(const ConflictGraph& cg, int channel_count);

/// Exhaustive search over all M^(total radios) assignments: the
/// topology-preserving one with minimum TID, ties to the lexicographically
/// smallest flat channel vector. Raises ErrorKind::budget_exceeded when the
/// search space is larger than budget.
ChannelAssignment brute_force_optimal(const ConflictGraph& cg, int channel_count,
                                      std::uint64_t budget);

/// Wraps brute_force_optimal into a trace (all three boundaries identical).
CaTrace brute_force_ca(const ConflictGraph& cg, int channel_count, std::uint64_t budget);

}  // namespace meshca

#endif
