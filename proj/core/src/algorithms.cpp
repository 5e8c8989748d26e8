#include <climits>
#include <cmath>
#include <string>

#include "meshca/assignment.hpp"
#include "meshca/error.hpp"
#include "meshca/metrics.hpp"
#include "meshca/tid_evaluator.hpp"

namespace meshca {

namespace {

void check_channels_vs_radios(const ConflictGraph& cg, int channel_count) {
    if (channel_count <= cg.source().max_radios()) {
        throw Error(ErrorKind::precondition,
                    "channel count " + std::to_string(channel_count) +
                        " must exceed the maximum radios per node (" +
                        std::to_string(cg.source().max_radios()) + ")");
    }
}

CaTrace finish_pipeline(const ConflictGraph& cg, int channel_count, std::string label,
                        VertexPhaseResult phase, const AlgorithmOptions& options, bool run_rco,
                        RadioMapMode default_map) {
    CaTrace trace;
    trace.algorithm = std::move(label);
    trace.eiz_sequence = std::move(phase.eiz_sequence);
    trace.initial_ca = map_vertex_channels_to_radios(cg, phase.channels, phase.touch_order,
                                                     options.radio_map.value_or(default_map),
                                                     options.seed);
    trace.post_topology_ca = topology_restore(cg, trace.initial_ca, channel_count);
    trace.final_ca = run_rco ? rco(cg, trace.post_topology_ca, channel_count, &trace.rco)
                             : trace.post_topology_ca;
    trace.tid_sequence = {tid(cg, trace.initial_ca).tid, tid(cg, trace.post_topology_ca).tid,
                          tid(cg, trace.final_ca).tid};
    return trace;
}

}  // namespace

CaTrace ois_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options) {
    check_channels_vs_radios(cg, channel_count);
    return finish_pipeline(cg, channel_count, "ois-ca",
                           ois_vertex_phase(cg.adjacency(), channel_count), options, true,
                           RadioMapMode::max_count);
}

CaTrace eizm_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options) {
    check_channels_vs_radios(cg, channel_count);
    return finish_pipeline(
        cg, channel_count, "eizm-ca",
        eizm_vertex_phase(cg.adjacency(), channel_count, options.reference_vertex), options, true,
        RadioMapMode::max_count);
}

CaTrace mais_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options) {
    check_channels_vs_radios(cg, channel_count);
    return finish_pipeline(cg, channel_count, "mais-ca",
                           mais_vertex_phase(cg.adjacency(), channel_count), options, false,
                           RadioMapMode::first_claim);
}

CaTrace bfs_ca(const ConflictGraph& cg, int channel_count, const AlgorithmOptions& options) {
    check_channels_vs_radios(cg, channel_count);
    const int gateway = options.gateway;
    if (gateway < 0 || gateway >= cg.source().node_count()) {
        throw Error(ErrorKind::invalid_argument,
                    "gateway node " + std::to_string(gateway) + " outside the graph");
    }
    int start = -1;
    for (const LinkVertex& vertex : cg.vertices()) {
        if (vertex.node_a == gateway || vertex.node_b == gateway) {
            start = vertex.id;
            break;
        }
    }
    if (start < 0) {
        throw Error(ErrorKind::precondition,
                    "gateway node " + std::to_string(gateway) + " has no incident link");
    }
    return finish_pipeline(cg, channel_count, "bfs-ca-lite",
                           bfs_vertex_phase(cg.adjacency(), channel_count, start), options, false,
                           RadioMapMode::max_count);
}

CaTrace uniform_ca(const ConflictGraph& cg, int channel_count) {
    (void)channel_count;
    ChannelAssignment ca(cg.source(), 1);
    const long long t = tid(cg, ca).tid;
    CaTrace trace;
    trace.algorithm = "uniform";
    trace.initial_ca = ca;
    trace.post_topology_ca = ca;
    trace.final_ca = std::move(ca);
    trace.tid_sequence = {t, t, t};
    return trace;
}

ChannelAssignment brute_force_optimal(const ConflictGraph& cg, int channel_count,
                                      std::uint64_t budget) {
    const WmnGraph& g = cg.source();
    if (channel_count < 1) {
        throw Error(ErrorKind::invalid_argument, "channel count must be at least 1");
    }
    const int total = g.total_radios();
    long double space = 1.0L;
    for (int i = 0; i < total; ++i) {
        space *= static_cast<long double>(channel_count);
        if (space > static_cast<long double>(budget)) {
            throw Error(ErrorKind::budget_exceeded,
                        std::to_string(channel_count) + "^" + std::to_string(total) +
                            " assignments exceed the budget of " + std::to_string(budget));
        }
    }

    std::vector<int> node_of_flat(total);
    std::vector<int> radio_of_flat(total);
    for (int node = 0; node < g.node_count(); ++node) {
        for (int radio = 0; radio < g.radios_of(node); ++radio) {
            node_of_flat[g.flat_radio(node, radio)] = node;
            radio_of_flat[g.flat_radio(node, radio)] = radio;
        }
    }

    // Odometer enumeration in lexicographic order over the flat radio vector,
    // so keeping only strict improvements leaves the lexicographically
    // smallest optimum.
    TidEvaluator eval(cg, ChannelAssignment(g, 1));
    std::vector<int> digits(total, 1);
    long long best_tid = LLONG_MAX;
    std::vector<int> best_digits;
    while (true) {
        if (eval.topology_preserved() && eval.tid() < best_tid) {
            best_tid = eval.tid();
            best_digits = digits;
        }
        int pos = total - 1;
        while (pos >= 0 && digits[pos] == channel_count) {
            digits[pos] = 1;
            eval.set_radio(node_of_flat[pos], radio_of_flat[pos], 1);
            --pos;
        }
        if (pos < 0) break;
        ++digits[pos];
        eval.set_radio(node_of_flat[pos], radio_of_flat[pos], digits[pos]);
    }

    ChannelAssignment best(g, 1);
    for (int flat = 0; flat < total; ++flat) {
        best.set_flat(flat, best_digits[flat]);
    }
    return best;
}

CaTrace brute_force_ca(const ConflictGraph& cg, int channel_count, std::uint64_t budget) {
    ChannelAssignment ca = brute_force_optimal(cg, channel_count, budget);
    const long long t = tid(cg, ca).tid;
    CaTrace trace;
    trace.algorithm = "brute-force";
    trace.initial_ca = ca;
    trace.post_topology_ca = ca;
    trace.final_ca = std::move(ca);
    trace.tid_sequence = {t, t, t};
    return trace;
}

}  // namespace meshca
