#include <climits>
#include <vector>

#include "meshca/assignment.hpp"
#include "meshca/error.hpp"
#include "meshca/metrics.hpp"
#include "meshca/tid_evaluator.hpp"

namespace meshca {

ChannelAssignment rco(const ConflictGraph& cg, const ChannelAssignment& ca, int channel_count,
                      RcoReport* report) {
    const WmnGraph& g = cg.source();
    if (!net_topo_preserved(g, ca)) {
        throw Error(ErrorKind::precondition, "rco requires a topology-preserving assignment");
    }
    TidEvaluator eval(cg, ca);

    // Phase 1: give each node's duplicate radios distinct channels. The first
    // radio of a duplicate group keeps the original channel, so the node's
    // channel set only grows and topology stays intact; the guard below is
    // kept as a cheap safety net. The sweep runs again after Phase 2, whose
    // link re-channeling may land a radio on a channel a sibling already
    // uses.
    auto dechannel_duplicates = [&] {
        for (int node = 0; node < g.node_count(); ++node) {
            for (int c = 1; c <= channel_count; ++c) {
                std::vector<int> group;
                for (int radio = 0; radio < g.radios_of(node); ++radio) {
                    if (eval.channel(node, radio) == c) group.push_back(radio);
                }
                if (group.size() < 2) continue;
                for (std::size_t g_index = 1; g_index < group.size(); ++g_index) {
                    const int radio = group[g_index];
                    std::vector<char> used(channel_count + 1, 0);
                    for (int other = 0; other < g.radios_of(node); ++other) {
                        if (other != radio) used[eval.channel(node, other)] = 1;
                    }
                    long long best_tid = LLONG_MAX;
                    int best_channel = 0;
                    for (int candidate = 1; candidate <= channel_count; ++candidate) {
                        if (used[candidate]) continue;
                        const int old = eval.set_radio(node, radio, candidate);
                        if (eval.node_edges_preserved(node)) {
                            const long long t = eval.tid();
                            if (t < best_tid) {
                                best_tid = t;
                                best_channel = candidate;
                            }
                        }
                        eval.set_radio(node, radio, old);
                    }
                    if (best_channel != 0) {
                        eval.set_radio(node, radio, best_channel);
                    } else if (report) {
                        report->guard_kept.push_back({node, radio, c});
                    }
                }
            }
        }
    };
    dechannel_duplicates();

    // Phase 2: scan every WMN edge once; try each alternative channel on the
    // edge's realized radio pair, keeping it only when topology survives and
    // TID strictly drops.
    for (int e = 0; e < g.edge_count(); ++e) {
        int chosen = -1;
        for (int v = cg.edge_vertex_begin(e); v < cg.edge_vertex_end(e); ++v) {
            if (eval.vertex_channel(v) == 0) continue;
            if (chosen < 0 || eval.conflict_number(v) < eval.conflict_number(chosen)) chosen = v;
        }
        if (chosen < 0) continue;
        const LinkVertex link = cg.vertices()[chosen];
        for (int c_dif = 1; c_dif <= channel_count; ++c_dif) {
            const int current = eval.channel(link.node_a, link.radio_a);
            if (c_dif == current) continue;
            const long long before = eval.tid();
            const int old_a = eval.set_radio(link.node_a, link.radio_a, c_dif);
            const int old_b = eval.set_radio(link.node_b, link.radio_b, c_dif);
            if (eval.node_edges_preserved(link.node_a) && eval.node_edges_preserved(link.node_b) &&
                eval.tid() < before) {
                if (report) {
                    report->commits.push_back(
                        {link.node_a, link.node_b, current, c_dif, before, eval.tid()});
                }
            } else {
                eval.set_radio(link.node_b, link.radio_b, old_b);
                eval.set_radio(link.node_a, link.radio_a, old_a);
            }
        }
    }

    dechannel_duplicates();
    return eval.assignment();
}

}  // namespace meshca
