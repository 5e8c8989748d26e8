#include <algorithm>
#include <string>

#include "meshca/assignment.hpp"
#include "meshca/error.hpp"
#include "meshca/tid_evaluator.hpp"

namespace meshca {

namespace {

struct RepairCandidate {
    bool safe = true;
    long long tid = 0;
    int channel = 0;
    int radio = 0;

    bool better_than(const RepairCandidate& other) const {
        if (safe != other.safe) return safe;
        if (tid != other.tid) return tid < other.tid;
        if (channel != other.channel) return channel < other.channel;
        return radio < other.radio;
    }
};

}  // namespace

ChannelAssignment topology_restore(const ConflictGraph& cg, const ChannelAssignment& ca,
                                   int channel_count) {
    (void)channel_count;  // repairs copy existing channels, so CS is implicit
    const WmnGraph& g = cg.source();
    TidEvaluator eval(cg, ca);

    constexpr int max_passes = 64;
    for (int pass = 0; pass < max_passes; ++pass) {
        for (int i = 0; i < g.node_count(); ++i) {
            for (int j : g.neighbors(i)) {
                if (j < i || eval.edge_preserved(i, j)) continue;

                std::vector<int> sources(eval.assignment().channels_of(i).begin(),
                                         eval.assignment().channels_of(i).end());
                std::sort(sources.begin(), sources.end());
                sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

                // On retry passes, candidates that keep j's currently-satisfied
                // edges intact are preferred; the first pass applies the plain
                // minimum-TID rule.
                std::vector<int> satisfied;
                if (pass > 0) {
                    for (int a : g.neighbors(j)) {
                        if (a != i && eval.edge_preserved(j, a)) satisfied.push_back(a);
                    }
                }

                RepairCandidate best;
                bool have_best = false;
                for (int c_com : sources) {
                    for (int k = 0; k < g.radios_of(j); ++k) {
                        const int old = eval.set_radio(j, k, c_com);
                        RepairCandidate candidate{true, eval.tid(), c_com, k};
                        for (int a : satisfied) {
                            if (!eval.edge_preserved(j, a)) {
                                candidate.safe = false;
                                break;
                            }
                        }
                        if (!have_best || candidate.better_than(best)) {
                            best = candidate;
                            have_best = true;
                        }
                        eval.set_radio(j, k, old);
                    }
                }
                eval.set_radio(j, best.radio, best.channel);
            }
        }
        if (eval.topology_preserved()) {
            return eval.assignment();
        }
    }
    throw Error(ErrorKind::no_convergence,
                "forward correction left broken edges after " + std::to_string(max_passes) +
                    " passes");
}

}  // namespace meshca
