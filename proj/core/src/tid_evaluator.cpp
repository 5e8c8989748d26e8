#include "meshca/tid_evaluator.hpp"

#include "meshca/error.hpp"
#include "meshca/metrics.hpp"

namespace meshca {

TidEvaluator::TidEvaluator(const ConflictGraph& cg, ChannelAssignment ca)
    : cg_(&cg), ca_(std::move(ca)) {
    vertex_channel_ = vertex_channels(cg, ca_);
    conflict_number_.assign(cg.vertex_count(), 0);
    auto count = [&](const std::vector<std::pair<int, int>>& edges) {
        for (const auto& [x, y] : edges) {
            if (vertex_channel_[x] != 0 && vertex_channel_[x] == vertex_channel_[y]) {
                ++tid_;
                ++conflict_number_[x];
                ++conflict_number_[y];
            }
        }
    };
    count(cg.colocation_edges());
    count(cg.interference_edges());
}

int TidEvaluator::set_radio(int node, int radio, int channel) {
    const int previous = ca_.channel(node, radio);
    if (previous == channel) return previous;
    ca_.set(node, radio, channel);
    for (int vertex : cg_->vertices_of_radio(cg_->source().flat_radio(node, radio))) {
        refresh_vertex(vertex);
    }
    return previous;
}

void TidEvaluator::refresh_vertex(int vertex) {
    const LinkVertex& link = cg_->vertices()[vertex];
    const int channel_a = ca_.channel(link.node_a, link.radio_a);
    const int channel_b = ca_.channel(link.node_b, link.radio_b);
    const int next = channel_a == channel_b ? channel_a : 0;
    const int previous = vertex_channel_[vertex];
    if (next == previous) return;

    for (int neighbor : cg_->adjacency()[vertex]) {
        const int other = vertex_channel_[neighbor];
        if (other == 0) continue;
        if (previous != 0 && other == previous) {
            --tid_;
            --conflict_number_[vertex];
            --conflict_number_[neighbor];
        }
        if (next != 0 && other == next) {
            ++tid_;
            ++conflict_number_[vertex];
            ++conflict_number_[neighbor];
        }
    }
    vertex_channel_[vertex] = next;
}

bool TidEvaluator::node_edges_preserved(int node) const {
    for (int neighbor : cg_->source().neighbors(node)) {
        if (!ca_.share_channel(node, neighbor)) return false;
    }
    return true;
}

bool TidEvaluator::topology_preserved() const {
    return net_topo_preserved(cg_->source(), ca_);
}

}  // namespace meshca
