#ifndef MESHCA_TID_EVALUATOR_HPP
#define MESHCA_TID_EVALUATOR_HPP

#include <vector>

#include "meshca/channel_assignment.hpp"
#include "meshca/conflict_graph.hpp"

namespace meshca {

/// Incrementally maintained interference state of a channel assignment.
///
/// set_radio updates only the link vertices touching the changed radio, so a
/// candidate trial costs O(sum of their degrees) instead of a full edge scan.
/// metrics::tid provides the exhaustive recomputation the tests compare
/// against. Holds a reference to the conflict graph; the graph must outlive
/// the evaluator.
class TidEvaluator {
  public:
    TidEvaluator(const ConflictGraph& cg, ChannelAssignment ca);

    long long tid() const { return tid_; }
    const ChannelAssignment& assignment() const { return ca_; }
    const ConflictGraph& graph() const { return *cg_; }

    int vertex_channel(int vertex) const { return vertex_channel_[vertex]; }
    long long conflict_number(int vertex) const { return conflict_number_[vertex]; }

    int channel(int node, int radio) const { return ca_.channel(node, radio); }

    /// Reassigns one radio and returns its previous channel (for reverts).
    int set_radio(int node, int radio, int channel);

    /// True iff WMN edge (i, j) endpoints share a channel right now.
    bool edge_preserved(int i, int j) const { return ca_.share_channel(i, j); }

    /// True iff every WMN edge incident on the node is preserved.
    bool node_edges_preserved(int node) const;

    /// Full scan over the WMN edge set.
    bool topology_preserved() const;

  private:
    void refresh_vertex(int vertex);

    const ConflictGraph* cg_;
    ChannelAssignment ca_;
    std::vector<int> vertex_channel_;  // 0 marks an unrealized link
    std::vector<long long> conflict_number_;
    long long tid_ = 0;
};

}  // namespace meshca

#endif
