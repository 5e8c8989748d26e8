#include "meshca/conflict_graph.hpp"

#include <algorithm>
#include <sstream>

#include "meshca/error.hpp"

namespace meshca {

namespace {

bool nodes_within_range(const WmnGraph& g, int a, int b) {
    const Node& na = g.nodes()[a];
    const Node& nb = g.nodes()[b];
    const double dx = na.x - nb.x;
    const double dy = na.y - nb.y;
    return dx * dx + dy * dy <= g.range_m() * g.range_m();
}

}  // namespace

std::vector<LinkVertex> enumerate_links(const WmnGraph& g) {
    std::vector<LinkVertex> vertices;
    for (const auto& [u, v] : g.edges()) {
        for (int ru = 0; ru < g.radios_of(u); ++ru) {
            for (int rv = 0; rv < g.radios_of(v); ++rv) {
                vertices.push_back({static_cast<int>(vertices.size()), u, ru, v, rv});
            }
        }
    }
    return vertices;
}

ConflictGraph::ConflictGraph(const WmnGraph& g) : source_(g) {
    vertices_ = enumerate_links(g);
    const int vc = vertex_count();

    edge_vertex_offsets_.assign(g.edge_count() + 1, 0);
    for (int e = 0, offset = 0; e < g.edge_count(); ++e) {
        edge_vertex_offsets_[e] = offset;
        offset += g.radios_of(g.edges()[e].first) * g.radios_of(g.edges()[e].second);
        edge_vertex_offsets_[e + 1] = offset;
    }

    radio_vertices_.assign(g.total_radios(), {});
    for (const LinkVertex& vertex : vertices_) {
        radio_vertices_[g.flat_radio(vertex.node_a, vertex.radio_a)].push_back(vertex.id);
        radio_vertices_[g.flat_radio(vertex.node_b, vertex.radio_b)].push_back(vertex.id);
    }

    // Co-location: vertices grouped per incident node form cliques. A pair
    // realizing the same WMN edge shows up from both endpoint groups, so
    // dedupe after collecting.
    std::vector<std::vector<int>> node_vertices(g.node_count());
    for (const LinkVertex& vertex : vertices_) {
        node_vertices[vertex.node_a].push_back(vertex.id);
        node_vertices[vertex.node_b].push_back(vertex.id);
    }
    for (const std::vector<int>& group : node_vertices) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                colocation_edges_.emplace_back(std::min(group[i], group[j]),
                                               std::max(group[i], group[j]));
            }
        }
    }
    std::sort(colocation_edges_.begin(), colocation_edges_.end());
    colocation_edges_.erase(std::unique(colocation_edges_.begin(), colocation_edges_.end()),
                            colocation_edges_.end());

    // Interference: expand every node-disjoint WMN edge pair with endpoints
    // within range to all of its radio-pair combinations.
    const auto& edges = g.edges();
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int f = e + 1; f < g.edge_count(); ++f) {
            const auto [a, b] = edges[e];
            const auto [c, d] = edges[f];
            if (a == c || a == d || b == c || b == d) continue;
            const bool interfere = nodes_within_range(g, a, c) || nodes_within_range(g, a, d) ||
                                   nodes_within_range(g, b, c) || nodes_within_range(g, b, d);
            if (!interfere) continue;
            for (int ve = edge_vertex_offsets_[e]; ve < edge_vertex_offsets_[e + 1]; ++ve) {
                for (int vf = edge_vertex_offsets_[f]; vf < edge_vertex_offsets_[f + 1]; ++vf) {
                    interference_edges_.emplace_back(ve, vf);
                }
            }
        }
    }
    std::sort(interference_edges_.begin(), interference_edges_.end());

    adjacency_.assign(vc, {});
    for (const auto& [x, y] : colocation_edges_) {
        adjacency_[x].push_back(y);
        adjacency_[y].push_back(x);
    }
    for (const auto& [x, y] : interference_edges_) {
        adjacency_[x].push_back(y);
        adjacency_[y].push_back(x);
    }
    for (std::vector<int>& neighbors : adjacency_) {
        std::sort(neighbors.begin(), neighbors.end());
    }
}

ConflictGraph build_emmcg(const WmnGraph& g) { return ConflictGraph(g); }

std::vector<int> vertex_channels(const ConflictGraph& cg, const ChannelAssignment& ca) {
    if (ca.radio_offsets() != cg.source().radio_offsets()) {
        throw Error(ErrorKind::incomplete_assignment,
                    "assignment does not match the graph's radio layout");
    }
    std::vector<int> channels(cg.vertex_count(), 0);
    for (const LinkVertex& vertex : cg.vertices()) {
        const int ca_channel = ca.channel(vertex.node_a, vertex.radio_a);
        if (ca_channel == ca.channel(vertex.node_b, vertex.radio_b)) {
            channels[vertex.id] = ca_channel;
        }
    }
    return channels;
}

std::vector<std::pair<int, int>> active_conflicts(const ConflictGraph& cg,
                                                  const ChannelAssignment& ca) {
    const std::vector<int> channels = vertex_channels(cg, ca);
    std::vector<std::pair<int, int>> active;
    for (const auto& [x, y] : cg.colocation_edges()) {
        if (channels[x] != 0 && channels[x] == channels[y]) active.emplace_back(x, y);
    }
    for (const auto& [x, y] : cg.interference_edges()) {
        if (channels[x] != 0 && channels[x] == channels[y]) active.emplace_back(x, y);
    }
    std::sort(active.begin(), active.end());
    return active;
}

std::string ConflictGraph::to_dot() const {
    std::ostringstream out;
    out << "graph emmcg {\n";
    out << "  node [shape=ellipse];\n";
    for (const LinkVertex& vertex : vertices_) {
        out << "  v" << vertex.id << " [label=\"" << vertex.node_a << "." << vertex.radio_a << "-"
            << vertex.node_b << "." << vertex.radio_b << "\"];\n";
    }
    for (const auto& [x, y] : colocation_edges_) {
        out << "  v" << x << " -- v" << y << " [style=dashed];\n";
    }
    for (const auto& [x, y] : interference_edges_) {
        out << "  v" << x << " -- v" << y << ";\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json ConflictGraph::adjacency_json() const {
    nlohmann::json doc;
    doc["vertex_count"] = vertex_count();
    nlohmann::json verts = nlohmann::json::array();
    for (const LinkVertex& vertex : vertices_) {
        verts.push_back({{"id", vertex.id},
                         {"a", {vertex.node_a, vertex.radio_a}},
                         {"b", {vertex.node_b, vertex.radio_b}}});
    }
    doc["vertices"] = std::move(verts);
    nlohmann::json colo = nlohmann::json::array();
    for (const auto& [x, y] : colocation_edges_) colo.push_back({x, y});
    doc["colocation"] = std::move(colo);
    nlohmann::json inter = nlohmann::json::array();
    for (const auto& [x, y] : interference_edges_) inter.push_back({x, y});
    doc["interference"] = std::move(inter);
    return doc;
}

}  // namespace meshca
