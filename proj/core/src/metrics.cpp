#include "meshca/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "meshca/error.hpp"

namespace meshca {

TidReport tid(const ConflictGraph& cg, const ChannelAssignment& ca) {
    const std::vector<int> channels = vertex_channels(cg, ca);
    TidReport report;
    report.conflict_numbers.assign(cg.vertex_count(), 0);
    auto count_edges = [&](const std::vector<std::pair<int, int>>& edges) {
        for (const auto& [x, y] : edges) {
            if (channels[x] != 0 && channels[x] == channels[y]) {
                ++report.tid;
                ++report.conflict_numbers[x];
                ++report.conflict_numbers[y];
            }
        }
    };
    count_edges(cg.colocation_edges());
    count_edges(cg.interference_edges());
    report.channel_radio_counts = ca.channel_counts(cg.source().channel_count());
    report.topology_preserved = net_topo_preserved(cg.source(), ca);
    return report;
}

std::vector<double> channel_distribution(const ChannelAssignment& ca, int channel_count) {
    const std::vector<long long> counts = ca.channel_counts(channel_count);
    long long min_nonzero = 0;
    for (long long count : counts) {
        if (count > 0 && (min_nonzero == 0 || count < min_nonzero)) min_nonzero = count;
    }
    std::vector<double> ratios(counts.size(), 0.0);
    if (min_nonzero == 0) return ratios;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) {
            ratios[i] = static_cast<double>(counts[i]) / static_cast<double>(min_nonzero);
        }
    }
    return ratios;
}

std::string format_distribution(std::span<const double> ratios) {
    std::string out;
    char buffer[32];
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        std::snprintf(buffer, sizeof(buffer), "%.2f", ratios[i]);
        if (i > 0) out += " : ";
        out += buffer;
    }
    return out;
}

bool net_topo_preserved(const WmnGraph& g, const ChannelAssignment& ca) {
    for (const auto& [u, v] : g.edges()) {
        if (!ca.share_channel(u, v)) return false;
    }
    return true;
}

std::vector<int> realized_links(const ConflictGraph& cg, const ChannelAssignment& ca) {
    const std::vector<int> channels = vertex_channels(cg, ca);
    std::vector<long long> conflicts(cg.vertex_count(), 0);
    auto accumulate = [&](const std::vector<std::pair<int, int>>& edges) {
        for (const auto& [x, y] : edges) {
            if (channels[x] != 0 && channels[x] == channels[y]) {
                ++conflicts[x];
                ++conflicts[y];
            }
        }
    };
    accumulate(cg.colocation_edges());
    accumulate(cg.interference_edges());

    const WmnGraph& g = cg.source();
    std::vector<int> chosen(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        int best = -1;
        for (int v = cg.edge_vertex_begin(e); v < cg.edge_vertex_end(e); ++v) {
            if (channels[v] == 0) continue;
            if (best == -1 || conflicts[v] < conflicts[best]) best = v;
        }
        chosen[e] = best;
    }
    return chosen;
}

int scheduling_rounds(const ConflictGraph& cg, const ChannelAssignment& ca) {
    const std::vector<int> channels = vertex_channels(cg, ca);
    const std::vector<int> chosen = realized_links(cg, ca);

    std::vector<int> picked;
    for (int v : chosen) {
        if (v >= 0) picked.push_back(v);
    }
    if (picked.empty()) return 1;

    // Active-conflict adjacency induced on the chosen realizations.
    std::vector<int> position(cg.vertex_count(), -1);
    for (std::size_t i = 0; i < picked.size(); ++i) position[picked[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> induced(picked.size());
    for (std::size_t i = 0; i < picked.size(); ++i) {
        const int v = picked[i];
        for (int u : cg.adjacency()[v]) {
            const int j = position[u];
            if (j >= 0 && channels[v] == channels[u]) induced[i].push_back(j);
        }
    }

    std::vector<int> order(picked.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (induced[a].size() != induced[b].size()) return induced[a].size() > induced[b].size();
        return picked[a] < picked[b];
    });

    std::vector<int> color(picked.size(), 0);
    int rounds = 0;
    std::vector<char> used;
    for (int i : order) {
        used.assign(picked.size() + 2, 0);
        for (int j : induced[i]) {
            if (color[j] > 0) used[color[j]] = 1;
        }
        int c = 1;
        while (used[c]) ++c;
        color[i] = c;
        rounds = std::max(rounds, c);
    }
    return std::max(rounds, 1);
}

std::string csv_header(int channel_count) {
    std::string header = "scenario,algorithm,tid,topo_preserved,rounds";
    for (int c = 1; c <= channel_count; ++c) {
        header += ",ch" + std::to_string(c) + "_radios";
    }
    return header;
}

std::string csv_row(const std::string& scenario, const std::string& algorithm,
                    const TidReport& report, int rounds, int channel_count) {
    std::ostringstream out;
    out << scenario << ',' << algorithm << ',' << report.tid << ','
        << (report.topology_preserved ? "true" : "false") << ',' << rounds;
    for (int c = 1; c <= channel_count; ++c) {
        const long long count =
            c <= static_cast<int>(report.channel_radio_counts.size())
                ? report.channel_radio_counts[c - 1]
                : 0;
        out << ',' << count;
    }
    return out.str();
}

}  // namespace meshca
