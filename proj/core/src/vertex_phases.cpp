#include <algorithm>
#include <climits>
#include <deque>
#include <string>

#include "meshca/assignment.hpp"
#include "meshca/error.hpp"

namespace meshca {

namespace {

/// Monochromatic-edge counter for the vertex stage of the algorithms: before
/// channels are folded onto radios, TID is the number of equal-channel
/// adjacent vertex pairs. recolor is O(degree).
class ColorConflicts {
  public:
    ColorConflicts(const Adjacency& adj, std::vector<int> colors)
        : adj_(&adj), colors_(std::move(colors)) {
        for (std::size_t v = 0; v < adj.size(); ++v) {
            for (int u : adj[v]) {
                if (static_cast<int>(v) < u && colors_[v] == colors_[u]) ++count_;
            }
        }
    }

    long long count() const { return count_; }
    int color(int v) const { return colors_[v]; }
    const std::vector<int>& colors() const { return colors_; }

    void recolor(int v, int c) {
        if (colors_[v] == c) return;
        for (int u : (*adj_)[v]) {
            if (colors_[u] == colors_[v]) --count_;
            if (colors_[u] == c) ++count_;
        }
        colors_[v] = c;
    }

  private:
    const Adjacency* adj_;
    std::vector<int> colors_;
    long long count_ = 0;
};

int count_mutual_neighbors(const Adjacency& adj, int a, int b) {
    const std::vector<int>& na = adj[a];
    const std::vector<int>& nb = adj[b];
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
        if (na[i] == nb[j]) {
            ++count;
            ++i;
            ++j;
        } else if (na[i] < nb[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

int next_cyclic(int channel, int channel_count) { return channel % channel_count + 1; }

void check_channel_count(int channel_count) {
    if (channel_count < 1) {
        throw Error(ErrorKind::invalid_argument, "channel count must be at least 1");
    }
}

}  // namespace

IsPartition partition_independent_sets(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    IsPartition partition;
    std::vector<int> set_of(n, -1);
    std::vector<char> blocked;
    for (int v = 0; v < n; ++v) {
        blocked.assign(partition.sets.size(), 0);
        for (int u : adj[v]) {
            if (set_of[u] >= 0) blocked[set_of[u]] = 1;
        }
        int best = -1;
        for (std::size_t s = 0; s < partition.sets.size(); ++s) {
            if (blocked[s]) continue;
            if (best < 0 || partition.sets[s].size() < partition.sets[best].size()) {
                best = static_cast<int>(s);
            }
        }
        if (best < 0) {
            best = static_cast<int>(partition.sets.size());
            partition.sets.emplace_back();
        }
        partition.sets[best].push_back(v);
        set_of[v] = best;
    }
    return partition;
}

IsPartition partition_independent_sets(const ConflictGraph& cg) {
    return partition_independent_sets(cg.adjacency());
}

LevelStructure level_structure(const Adjacency& adj, int root) {
    const int n = static_cast<int>(adj.size());
    if (root < 0 || root >= n) {
        throw Error(ErrorKind::invalid_argument, "root vertex " + std::to_string(root) +
                                                      " outside 0.." + std::to_string(n - 1));
    }
    LevelStructure ls;
    ls.root = root;
    std::vector<int> dist(n, -1);
    std::deque<int> queue = {root};
    dist[root] = 0;
    ls.levels.push_back({root});
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : adj[v]) {
            if (dist[u] >= 0) continue;
            dist[u] = dist[v] + 1;
            if (static_cast<int>(ls.levels.size()) <= dist[u]) ls.levels.emplace_back();
            ls.levels[dist[u]].push_back(u);
            queue.push_back(u);
        }
    }
    return ls;
}

VertexPhaseResult ois_vertex_phase(const Adjacency& adj, int channel_count) {
    check_channel_count(channel_count);
    const IsPartition partition = partition_independent_sets(adj);
    VertexPhaseResult result;
    result.channels.assign(adj.size(), 0);
    int channel = 1;
    for (const std::vector<int>& set : partition.sets) {
        for (int v : set) {
            result.channels[v] = channel;
            result.touch_order.push_back(v);
        }
        channel = next_cyclic(channel, channel_count);
    }
    return result;
}

VertexPhaseResult eizm_vertex_phase(const Adjacency& adj, int channel_count,
                                    std::optional<int> reference) {
    check_channel_count(channel_count);
    const int n = static_cast<int>(adj.size());
    VertexPhaseResult result;
    if (n == 0) return result;

    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());

    int root;
    if (reference) {
        root = *reference;
        if (root < 0 || root >= n) {
            throw Error(ErrorKind::invalid_argument,
                        "reference vertex " + std::to_string(root) + " outside the graph");
        }
    } else {
        root = 0;
        for (int v = 1; v < n; ++v) {
            if (degree[v] > degree[root]) root = v;
        }
    }

    const LevelStructure ls = level_structure(adj, root);

    result.channels.assign(n, 0);
    int channel = 1;
    for (const std::vector<int>& level : ls.levels) {
        for (int v : level) {
            result.channels[v] = channel;
            result.touch_order.push_back(v);
        }
        channel = next_cyclic(channel, channel_count);
    }

    ColorConflicts conflicts(adj, result.channels);
    for (const std::vector<int>& level : ls.levels) {
        std::vector<int> remaining = level;
        if (reference) {
            std::erase(remaining, root);  // an explicit reference anchors the walk but keeps
                                          // its level channel
        }
        int previous = -1;
        while (!remaining.empty()) {
            int pick = remaining.front();
            if (previous < 0) {
                for (int v : remaining) {
                    if (degree[v] > degree[pick] || (degree[v] == degree[pick] && v < pick)) {
                        pick = v;
                    }
                }
            } else {
                int pick_mutual = count_mutual_neighbors(adj, pick, previous);
                for (int v : remaining) {
                    if (v == pick) continue;
                    const int mutual = count_mutual_neighbors(adj, v, previous);
                    if (mutual > pick_mutual ||
                        (mutual == pick_mutual &&
                         (degree[v] > degree[pick] ||
                          (degree[v] == degree[pick] && v < pick)))) {
                        pick = v;
                        pick_mutual = mutual;
                    }
                }
            }

            const int current = conflicts.color(pick);
            long long best_value = LLONG_MAX;
            int best_channel = current;
            long long current_value = 0;
            for (int c = 1; c <= channel_count; ++c) {
                conflicts.recolor(pick, c);
                const long long value = conflicts.count();
                if (c == current) current_value = value;
                if (value < best_value) {
                    best_value = value;
                    best_channel = c;
                }
            }
            conflicts.recolor(pick, current_value == best_value ? current : best_channel);

            result.touch_order.push_back(pick);
            result.eiz_sequence.push_back(pick);
            previous = pick;
            std::erase(remaining, pick);
        }
    }
    result.channels = conflicts.colors();
    return result;
}

VertexPhaseResult mais_vertex_phase(const Adjacency& adj, int channel_count) {
    check_channel_count(channel_count);
    const int n = static_cast<int>(adj.size());
    VertexPhaseResult result;
    result.channels.assign(n, 0);

    std::vector<char> alive(n, 1);
    int alive_count = n;
    int channel = 1;
    std::vector<int> residual_degree(n, 0);
    std::vector<char> candidate(n, 0);
    while (alive_count > 0) {
        // Residual degrees are frozen at the start of each set construction.
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            candidate[v] = 1;
            residual_degree[v] = 0;
            for (int u : adj[v]) {
                if (alive[u]) ++residual_degree[v];
            }
        }
        std::vector<int> independent_set;
        while (true) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (!alive[v] || !candidate[v]) continue;
                if (pick < 0 || residual_degree[v] < residual_degree[pick]) pick = v;
            }
            if (pick < 0) break;
            independent_set.push_back(pick);
            candidate[pick] = 0;
            for (int u : adj[pick]) candidate[u] = 0;
        }
        for (int v : independent_set) {
            result.channels[v] = channel;
            result.touch_order.push_back(v);
            alive[v] = 0;
            --alive_count;
        }
        channel = next_cyclic(channel, channel_count);
    }
    return result;
}

VertexPhaseResult bfs_vertex_phase(const Adjacency& adj, int channel_count, int start_vertex) {
    check_channel_count(channel_count);
    const int n = static_cast<int>(adj.size());
    if (start_vertex < 0 || start_vertex >= n) {
        throw Error(ErrorKind::invalid_argument,
                    "start vertex " + std::to_string(start_vertex) + " outside the graph");
    }
    VertexPhaseResult result;
    result.channels.assign(n, 0);
    std::vector<char> seen(n, 0);
    std::deque<int> queue = {start_vertex};
    seen[start_vertex] = 1;
    int visited = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        result.channels[v] = visited % channel_count + 1;
        result.touch_order.push_back(v);
        ++visited;
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
        }
    }
    return result;
}

}  // namespace meshca
