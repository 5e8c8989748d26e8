#include "meshca/wmn_io.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "meshca/error.hpp"

namespace meshca {

namespace {

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw Error(ErrorKind::schema, std::string("missing key \"") + key + "\"");
    }
    return *it;
}

double require_number(const nlohmann::json& doc, const char* key) {
    const nlohmann::json& value = require(doc, key);
    if (!value.is_number()) {
        throw Error(ErrorKind::schema, std::string("\"") + key + "\" must be a number");
    }
    return value.get<double>();
}

int require_int(const nlohmann::json& doc, const char* key) {
    const nlohmann::json& value = require(doc, key);
    if (!value.is_number_integer()) {
        throw Error(ErrorKind::schema, std::string("\"") + key + "\" must be an integer");
    }
    return value.get<int>();
}

}  // namespace

WmnGraph load_wmn(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw Error(ErrorKind::schema, "document root must be an object");
    }
    const double range_m = require_number(doc, "range_m");
    const int channel_count = require_int(doc, "channel_count");
    const nlohmann::json& node_list = require(doc, "nodes");
    if (!node_list.is_array() || node_list.empty()) {
        throw Error(ErrorKind::schema, "\"nodes\" must be a non-empty array");
    }

    std::vector<Node> nodes;
    nodes.reserve(node_list.size());
    for (const nlohmann::json& entry : node_list) {
        if (!entry.is_object()) {
            throw Error(ErrorKind::schema, "node entries must be objects");
        }
        Node node;
        node.id = require_int(entry, "id");
        node.x = require_number(entry, "x");
        node.y = require_number(entry, "y");
        node.radios = require_int(entry, "radios");
        nodes.push_back(node);
    }

    WmnGraph g(std::move(nodes), range_m, channel_count);

    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array()) {
            throw Error(ErrorKind::schema, "\"edges\" must be an array of [u, v] pairs");
        }
        std::vector<std::pair<int, int>> declared;
        for (const nlohmann::json& pair : *it) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer()) {
                throw Error(ErrorKind::schema, "\"edges\" must be an array of [u, v] pairs");
            }
            int u = pair[0].get<int>();
            int v = pair[1].get<int>();
            if (u > v) std::swap(u, v);
            declared.emplace_back(u, v);
        }
        std::sort(declared.begin(), declared.end());
        declared.erase(std::unique(declared.begin(), declared.end()), declared.end());
        if (declared != g.edges()) {
            throw Error(ErrorKind::edge_mismatch,
                        "document lists " + std::to_string(declared.size()) + " edges, derived " +
                            std::to_string(g.edges().size()) + " from positions and range");
        }
    }

    return g;
}

nlohmann::json save_wmn(const WmnGraph& g) {
    nlohmann::json doc;
    doc["range_m"] = g.range_m();
    doc["channel_count"] = g.channel_count();
    nlohmann::json nodes = nlohmann::json::array();
    for (const Node& node : g.nodes()) {
        nodes.push_back({{"id", node.id}, {"x", node.x}, {"y", node.y}, {"radios", node.radios}});
    }
    doc["nodes"] = std::move(nodes);
    return doc;
}

WmnGraph load_wmn_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::schema, path.string() + ": " + e.what());
    }
    return load_wmn(doc);
}

void save_wmn_file(const WmnGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::io, "cannot write " + path.string());
    }
    out << save_wmn(g).dump(2) << '\n';
}

}  // namespace meshca
