#ifndef MESHCA_WMN_IO_HPP
#define MESHCA_WMN_IO_HPP

#include <filesystem>

#include <nlohmann/json.hpp>

#include "meshca/wmn_graph.hpp"

namespace meshca {

/// Document shape:
///   {"range_m": number, "channel_count": int,
///    "nodes": [{"id": int, "x": number, "y": number, "radios": int}, ...]}
/// Edges are never serialized. A document may still carry an "edges" array
/// (e.g. exported by another tool); the loader then checks it against the
/// derived edge set and raises ErrorKind::edge_mismatch on disagreement.
WmnGraph load_wmn(const nlohmann::json& doc);
nlohmann::json save_wmn(const WmnGraph& g);

WmnGraph load_wmn_file(const std::filesystem::path& path);
void save_wmn_file(const WmnGraph& g, const std::filesystem::path& path);

}  // namespace meshca

#endif
