#include "meshca/ca_io.hpp"

#include <map>
#include <utility>

#include "meshca/error.hpp"

namespace meshca {

nlohmann::json save_ca(const CaTrace& trace, std::uint64_t seed) {
    nlohmann::json doc;
    doc["algorithm"] = trace.algorithm;
    doc["seed"] = seed;
    nlohmann::json channels = nlohmann::json::object();
    const ChannelAssignment& ca = trace.final_ca;
    for (int node = 0; node < ca.node_count(); ++node) {
        for (int radio = 0; radio < ca.radios_of(node); ++radio) {
            channels[std::to_string(node) + "." + std::to_string(radio)] = ca.channel(node, radio);
        }
    }
    doc["channels"] = std::move(channels);
    doc["tid_trace"] = trace.tid_sequence;
    return doc;
}

LoadedCa load_ca(const nlohmann::json& doc, const WmnGraph& g) {
    if (!doc.is_object()) {
        throw Error(ErrorKind::schema, "assignment document root must be an object");
    }
    auto algorithm = doc.find("algorithm");
    if (algorithm == doc.end() || !algorithm->is_string()) {
        throw Error(ErrorKind::schema, "\"algorithm\" must be a string");
    }
    auto seed = doc.find("seed");
    if (seed == doc.end() || !seed->is_number_integer()) {
        throw Error(ErrorKind::schema, "\"seed\" must be an integer");
    }
    auto channels = doc.find("channels");
    if (channels == doc.end() || !channels->is_object()) {
        throw Error(ErrorKind::schema, "\"channels\" must be an object");
    }

    std::map<std::pair<int, int>, int> parsed;
    for (const auto& [key, value] : channels->items()) {
        const std::size_t dot = key.find('.');
        if (dot == std::string::npos || !value.is_number_integer()) {
            throw Error(ErrorKind::schema, "channel entries must map \"node.radio\" to an integer");
        }
        int node = 0;
        int radio = 0;
        try {
            node = std::stoi(key.substr(0, dot));
            radio = std::stoi(key.substr(dot + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::schema, "cannot parse radio key \"" + key + "\"");
        }
        parsed[{node, radio}] = value.get<int>();
    }

    LoadedCa loaded;
    loaded.algorithm = algorithm->get<std::string>();
    loaded.seed = seed->get<std::uint64_t>();
    loaded.ca = ChannelAssignment::from_map(g, parsed);
    if (auto trace = doc.find("tid_trace"); trace != doc.end()) {
        if (!trace->is_array()) {
            throw Error(ErrorKind::schema, "\"tid_trace\" must be an array");
        }
        for (const nlohmann::json& value : *trace) {
            if (!value.is_number_integer()) {
                throw Error(ErrorKind::schema, "\"tid_trace\" entries must be integers");
            }
            loaded.tid_trace.push_back(value.get<long long>());
        }
    }
    return loaded;
}

}  // namespace meshca
