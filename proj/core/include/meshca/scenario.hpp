#ifndef MESHCA_SCENARIO_HPP
#define MESHCA_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "meshca/assignment.hpp"
#include "meshca/metrics.hpp"
#include "meshca/wmn_graph.hpp"

namespace meshca {

struct GridSpec {
    int n = 0;
};

struct RandomSpec {
    int nodes = 0;
    double area_m = 0.0;
    double range_m = 0.0;
};

struct FileSpec {
    std::filesystem::path path;
};

/// Valid algorithm names for scenarios and the CLI, with their report labels:
///   ois -> ois-ca, eizm -> eizm-ca, mais -> mais-ca,
///   bfs-lite -> bfs-ca-lite, brute -> brute-force, uniform -> uniform
const std::vector<std::string>& algorithm_names();
std::string algorithm_label(const std::string& name);

constexpr std::uint64_t kDefaultBruteBudget = 1ull << 24;

struct Scenario {
    std::string name;  // empty: derived from the topology
    std::variant<GridSpec, RandomSpec, FileSpec> topology = GridSpec{5};
    int radios = 2;        // generated topologies only
    int channels = 0;      // 0: the loaded file's channel count (file topologies only)
    std::string algorithm = "ois";
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
    bool export_dot = false;
    int gateway = 0;
    std::uint64_t brute_budget = kDefaultBruteBudget;
};

struct ScenarioResult {
    std::string name;
    std::string algorithm_label;
    int channels = 0;
    int grid_n = 0;  // 0 for non-grid topologies
    int total_radios = 0;
    TidReport report;
    int rounds = 0;
    std::vector<double> distribution;
    CaTrace trace;
    std::string csv_line;
    std::filesystem::path ca_path;
};

/// Display name of a scenario: the explicit name, or grid<n>, rand<nodes>-s<seed>
/// or the topology file's stem.
std::string scenario_name(const Scenario& scenario);

/// The scenario's WMN graph. Generated topologies require scenario.channels > 0;
/// for file topologies channels == 0 keeps the file's channel count.
WmnGraph build_topology(const Scenario& scenario);

/// Builds the topology, runs the algorithm and writes the report bundle into
/// out_dir: <scenario>.wmn.json, <scenario>-<label>.ca.json,
/// <scenario>-<label>.csv, <scenario>-<label>.dist.txt and optionally
/// <scenario>-<label>.emmcg.dot. Identical scenarios produce byte-identical
/// files.
ScenarioResult run_scenario(const Scenario& scenario);

struct SuiteConfig {
    std::vector<Scenario> scenarios;
    std::filesystem::path out_dir = ".";
};

/// Parses {"out": string, "scenarios": [...]} where each entry carries
/// exactly one of "grid": n, "random": {"nodes", "area_m", "range_m"} or
/// "wmn": path, plus optional "name", "radios", "channels", "alg", "seed",
/// "gateway", "dot".
SuiteConfig load_suite_config(const nlohmann::json& doc);

struct SuiteFailure {
    std::string name;
    std::string message;
    int exit_code = 1;
};

struct SuiteResult {
    std::vector<ScenarioResult> results;
    std::vector<SuiteFailure> failures;
    std::filesystem::path csv_path;
    std::filesystem::path table_path;
    std::filesystem::path series_path;
};

/// Runs every scenario (continuing past failures), writes suite.csv with the
/// rows of the successful ones, a channel-distribution table grouped by grid
/// size, and a TID-versus-grid-size series.
SuiteResult run_suite(const SuiteConfig& config);

/// Human-readable channel-distribution table of the suite results.
std::string distribution_table(const std::vector<ScenarioResult>& results);

/// Dispatches a scenario algorithm name (see algorithm_names) on a built
/// conflict graph.
CaTrace run_algorithm(const std::string& name, const ConflictGraph& cg, int channel_count,
                      const AlgorithmOptions& options, std::uint64_t brute_budget);

/// Exit code for an error kind: configuration problems map to 2, algorithm
/// precondition and budget failures to 3.
int exit_code_for(const class Error& error);

}  // namespace meshca

#endif
