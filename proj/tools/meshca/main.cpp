#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "meshca/conflict_graph.hpp"
#include "meshca/error.hpp"
#include "meshca/scenario.hpp"
#include "meshca/wmn_io.hpp"

namespace {

struct TopologyFlags {
    int grid_n = 0;
    std::vector<double> random_spec;
    std::string wmn_path;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* random_opt = nullptr;
    CLI::Option* wmn_opt = nullptr;
    CLI::Option* radios_opt = nullptr;
    CLI::Option* channels_opt = nullptr;
};

struct RunFlags {
    TopologyFlags topology;
    int radios = 2;
    int channels = 3;
    std::string algorithm = "ois";
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    bool export_dot = false;
    int gateway = 0;
    std::uint64_t budget = meshca::kDefaultBruteBudget;
    std::string name;
};

void add_topology_flags(CLI::App* cmd, TopologyFlags& flags) {
    flags.grid_opt = cmd->add_option("--grid", flags.grid_n, "n x n grid topology");
    flags.random_opt = cmd->add_option("--random", flags.random_spec,
                                       "random topology: nodes,area_m,range_m")
                           ->delimiter(',')
                           ->expected(3);
    flags.wmn_opt = cmd->add_option("--wmn", flags.wmn_path, "topology file (.wmn.json)");
    flags.grid_opt->excludes(flags.random_opt)->excludes(flags.wmn_opt);
    flags.random_opt->excludes(flags.wmn_opt);
}

// Shared by run and export-dot; throws on usage conflicts the option parser
// cannot express.
void fill_topology(const RunFlags& flags, meshca::Scenario& scenario) {
    const TopologyFlags& t = flags.topology;
    if (t.grid_opt->count() + t.random_opt->count() + t.wmn_opt->count() != 1)
        throw meshca::Error(meshca::ErrorKind::invalid_argument,
                            "exactly one of --grid, --random, --wmn is required");
    if (t.grid_opt->count()) scenario.topology = meshca::GridSpec{flags.topology.grid_n};
    if (t.random_opt->count())
        scenario.topology =
            meshca::RandomSpec{static_cast<int>(t.random_spec[0]), t.random_spec[1],
                               t.random_spec[2]};
    if (t.wmn_opt->count()) {
        if (t.radios_opt->count())
            throw meshca::Error(meshca::ErrorKind::invalid_argument,
                                "--radios does not apply to file topologies");
        scenario.topology = meshca::FileSpec{flags.topology.wmn_path};
        if (!t.channels_opt->count()) scenario.channels = 0;
    }
}

meshca::Scenario to_scenario(const RunFlags& flags) {
    meshca::Scenario scenario;
    scenario.name = flags.name;
    scenario.radios = flags.radios;
    scenario.channels = flags.channels;
    scenario.algorithm = flags.algorithm;
    scenario.seed = flags.seed;
    scenario.out_dir = flags.out_dir;
    scenario.export_dot = flags.export_dot;
    scenario.gateway = flags.gateway;
    scenario.brute_budget = flags.budget;
    fill_topology(flags, scenario);
    return scenario;
}

int do_run(const RunFlags& flags) {
    meshca::Scenario scenario = to_scenario(flags);
    meshca::ScenarioResult result = meshca::run_scenario(scenario);

    std::cout << "scenario: " << result.name << '\n'
              << "algorithm: " << result.algorithm_label << '\n'
              << "nodes: " << result.trace.final_ca.node_count()
              << "  radios: " << result.total_radios << "  channels: " << result.channels << '\n'
              << "tid: " << result.report.tid << " (initial " << result.trace.tid_sequence[0]
              << ", post-topology " << result.trace.tid_sequence[1] << ")\n"
              << "topology: " << (result.report.topology_preserved ? "preserved" : "broken")
              << '\n'
              << "rounds: " << result.rounds << '\n'
              << "distribution: " << meshca::format_distribution(result.distribution) << '\n'
              << "ca: " << result.ca_path.string() << '\n';
    return 0;
}

int do_suite(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in)
        throw meshca::Error(meshca::ErrorKind::io, "cannot read " + config_path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw meshca::Error(meshca::ErrorKind::schema, e.what());
    }

    meshca::SuiteResult suite = meshca::run_suite(meshca::load_suite_config(doc));
    for (const auto& result : suite.results)
        std::cout << "ok " << result.name << ' ' << result.algorithm_label
                  << " tid=" << result.report.tid << " rounds=" << result.rounds << '\n';
    int exit_code = 0;
    for (const auto& failure : suite.failures) {
        std::cerr << "fail " << failure.name << ": " << failure.message << '\n';
        exit_code = std::max(exit_code, failure.exit_code);
    }
    std::cout << "wrote " << suite.csv_path.string() << ' ' << suite.table_path.string() << ' '
              << suite.series_path.string() << '\n';
    return exit_code;
}

int do_export_dot(const RunFlags& flags) {
    meshca::Scenario scenario = to_scenario(flags);
    meshca::WmnGraph g = meshca::build_topology(scenario);
    meshca::ConflictGraph cg = meshca::build_emmcg(g);

    std::filesystem::create_directories(scenario.out_dir);
    std::filesystem::path dot_path =
        scenario.out_dir / (meshca::scenario_name(scenario) + ".emmcg.dot");
    std::ofstream out(dot_path);
    if (!out)
        throw meshca::Error(meshca::ErrorKind::io, "cannot write " + dot_path.string());
    out << cg.to_dot();
    std::cout << dot_path.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"channel assignment for multi-radio wireless mesh networks"};
    app.require_subcommand(1);

    RunFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "run one scenario and write its report bundle");
    add_topology_flags(run_cmd, run_flags.topology);
    run_flags.topology.radios_opt =
        run_cmd->add_option("--radios", run_flags.radios, "radios per node (generated topologies)");
    run_flags.topology.channels_opt =
        run_cmd->add_option("--channels", run_flags.channels, "number of orthogonal channels");
    run_cmd->add_option("--alg", run_flags.algorithm, "algorithm")
        ->check(CLI::IsMember(meshca::algorithm_names()));
    run_cmd->add_option("--seed", run_flags.seed, "random seed");
    run_cmd->add_option("--out", run_flags.out_dir, "output directory");
    run_cmd->add_flag("--dot", run_flags.export_dot, "also export the conflict graph as .dot");
    run_cmd->add_option("--gateway", run_flags.gateway, "gateway node id (bfs-lite)");
    run_cmd->add_option("--budget", run_flags.budget, "state budget for the brute-force search");
    run_cmd->add_option("--name", run_flags.name, "scenario name override");

    std::string suite_config;
    CLI::App* suite_cmd = app.add_subcommand("suite", "run a suite config and merge the reports");
    suite_cmd->add_option("config", suite_config, "suite config (.json)")->required();

    RunFlags dot_flags;
    CLI::App* dot_cmd =
        app.add_subcommand("export-dot", "write the conflict graph of a topology as .dot");
    add_topology_flags(dot_cmd, dot_flags.topology);
    dot_flags.topology.radios_opt =
        dot_cmd->add_option("--radios", dot_flags.radios, "radios per node (generated topologies)");
    dot_flags.topology.channels_opt =
        dot_cmd->add_option("--channels", dot_flags.channels, "number of orthogonal channels");
    dot_cmd->add_option("--out", dot_flags.out_dir, "output directory");
    dot_cmd->add_option("--name", dot_flags.name, "scenario name override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_flags);
        if (suite_cmd->parsed()) return do_suite(suite_config);
        if (dot_cmd->parsed()) return do_export_dot(dot_flags);
    } catch (const meshca::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return meshca::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
