#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meshca/ca_io.hpp"
#include "meshca/conflict_graph.hpp"
#include "meshca/error.hpp"
#include "meshca/metrics.hpp"
#include "meshca/scenario.hpp"
#include "meshca/wmn_io.hpp"
#include "support.hpp"

namespace meshca {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "meshca_scenario_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path);
    EXPECT_TRUE(in.is_open()) << path;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

TEST(ScenarioName, DerivedFromTopologyUnlessExplicit) {
    Scenario scenario;
    scenario.topology = GridSpec{7};
    EXPECT_EQ(scenario_name(scenario), "grid7");

    scenario.name = "custom";
    EXPECT_EQ(scenario_name(scenario), "custom");

    scenario.name.clear();
    scenario.topology = RandomSpec{30, 1200.0, 250.0};
    scenario.seed = 4;
    EXPECT_EQ(scenario_name(scenario), "rand30-s4");

    scenario.topology = FileSpec{"/data/campus.wmn.json"};
    EXPECT_EQ(scenario_name(scenario), "campus.wmn");
}

TEST(BuildTopology, GeneratedTopologiesNeedChannels) {
    Scenario scenario;
    scenario.topology = GridSpec{3};
    scenario.channels = 0;
    try {
        build_topology(scenario);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    }
    scenario.channels = 3;
    EXPECT_EQ(build_topology(scenario).node_count(), 9);
}

TEST(BuildTopology, FileTopologyKeepsOrOverridesChannels) {
    const fs::path dir = fresh_dir("file_topology");
    const fs::path path = dir / "net.wmn.json";
    save_wmn_file(generate_grid(2, 2, 3), path);

    Scenario scenario;
    scenario.topology = FileSpec{path};
    scenario.channels = 0;
    EXPECT_EQ(build_topology(scenario).channel_count(), 3);

    scenario.channels = 4;
    const WmnGraph overridden = build_topology(scenario);
    EXPECT_EQ(overridden.channel_count(), 4);
    EXPECT_EQ(overridden.node_count(), 4);
    fs::remove_all(dir);
}

TEST(RunScenario, WritesReportBundle) {
    const fs::path dir = fresh_dir("bundle");
    Scenario scenario;
    scenario.topology = GridSpec{3};
    scenario.channels = 3;
    scenario.out_dir = dir;

    const ScenarioResult result = run_scenario(scenario);
    EXPECT_EQ(result.name, "grid3");
    EXPECT_EQ(result.algorithm_label, "ois-ca");
    EXPECT_EQ(result.grid_n, 3);
    EXPECT_EQ(result.total_radios, 18);
    EXPECT_EQ(result.report.tid, 26);
    EXPECT_TRUE(result.report.topology_preserved);

    EXPECT_TRUE(fs::exists(dir / "grid3.wmn.json"));
    EXPECT_TRUE(fs::exists(dir / "grid3-ois-ca.ca.json"));
    EXPECT_TRUE(fs::exists(dir / "grid3-ois-ca.csv"));
    EXPECT_TRUE(fs::exists(dir / "grid3-ois-ca.dist.txt"));
    EXPECT_FALSE(fs::exists(dir / "grid3-ois-ca.emmcg.dot"));
    EXPECT_EQ(result.ca_path, dir / "grid3-ois-ca.ca.json");

    const std::string csv = read_text(dir / "grid3-ois-ca.csv");
    EXPECT_EQ(csv, csv_header(3) + "\n" + result.csv_line + "\n");
    const std::string dist = read_text(dir / "grid3-ois-ca.dist.txt");
    EXPECT_EQ(dist.substr(0, dist.find('\n')), "channel,radios,ratio");
    fs::remove_all(dir);
}

TEST(RunScenario, SavedAssignmentReloadsAgainstSavedTopology) {
    const fs::path dir = fresh_dir("reload");
    Scenario scenario;
    scenario.topology = GridSpec{3};
    scenario.channels = 3;
    scenario.algorithm = "eizm";
    scenario.out_dir = dir;

    const ScenarioResult result = run_scenario(scenario);
    const WmnGraph g = load_wmn_file(dir / "grid3.wmn.json");
    const json doc = json::parse(read_text(result.ca_path));
    const LoadedCa loaded = load_ca(doc, g);

    EXPECT_EQ(loaded.algorithm, "eizm-ca");
    EXPECT_EQ(loaded.seed, 0u);
    EXPECT_EQ(loaded.ca, result.trace.final_ca);
    EXPECT_EQ(loaded.tid_trace, result.trace.tid_sequence);

    const ConflictGraph cg(g);
    EXPECT_EQ(tid(cg, loaded.ca).tid, loaded.tid_trace[2]);
    EXPECT_TRUE(net_topo_preserved(g, loaded.ca));
    fs::remove_all(dir);
}

TEST(RunScenario, RerunsAreByteIdentical) {
    Scenario scenario;
    scenario.topology = GridSpec{3};
    scenario.channels = 3;

    const fs::path first = fresh_dir("identical_a");
    const fs::path second = fresh_dir("identical_b");
    scenario.out_dir = first;
    run_scenario(scenario);
    scenario.out_dir = second;
    run_scenario(scenario);

    for (const char* file : {"grid3.wmn.json", "grid3-ois-ca.ca.json", "grid3-ois-ca.csv",
                             "grid3-ois-ca.dist.txt"}) {
        EXPECT_EQ(read_text(first / file), read_text(second / file)) << file;
    }
    fs::remove_all(first);
    fs::remove_all(second);
}

TEST(RunScenario, DotExportIsOptIn) {
    const fs::path dir = fresh_dir("dot");
    Scenario scenario;
    scenario.topology = GridSpec{2};
    scenario.channels = 3;
    scenario.export_dot = true;
    scenario.out_dir = dir;
    run_scenario(scenario);
    const std::string dot = read_text(dir / "grid2-ois-ca.emmcg.dot");
    EXPECT_NE(dot.find("graph emmcg"), std::string::npos);
    fs::remove_all(dir);
}

TEST(LoadSuiteConfig, ParsesAllTopologyForms) {
    const json doc = {
        {"out", "reports"},
        {"scenarios",
         {{{"grid", 4}, {"alg", "mais"}, {"radios", 3}, {"channels", 4}},
          {{"random", {{"nodes", 20}, {"area_m", 900.0}, {"range_m", 250.0}}}, {"seed", 9}},
          {{"wmn", "net.wmn.json"}, {"name", "campus"}, {"dot", true}}}},
    };
    const SuiteConfig config = load_suite_config(doc);
    EXPECT_EQ(config.out_dir, fs::path("reports"));
    ASSERT_EQ(config.scenarios.size(), 3u);

    EXPECT_EQ(std::get<GridSpec>(config.scenarios[0].topology).n, 4);
    EXPECT_EQ(config.scenarios[0].algorithm, "mais");
    EXPECT_EQ(config.scenarios[0].radios, 3);
    EXPECT_EQ(config.scenarios[0].channels, 4);

    const auto& random = std::get<RandomSpec>(config.scenarios[1].topology);
    EXPECT_EQ(random.nodes, 20);
    EXPECT_EQ(config.scenarios[1].seed, 9u);
    EXPECT_EQ(config.scenarios[1].channels, 3);

    EXPECT_EQ(std::get<FileSpec>(config.scenarios[2].topology).path, fs::path("net.wmn.json"));
    EXPECT_EQ(config.scenarios[2].name, "campus");
    EXPECT_EQ(config.scenarios[2].channels, 0);
    EXPECT_TRUE(config.scenarios[2].export_dot);
}

TEST(LoadSuiteConfig, RejectsMalformedDocuments) {
    const std::vector<json> bad = {
        json::array(),
        json{{"scenarios", "nope"}},
        json{{"scenarios", {{{"grid", 3}, {"random", {{"nodes", 5}, {"area_m", 1.0}, {"range_m", 1.0}}}}}}},
        json{{"scenarios", {{{"name", "missing-topology"}}}}},
        json{{"scenarios", {{{"grid", 3}, {"alg", "simulated-annealing"}}}}},
        json{{"scenarios", {{{"grid", "three"}}}}},
        json{{"scenarios", {{{"grid", 3}, {"seed", "zero"}}}}},
    };
    for (std::size_t i = 0; i < bad.size(); ++i) {
        try {
            load_suite_config(bad[i]);
            ADD_FAILURE() << "config " << i << " should have been rejected";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::schema) << "config " << i;
        }
    }
}

TEST(RunSuite, ContinuesPastFailures) {
    const fs::path dir = fresh_dir("suite_partial");
    SuiteConfig config;
    config.out_dir = dir;

    Scenario ok;
    ok.topology = GridSpec{2};
    ok.channels = 3;
    ok.algorithm = "brute";
    config.scenarios.push_back(ok);

    Scenario too_big = ok;
    too_big.topology = GridSpec{3};
    config.scenarios.push_back(too_big);

    Scenario unbuildable;
    unbuildable.topology = RandomSpec{3, 10000.0, 1.0};
    unbuildable.channels = 3;
    config.scenarios.push_back(unbuildable);

    const SuiteResult suite = run_suite(config);
    ASSERT_EQ(suite.results.size(), 1u);
    EXPECT_EQ(suite.results[0].name, "grid2");
    EXPECT_EQ(suite.results[0].report.tid, 2);

    ASSERT_EQ(suite.failures.size(), 2u);
    EXPECT_EQ(suite.failures[0].name, "grid3");
    EXPECT_EQ(suite.failures[0].exit_code, 3);
    EXPECT_EQ(suite.failures[1].name, "rand3-s0");
    EXPECT_EQ(suite.failures[1].exit_code, 2);

    const std::string csv = read_text(suite.csv_path);
    EXPECT_NE(csv.find("grid2,brute-force,2,true,"), std::string::npos);
    EXPECT_EQ(csv.find("grid3"), std::string::npos);
    EXPECT_TRUE(fs::exists(suite.table_path));
    EXPECT_TRUE(fs::exists(suite.series_path));
    fs::remove_all(dir);
}

TEST(RunSuite, EmptyConfigStillWritesReports) {
    const fs::path dir = fresh_dir("suite_empty");
    SuiteConfig config;
    config.out_dir = dir;
    const SuiteResult suite = run_suite(config);
    EXPECT_TRUE(suite.results.empty());
    EXPECT_TRUE(suite.failures.empty());
    EXPECT_EQ(read_text(suite.csv_path), "scenario,algorithm,tid,topo_preserved,rounds\n");
    EXPECT_EQ(read_text(suite.series_path), "grid\n");
    fs::remove_all(dir);
}

TEST(RunSuite, DistributionTableGroupsByScenario) {
    const fs::path dir = fresh_dir("suite_table");
    SuiteConfig config;
    config.out_dir = dir;
    for (const char* alg : {"ois", "mais"}) {
        Scenario scenario;
        scenario.topology = GridSpec{3};
        scenario.channels = 3;
        scenario.algorithm = alg;
        config.scenarios.push_back(scenario);
    }
    const SuiteResult suite = run_suite(config);
    ASSERT_EQ(suite.results.size(), 2u);

    const std::string table = distribution_table(suite.results);
    EXPECT_NE(table.find("scenario"), std::string::npos);
    EXPECT_NE(table.find("ois-ca"), std::string::npos);
    EXPECT_NE(table.find("mais-ca"), std::string::npos);
    EXPECT_EQ(table.find("grid3"), table.rfind("grid3"));

    const std::string series = read_text(suite.series_path);
    EXPECT_NE(series.find("grid,ois-ca,mais-ca"), std::string::npos);
    EXPECT_NE(series.find("3,26,48"), std::string::npos);
    fs::remove_all(dir);
}

TEST(RunAlgorithm, DispatchesEveryPublishedName) {
    const ConflictGraph cg(generate_grid(2, 2, 3));
    const AlgorithmOptions options;
    for (const std::string& name : algorithm_names()) {
        const CaTrace trace = run_algorithm(name, cg, 3, options, kDefaultBruteBudget);
        EXPECT_EQ(trace.algorithm, algorithm_label(name)) << name;
    }
    try {
        run_algorithm("simulated-annealing", cg, 3, options, kDefaultBruteBudget);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    }
}

TEST(ExitCodeFor, SeparatesConfigFromRuntimeFailures) {
    const auto code = [](ErrorKind kind) { return exit_code_for(Error(kind, "x")); };
    EXPECT_EQ(code(ErrorKind::invalid_argument), 2);
    EXPECT_EQ(code(ErrorKind::schema), 2);
    EXPECT_EQ(code(ErrorKind::duplicate_id), 2);
    EXPECT_EQ(code(ErrorKind::disconnected), 2);
    EXPECT_EQ(code(ErrorKind::edge_mismatch), 2);
    EXPECT_EQ(code(ErrorKind::io), 2);
    EXPECT_EQ(code(ErrorKind::incomplete_assignment), 3);
    EXPECT_EQ(code(ErrorKind::precondition), 3);
    EXPECT_EQ(code(ErrorKind::budget_exceeded), 3);
    EXPECT_EQ(code(ErrorKind::no_convergence), 3);
}

TEST(CaIo, RejectsDocumentsMissingARadio) {
    const WmnGraph g = generate_grid(2, 2, 3);
    const ConflictGraph cg(g);
    const CaTrace trace = ois_ca(cg, 3);
    json doc = save_ca(trace, 0);
    doc["channels"].erase("0.0");
    try {
        load_ca(doc, g);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::incomplete_assignment);
    }
}

TEST(CaIo, RejectsChannelsOutsideRange) {
    const WmnGraph g = generate_grid(2, 2, 3);
    const ConflictGraph cg(g);
    const CaTrace trace = ois_ca(cg, 3);
    json doc = save_ca(trace, 0);
    doc["channels"]["0.0"] = 9;
    try {
        load_ca(doc, g);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    }
}

}  // namespace
}  // namespace meshca
