#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "meshca/wmn_graph.hpp"
#include "meshca/wmn_io.hpp"

#ifndef MESHCA_BIN
#error "MESHCA_BIN must point at the CLI binary"
#endif

namespace meshca {
namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "meshca_cli_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args, const fs::path& dir) {
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";
    const std::string command = std::string("\"") + MESHCA_BIN + "\" " + args + " > \"" +
                                out_file.string() + "\" 2> \"" + err_file.string() + "\"";
    const int status = std::system(command.c_str());
    CliResult result;
    if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = read_text(out_file);
    result.err = read_text(err_file);
    return result;
}

TEST(Cli, RunGridWritesBundle) {
    const fs::path dir = fresh_dir("run_grid");
    const CliResult result =
        run_cli("run --grid 3 --channels 3 --out \"" + dir.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 0) << result.err;
    EXPECT_NE(result.out.find("scenario: grid3"), std::string::npos);
    EXPECT_NE(result.out.find("algorithm: ois-ca"), std::string::npos);
    EXPECT_NE(result.out.find("tid: 26"), std::string::npos);
    EXPECT_NE(result.out.find("topology: preserved"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "grid3.wmn.json"));
    EXPECT_TRUE(fs::exists(dir / "grid3-ois-ca.ca.json"));
    EXPECT_TRUE(fs::exists(dir / "grid3-ois-ca.csv"));
    EXPECT_TRUE(fs::exists(dir / "grid3-ois-ca.dist.txt"));
}

TEST(Cli, RunFileTopology) {
    const fs::path dir = fresh_dir("run_file");
    const fs::path wmn = dir / "net.wmn.json";
    save_wmn_file(generate_grid(2, 2, 3), wmn);
    const CliResult result = run_cli(
        "run --wmn \"" + wmn.string() + "\" --alg eizm --out \"" + dir.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 0) << result.err;
    EXPECT_NE(result.out.find("scenario: net.wmn"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "net.wmn-eizm-ca.ca.json"));
}

TEST(Cli, RadiosFlagIsRejectedForFileTopologies) {
    const fs::path dir = fresh_dir("file_radios");
    const fs::path wmn = dir / "net.wmn.json";
    save_wmn_file(generate_grid(2, 2, 3), wmn);
    const CliResult result =
        run_cli("run --wmn \"" + wmn.string() + "\" --radios 3 --out \"" + dir.string() + "\"",
                dir);
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("--radios"), std::string::npos);
}

TEST(Cli, ChannelCountBelowRadiosIsConfigError) {
    const fs::path dir = fresh_dir("bad_channels");
    const CliResult result =
        run_cli("run --grid 5 --channels 2 --out \"" + dir.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("error:"), std::string::npos);
}

TEST(Cli, UnknownAlgorithmIsUsageError) {
    const fs::path dir = fresh_dir("bad_alg");
    const CliResult result = run_cli("run --grid 3 --alg simulated-annealing", dir);
    EXPECT_EQ(result.exit_code, 2);
}

TEST(Cli, MissingTopologyIsUsageError) {
    const fs::path dir = fresh_dir("no_topology");
    const CliResult result = run_cli("run --channels 3", dir);
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("--grid"), std::string::npos);
}

TEST(Cli, ConflictingTopologiesAreRejected) {
    const fs::path dir = fresh_dir("two_topologies");
    const CliResult result = run_cli("run --grid 3 --wmn net.wmn.json", dir);
    EXPECT_EQ(result.exit_code, 2);
}

TEST(Cli, BruteBudgetExhaustionIsRuntimeError) {
    const fs::path dir = fresh_dir("budget");
    const CliResult result = run_cli(
        "run --grid 2 --channels 3 --alg brute --budget 100 --out \"" + dir.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 3);
    EXPECT_NE(result.err.find("budget"), std::string::npos);
}

TEST(Cli, SuiteEmptyConfigSucceeds) {
    const fs::path dir = fresh_dir("suite_empty");
    const fs::path config = dir / "suite.json";
    {
        std::ofstream out(config);
        nlohmann::json doc;
        doc["out"] = dir.string();
        doc["scenarios"] = nlohmann::json::array();
        out << doc.dump(2);
    }
    const CliResult result = run_cli("suite \"" + config.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 0) << result.err;
    EXPECT_NE(result.out.find("wrote"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "suite.csv"));
}

TEST(Cli, SuiteReportsPartialFailures) {
    const fs::path dir = fresh_dir("suite_partial");
    const fs::path config = dir / "suite.json";
    {
        std::ofstream out(config);
        nlohmann::json doc;
        doc["out"] = dir.string();
        nlohmann::json ok;
        ok["grid"] = 2;
        nlohmann::json broken;
        broken["random"] = {{"nodes", 3}, {"area_m", 10000.0}, {"range_m", 1.0}};
        doc["scenarios"] = nlohmann::json::array({ok, broken});
        out << doc.dump(2);
    }
    const CliResult result = run_cli("suite \"" + config.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.out.find("ok grid2"), std::string::npos);
    EXPECT_NE(result.err.find("fail rand3-s0"), std::string::npos);
    const std::string csv = read_text(dir / "suite.csv");
    EXPECT_NE(csv.find("grid2,ois-ca,"), std::string::npos);
}

TEST(Cli, SuiteMissingConfigIsIoError) {
    const fs::path dir = fresh_dir("suite_missing");
    const CliResult result = run_cli("suite /nonexistent/meshca/suite.json", dir);
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("cannot read"), std::string::npos);
}

TEST(Cli, SuiteMalformedJsonIsSchemaError) {
    const fs::path dir = fresh_dir("suite_malformed");
    const fs::path config = dir / "suite.json";
    {
        std::ofstream out(config);
        out << "{not json";
    }
    const CliResult result = run_cli("suite \"" + config.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 2);
}

TEST(Cli, ExportDotWritesConflictGraph) {
    const fs::path dir = fresh_dir("export_dot");
    const CliResult result =
        run_cli("export-dot --grid 2 --channels 3 --out \"" + dir.string() + "\"", dir);
    EXPECT_EQ(result.exit_code, 0) << result.err;
    EXPECT_TRUE(fs::exists(dir / "grid2.emmcg.dot"));
    EXPECT_NE(read_text(dir / "grid2.emmcg.dot").find("graph emmcg"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
    const fs::path dir = fresh_dir("help");
    EXPECT_EQ(run_cli("--help", dir).exit_code, 0);
    EXPECT_EQ(run_cli("run --help", dir).exit_code, 0);
}

}  // namespace
}  // namespace meshca
