#include "meshca/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "meshca/ca_io.hpp"
#include "meshca/conflict_graph.hpp"
#include "meshca/error.hpp"
#include "meshca/wmn_io.hpp"

namespace meshca {
namespace {

const std::map<std::string, std::string>& label_table() {
    static const std::map<std::string, std::string> table = {
        {"ois", "ois-ca"},       {"eizm", "eizm-ca"},      {"mais", "mais-ca"},
        {"bfs-lite", "bfs-ca-lite"}, {"brute", "brute-force"}, {"uniform", "uniform"},
    };
    return table;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
    out << content;
}

std::string format_ratio(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string distribution_file(const TidReport& report, const std::vector<double>& ratios) {
    std::ostringstream out;
    out << "channel,radios,ratio\n";
    for (std::size_t c = 0; c < ratios.size(); ++c)
        out << c + 1 << ',' << report.channel_radio_counts[c] << ',' << format_ratio(ratios[c])
            << '\n';
    return out.str();
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"ois",      "eizm",  "mais",
                                                   "bfs-lite", "brute", "uniform"};
    return names;
}

std::string algorithm_label(const std::string& name) {
    auto it = label_table().find(name);
    if (it == label_table().end())
        throw Error(ErrorKind::invalid_argument, "unknown algorithm: " + name);
    return it->second;
}

std::string scenario_name(const Scenario& scenario) {
    if (!scenario.name.empty()) return scenario.name;
    if (const auto* grid = std::get_if<GridSpec>(&scenario.topology))
        return "grid" + std::to_string(grid->n);
    if (const auto* random = std::get_if<RandomSpec>(&scenario.topology))
        return "rand" + std::to_string(random->nodes) + "-s" + std::to_string(scenario.seed);
    return std::get<FileSpec>(scenario.topology).path.stem().string();
}

WmnGraph build_topology(const Scenario& scenario) {
    if (const auto* grid = std::get_if<GridSpec>(&scenario.topology)) {
        if (scenario.channels <= 0)
            throw Error(ErrorKind::invalid_argument,
                        "generated topologies need an explicit channel count");
        return generate_grid(grid->n, scenario.radios, scenario.channels);
    }
    if (const auto* random = std::get_if<RandomSpec>(&scenario.topology)) {
        if (scenario.channels <= 0)
            throw Error(ErrorKind::invalid_argument,
                        "generated topologies need an explicit channel count");
        return generate_random(random->nodes, random->area_m, random->range_m, scenario.radios,
                               scenario.channels, scenario.seed);
    }
    WmnGraph g = load_wmn_file(std::get<FileSpec>(scenario.topology).path);
    if (scenario.channels > 0 && scenario.channels != g.channel_count())
        return WmnGraph(g.nodes(), g.range_m(), scenario.channels);
    return g;
}

CaTrace run_algorithm(const std::string& name, const ConflictGraph& cg, int channel_count,
                      const AlgorithmOptions& options, std::uint64_t brute_budget) {
    if (name == "ois") return ois_ca(cg, channel_count, options);
    if (name == "eizm") return eizm_ca(cg, channel_count, options);
    if (name == "mais") return mais_ca(cg, channel_count, options);
    if (name == "bfs-lite") return bfs_ca(cg, channel_count, options);
    if (name == "brute") return brute_force_ca(cg, channel_count, brute_budget);
    if (name == "uniform") return uniform_ca(cg, channel_count);
    throw Error(ErrorKind::invalid_argument, "unknown algorithm: " + name);
}

ScenarioResult run_scenario(const Scenario& scenario) {
    ScenarioResult result;
    result.name = scenario_name(scenario);
    result.algorithm_label = algorithm_label(scenario.algorithm);
    if (const auto* grid = std::get_if<GridSpec>(&scenario.topology)) result.grid_n = grid->n;

    WmnGraph g = build_topology(scenario);
    result.channels = g.channel_count();
    result.total_radios = g.total_radios();

    ConflictGraph cg = build_emmcg(g);
    AlgorithmOptions options;
    options.seed = scenario.seed;
    options.gateway = scenario.gateway;
    result.trace = run_algorithm(scenario.algorithm, cg, g.channel_count(), options,
                                 scenario.brute_budget);

    result.report = tid(cg, result.trace.final_ca);
    result.rounds = scheduling_rounds(cg, result.trace.final_ca);
    result.distribution = channel_distribution(result.trace.final_ca, g.channel_count());
    result.csv_line = csv_row(result.name, result.algorithm_label, result.report, result.rounds,
                              g.channel_count());

    std::filesystem::create_directories(scenario.out_dir);
    const std::string stem = result.name + "-" + result.algorithm_label;
    save_wmn_file(g, scenario.out_dir / (result.name + ".wmn.json"));

    result.ca_path = scenario.out_dir / (stem + ".ca.json");
    write_text_file(result.ca_path, save_ca(result.trace, scenario.seed).dump(2) + "\n");
    write_text_file(scenario.out_dir / (stem + ".csv"),
                    csv_header(g.channel_count()) + "\n" + result.csv_line + "\n");
    write_text_file(scenario.out_dir / (stem + ".dist.txt"),
                    distribution_file(result.report, result.distribution));
    if (scenario.export_dot)
        write_text_file(scenario.out_dir / (stem + ".emmcg.dot"), cg.to_dot());
    return result;
}

SuiteConfig load_suite_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::schema, "suite config must be an object");
    SuiteConfig config;
    if (doc.contains("out")) {
        if (!doc["out"].is_string())
            throw Error(ErrorKind::schema, "suite config: \"out\" must be a string");
        config.out_dir = doc["out"].get<std::string>();
    }
    if (!doc.contains("scenarios") || !doc["scenarios"].is_array())
        throw Error(ErrorKind::schema, "suite config: missing \"scenarios\" array");

    for (const auto& entry : doc["scenarios"]) {
        if (!entry.is_object())
            throw Error(ErrorKind::schema, "suite config: scenario entries must be objects");
        Scenario scenario;
        scenario.channels = 3;

        int topology_keys = 0;
        if (entry.contains("grid")) {
            if (!entry["grid"].is_number_integer())
                throw Error(ErrorKind::schema, "suite config: \"grid\" must be an integer");
            scenario.topology = GridSpec{entry["grid"].get<int>()};
            ++topology_keys;
        }
        if (entry.contains("random")) {
            const auto& r = entry["random"];
            if (!r.is_object() || !r.contains("nodes") || !r.contains("area_m") ||
                !r.contains("range_m") || !r["nodes"].is_number_integer() ||
                !r["area_m"].is_number() || !r["range_m"].is_number())
                throw Error(ErrorKind::schema,
                            "suite config: \"random\" needs integer \"nodes\" and numbers "
                            "\"area_m\", \"range_m\"");
            scenario.topology = RandomSpec{r["nodes"].get<int>(), r["area_m"].get<double>(),
                                           r["range_m"].get<double>()};
            ++topology_keys;
        }
        if (entry.contains("wmn")) {
            if (!entry["wmn"].is_string())
                throw Error(ErrorKind::schema, "suite config: \"wmn\" must be a path string");
            scenario.topology = FileSpec{entry["wmn"].get<std::string>()};
            scenario.channels = 0;
            ++topology_keys;
        }
        if (topology_keys != 1)
            throw Error(ErrorKind::schema,
                        "suite config: each scenario needs exactly one of \"grid\", \"random\", "
                        "\"wmn\"");

        if (entry.contains("name")) {
            if (!entry["name"].is_string())
                throw Error(ErrorKind::schema, "suite config: \"name\" must be a string");
            scenario.name = entry["name"].get<std::string>();
        }
        if (entry.contains("radios")) {
            if (!entry["radios"].is_number_integer())
                throw Error(ErrorKind::schema, "suite config: \"radios\" must be an integer");
            scenario.radios = entry["radios"].get<int>();
        }
        if (entry.contains("channels")) {
            if (!entry["channels"].is_number_integer())
                throw Error(ErrorKind::schema, "suite config: \"channels\" must be an integer");
            scenario.channels = entry["channels"].get<int>();
        }
        if (entry.contains("alg")) {
            if (!entry["alg"].is_string())
                throw Error(ErrorKind::schema, "suite config: \"alg\" must be a string");
            scenario.algorithm = entry["alg"].get<std::string>();
            const auto& names = algorithm_names();
            if (std::find(names.begin(), names.end(), scenario.algorithm) == names.end())
                throw Error(ErrorKind::schema,
                            "suite config: unknown algorithm: " + scenario.algorithm);
        }
        if (entry.contains("seed")) {
            if (!entry["seed"].is_number_integer())
                throw Error(ErrorKind::schema, "suite config: \"seed\" must be an integer");
            scenario.seed = entry["seed"].get<std::uint64_t>();
        }
        if (entry.contains("gateway")) {
            if (!entry["gateway"].is_number_integer())
                throw Error(ErrorKind::schema, "suite config: \"gateway\" must be an integer");
            scenario.gateway = entry["gateway"].get<int>();
        }
        if (entry.contains("dot")) {
            if (!entry["dot"].is_boolean())
                throw Error(ErrorKind::schema, "suite config: \"dot\" must be a boolean");
            scenario.export_dot = entry["dot"].get<bool>();
        }
        if (entry.contains("budget")) {
            if (!entry["budget"].is_number_integer())
                throw Error(ErrorKind::schema, "suite config: \"budget\" must be an integer");
            scenario.brute_budget = entry["budget"].get<std::uint64_t>();
        }
        config.scenarios.push_back(std::move(scenario));
    }
    return config;
}

std::string distribution_table(const std::vector<ScenarioResult>& results) {
    std::vector<std::string> labels;
    struct Row {
        std::string name;
        int grid_n = 0;
        int radios = 0;
        std::map<std::string, std::string> cells;
    };
    std::vector<Row> rows;

    for (const auto& result : results) {
        if (std::find(labels.begin(), labels.end(), result.algorithm_label) == labels.end())
            labels.push_back(result.algorithm_label);
        auto row = std::find_if(rows.begin(), rows.end(),
                                [&](const Row& r) { return r.name == result.name; });
        if (row == rows.end()) {
            rows.push_back({result.name, result.grid_n, result.total_radios, {}});
            row = std::prev(rows.end());
        }
        std::span<const double> ratios(result.distribution);
        row->cells[result.algorithm_label] = format_distribution(ratios);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        int na = a.grid_n > 0 ? a.grid_n : std::numeric_limits<int>::max();
        int nb = b.grid_n > 0 ? b.grid_n : std::numeric_limits<int>::max();
        if (na != nb) return na < nb;
        return a.name < b.name;
    });

    std::vector<std::string> header = {"scenario", "radios"};
    header.insert(header.end(), labels.begin(), labels.end());
    std::vector<std::size_t> widths;
    for (const auto& h : header) widths.push_back(h.size());
    for (const auto& row : rows) {
        widths[0] = std::max(widths[0], row.name.size());
        widths[1] = std::max(widths[1], std::to_string(row.radios).size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            auto cell = row.cells.find(labels[i]);
            if (cell != row.cells.end()) widths[i + 2] = std::max(widths[i + 2], cell->second.size());
        }
    }

    auto emit = [&](std::ostringstream& out, const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(widths[i] - cells[i].size() + 2, ' ');
        }
        out << '\n';
    };

    std::ostringstream out;
    emit(out, header);
    for (const auto& row : rows) {
        std::vector<std::string> cells = {row.name, std::to_string(row.radios)};
        for (const auto& label : labels) {
            auto cell = row.cells.find(label);
            cells.push_back(cell != row.cells.end() ? cell->second : "-");
        }
        emit(out, cells);
    }
    return out.str();
}

SuiteResult run_suite(const SuiteConfig& config) {
    SuiteResult suite;
    for (const auto& entry : config.scenarios) {
        Scenario scenario = entry;
        scenario.out_dir = config.out_dir;
        try {
            suite.results.push_back(run_scenario(scenario));
        } catch (const Error& e) {
            suite.failures.push_back({scenario_name(scenario), e.what(), exit_code_for(e)});
        } catch (const std::exception& e) {
            suite.failures.push_back({scenario_name(scenario), e.what(), 1});
        }
    }

    std::filesystem::create_directories(config.out_dir);
    int channel_max = 0;
    for (const auto& result : suite.results)
        channel_max = std::max(channel_max, result.channels);
    std::ostringstream csv;
    csv << csv_header(channel_max) << '\n';
    for (const auto& result : suite.results) {
        TidReport padded = result.report;
        padded.channel_radio_counts.resize(channel_max, 0);
        csv << csv_row(result.name, result.algorithm_label, padded, result.rounds, channel_max)
            << '\n';
    }
    suite.csv_path = config.out_dir / "suite.csv";
    write_text_file(suite.csv_path, csv.str());

    suite.table_path = config.out_dir / "distribution_table.txt";
    write_text_file(suite.table_path, distribution_table(suite.results));

    std::vector<std::string> labels;
    std::map<int, std::map<std::string, long long>> series;
    for (const auto& result : suite.results) {
        if (result.grid_n <= 0) continue;
        if (std::find(labels.begin(), labels.end(), result.algorithm_label) == labels.end())
            labels.push_back(result.algorithm_label);
        series[result.grid_n][result.algorithm_label] = result.report.tid;
    }
    std::ostringstream series_csv;
    series_csv << "grid";
    for (const auto& label : labels) series_csv << ',' << label;
    series_csv << '\n';
    for (const auto& [n, cells] : series) {
        series_csv << n;
        for (const auto& label : labels) {
            series_csv << ',';
            auto cell = cells.find(label);
            if (cell != cells.end()) series_csv << cell->second;
        }
        series_csv << '\n';
    }
    suite.series_path = config.out_dir / "tid_series.csv";
    write_text_file(suite.series_path, series_csv.str());
    return suite;
}

int exit_code_for(const Error& error) {
    switch (error.kind()) {
        case ErrorKind::invalid_argument:
        case ErrorKind::schema:
        case ErrorKind::duplicate_id:
        case ErrorKind::disconnected:
        case ErrorKind::edge_mismatch:
        case ErrorKind::io:
            return 2;
        case ErrorKind::incomplete_assignment:
        case ErrorKind::precondition:
        case ErrorKind::budget_exceeded:
        case ErrorKind::no_convergence:
            return 3;
    }
    return 1;
}

}  // namespace meshca
