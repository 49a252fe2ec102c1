#include "gmocso/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gmocso/csv.hpp"
#include "gmocso/dominance.hpp"
#include "gmocso/metrics.hpp"
#include "gmocso/stats.hpp"

namespace gmocso {

namespace fs = std::filesystem;
using nlohmann::json;

ReferenceSpec parse_reference_spec(const std::string& text) {
    if (text == "analytic") return {ReferenceSpec::Kind::Analytic, {}};
    if (text == "pooled") return {ReferenceSpec::Kind::Pooled, {}};
    if (text.rfind("file:", 0) == 0) {
        const std::string path = text.substr(5);
        if (path.empty())
            throw ConfigError("reference 'file:' needs a path, got '" + text + "'");
        return {ReferenceSpec::Kind::File, path};
    }
    throw ConfigError("bad reference source '" + text +
                      "' (expected analytic | pooled | file:PATH)");
}

std::string reference_spec_to_string(const ReferenceSpec& spec) {
    switch (spec.kind) {
        case ReferenceSpec::Kind::Analytic: return "analytic";
        case ReferenceSpec::Kind::Pooled: return "pooled";
        case ReferenceSpec::Kind::File: return "file:" + spec.file.string();
    }
    return "analytic";
}

namespace {

// -------- strict config parsing --------

void require_keys(const json& object, const std::string& context,
                  const std::set<std::string>& allowed) {
    for (const auto& [key, value] : object.items())
        if (!allowed.contains(key))
            throw ConfigError(context + ": unknown key '" + key + "'");
}

int get_int(const json& object, const std::string& context, const char* key,
            int fallback, int min_value) {
    if (!object.contains(key)) return fallback;
    const json& v = object.at(key);
    if (!v.is_number_integer())
        throw ConfigError(context + ": '" + key + "' must be an integer");
    const auto value = v.get<long long>();
    if (value < min_value)
        throw ConfigError(context + ": '" + key + "' must be >= " +
                          std::to_string(min_value));
    return static_cast<int>(value);
}

Scalar get_scalar(const json& object, const std::string& context, const char* key,
                  Scalar fallback) {
    if (!object.contains(key)) return fallback;
    const json& v = object.at(key);
    if (!v.is_number())
        throw ConfigError(context + ": '" + key + "' must be a number");
    return v.get<Scalar>();
}

bool get_bool(const json& object, const std::string& context, const char* key,
              bool fallback) {
    if (!object.contains(key)) return fallback;
    const json& v = object.at(key);
    if (!v.is_boolean())
        throw ConfigError(context + ": '" + key + "' must be a boolean");
    return v.get<bool>();
}

std::string get_string(const json& object, const std::string& context, const char* key,
                       const std::string& fallback) {
    if (!object.contains(key)) return fallback;
    const json& v = object.at(key);
    if (!v.is_string())
        throw ConfigError(context + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

GmocsoConfig parse_algorithm(const json& object) {
    const std::string ctx = "config.algorithm";
    require_keys(object, ctx,
                 {"population_size", "max_iterations", "c1", "inertia_weight", "smp",
                  "cdc", "srd", "n_grid", "archive_capacity", "rand_per_dimension"});
    GmocsoConfig defaults;
    GmocsoConfig c;
    c.population_size = get_int(object, ctx, "population_size", defaults.population_size, 1);
    c.max_iterations = get_int(object, ctx, "max_iterations", defaults.max_iterations, 0);
    c.c1 = get_scalar(object, ctx, "c1", defaults.c1);
    c.inertia_weight = get_scalar(object, ctx, "inertia_weight", defaults.inertia_weight);
    c.smp = get_int(object, ctx, "smp", defaults.smp, 1);
    c.cdc = get_int(object, ctx, "cdc", defaults.cdc, 1);
    c.srd = get_scalar(object, ctx, "srd", defaults.srd);
    c.n_grid = get_int(object, ctx, "n_grid", defaults.n_grid, 1);
    c.archive_capacity = get_int(object, ctx, "archive_capacity", defaults.archive_capacity, 1);
    c.rand_per_dimension = get_bool(object, ctx, "rand_per_dimension", defaults.rand_per_dimension);
    if (c.srd < 0) throw ConfigError(ctx + ": 'srd' must be >= 0");
    return c;
}

ReferenceSpec default_reference(ProblemId id) {
    return has_analytic_front(id) ? ReferenceSpec{ReferenceSpec::Kind::Analytic, {}}
                                  : ReferenceSpec{ReferenceSpec::Kind::Pooled, {}};
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config must be a JSON object");
    require_keys(root, "config",
                 {"problems", "runs", "seed_base", "reference_points", "algorithm_label",
                  "output_dir", "reference", "algorithm"});

    ExperimentConfig config;

    if (!root.contains("problems") || !root.at("problems").is_array() ||
        root.at("problems").empty())
        throw ConfigError("config: 'problems' must be a non-empty array of problem ids");
    for (const json& entry : root.at("problems")) {
        if (!entry.is_string())
            throw ConfigError("config: 'problems' entries must be strings");
        const auto id = parse_problem_id(entry.get<std::string>());
        if (!id)
            throw ConfigError("config: unknown problem id '" + entry.get<std::string>() +
                              "' (expected ZDT1|ZDT2|ZDT3|ZDT4|ZDT6|PressureVessel)");
        config.problems.push_back(*id);
    }

    config.runs = get_int(root, "config", "runs", 30, 1);
    if (root.contains("seed_base")) {
        const json& v = root.at("seed_base");
        if (!v.is_number_unsigned())
            throw ConfigError("config: 'seed_base' must be a non-negative integer");
        config.seed_base = v.get<std::uint64_t>();
    }
    config.reference_points = get_int(root, "config", "reference_points", 1000, 1);
    config.algorithm_label = get_string(root, "config", "algorithm_label", "GMOCSO");
    if (config.algorithm_label.empty() ||
        config.algorithm_label.find(',') != std::string::npos)
        throw ConfigError("config: 'algorithm_label' must be non-empty and comma-free");
    if (root.contains("output_dir")) {
        if (!root.at("output_dir").is_string())
            throw ConfigError("config: 'output_dir' must be a string");
        config.output_dir = fs::path(root.at("output_dir").get<std::string>());
    }

    for (ProblemId id : config.problems) config.reference[id] = default_reference(id);
    if (root.contains("reference")) {
        const json& refs = root.at("reference");
        if (!refs.is_object())
            throw ConfigError("config: 'reference' must be an object keyed by problem id");
        for (const auto& [key, value] : refs.items()) {
            const auto id = parse_problem_id(key);
            if (!id) throw ConfigError("config.reference: unknown problem id '" + key + "'");
            if (std::find(config.problems.begin(), config.problems.end(), *id) ==
                config.problems.end())
                throw ConfigError("config.reference: '" + key +
                                  "' is not in the problems list");
            if (!value.is_string())
                throw ConfigError("config.reference: entry for '" + key +
                                  "' must be a string");
            config.reference[*id] = parse_reference_spec(value.get<std::string>());
        }
    }

    if (root.contains("algorithm")) {
        if (!root.at("algorithm").is_object())
            throw ConfigError("config: 'algorithm' must be an object");
        config.algorithm = parse_algorithm(root.at("algorithm"));
    }
    return config;
}

ExperimentConfig load_config(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file: " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_json(buffer.str());
}

std::string config_to_json(const ExperimentConfig& config, int indent) {
    json root;
    json problems = json::array();
    for (ProblemId id : config.problems) problems.push_back(problem_name(id));
    root["problems"] = std::move(problems);
    root["runs"] = config.runs;
    root["seed_base"] = config.seed_base;
    root["reference_points"] = config.reference_points;
    root["algorithm_label"] = config.algorithm_label;
    if (config.output_dir) root["output_dir"] = config.output_dir->string();
    json refs = json::object();
    for (const auto& [id, spec] : config.reference)
        refs[problem_name(id)] = reference_spec_to_string(spec);
    root["reference"] = std::move(refs);
    root["algorithm"] = {{"population_size", config.algorithm.population_size},
                         {"max_iterations", config.algorithm.max_iterations},
                         {"c1", config.algorithm.c1},
                         {"inertia_weight", config.algorithm.inertia_weight},
                         {"smp", config.algorithm.smp},
                         {"cdc", config.algorithm.cdc},
                         {"srd", config.algorithm.srd},
                         {"n_grid", config.algorithm.n_grid},
                         {"archive_capacity", config.algorithm.archive_capacity},
                         {"rand_per_dimension", config.algorithm.rand_per_dimension}};
    return root.dump(indent);
}

namespace {

// -------- result store --------

std::string run_file_stem(int run, int total_runs) {
    int width = 3;
    for (int v = total_runs - 1; v >= 1000; v /= 10) ++width;
    std::ostringstream name;
    name << "run_" << std::setfill('0') << std::setw(width) << run;
    return name.str();
}

std::uint64_t fnv1a_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw io::IoError("cannot checksum: " + file.string());
    std::uint64_t hash = 1469598103934665603ULL;
    char chunk[4096];
    while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(chunk[i]);
            hash *= 1099511628211ULL;
        }
        if (!in) break;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << value;
    return out.str();
}

struct StoreInfo {
    fs::path dir;
    ExperimentConfig config;
    std::map<std::string, std::vector<std::uint64_t>> seeds;  // problem -> per-run seed
};

StoreInfo read_store(const fs::path& results_dir) {
    const fs::path manifest_file = results_dir / "manifest.json";
    std::ifstream in(manifest_file);
    if (!in) throw io::IoError("cannot open manifest: " + manifest_file.string());
    json manifest;
    try {
        in >> manifest;
    } catch (const json::parse_error& e) {
        throw io::IoError("corrupt manifest " + manifest_file.string() + ": " + e.what());
    }
    if (!manifest.contains("config"))
        throw io::IoError("manifest missing 'config': " + manifest_file.string());

    StoreInfo store;
    store.dir = results_dir;
    store.config = parse_config_json(manifest.at("config").dump());
    if (manifest.contains("seeds"))
        for (const auto& [problem, seeds] : manifest.at("seeds").items())
            store.seeds[problem] = seeds.get<std::vector<std::uint64_t>>();
    return store;
}

struct RunElapsed {
    int run;
    std::uint64_t seed;
    double elapsed_seconds;
};

void write_elapsed_csv(const fs::path& file, const std::vector<RunElapsed>& rows) {
    std::ofstream out(file);
    if (!out) throw io::IoError("cannot open for writing: " + file.string());
    out << "run,seed,elapsed_seconds\n";
    for (const RunElapsed& r : rows)
        out << r.run << ',' << r.seed << ',' << io::format_scalar(r.elapsed_seconds)
            << '\n';
    if (!out.flush()) throw io::IoError("write failed: " + file.string());
}

std::vector<RunElapsed> read_elapsed_csv(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw io::IoError("cannot open for reading: " + file.string());
    std::string line;
    if (!std::getline(in, line))
        throw io::IoError("empty elapsed file: " + file.string());
    std::vector<RunElapsed> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        RunElapsed r{};
        std::stringstream ss(line);
        std::string field;
        std::getline(ss, field, ',');
        r.run = std::stoi(field);
        std::getline(ss, field, ',');
        r.seed = std::stoull(field);
        std::getline(ss, field, ',');
        r.elapsed_seconds = std::stod(field);
        rows.push_back(r);
    }
    return rows;
}

std::vector<ObjectiveVector> sorted_front(std::vector<ObjectiveVector> points) {
    std::sort(points.begin(), points.end(),
              [](const ObjectiveVector& a, const ObjectiveVector& b) {
                  return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
              });
    return points;
}

std::vector<ObjectiveVector> resolve_reference(const ReferenceSpec& spec, ProblemId id,
                                               const StoreInfo& store) {
    switch (spec.kind) {
        case ReferenceSpec::Kind::Analytic:
            return reference_front(make_problem(id), store.config.reference_points).points;
        case ReferenceSpec::Kind::File: return io::read_front_csv(spec.file);
        case ReferenceSpec::Kind::Pooled: {
            if (store.config.runs < 2)
                throw ConfigError("pooled reference needs at least 2 runs");
            std::vector<ObjectiveVector> all;
            for (int run = 0; run < store.config.runs; ++run) {
                const fs::path file = store.dir / problem_name(id) /
                                      (run_file_stem(run, store.config.runs) + ".front.csv");
                for (ObjectiveVector& p : io::read_front_csv(file))
                    all.push_back(std::move(p));
            }
            return sorted_front(non_dominated_filter(all));
        }
    }
    throw ConfigError("unhandled reference kind");
}

}  // namespace

void cmd_run(const ExperimentConfig& config, const fs::path& out_dir, int jobs) {
    std::vector<ProblemSpec> specs;
    for (ProblemId id : config.problems) {
        specs.push_back(make_problem(id));
        try {
            validate(config.algorithm, specs.back());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string(e.what()) + " (problem " + problem_name(id) + ")");
        }
    }

    try {
        fs::create_directories(out_dir);
        for (ProblemId id : config.problems)
            fs::create_directories(out_dir / problem_name(id));
    } catch (const fs::filesystem_error& e) {
        throw io::IoError(std::string("cannot create output directories: ") + e.what());
    }

    struct Task {
        std::size_t problem_index;
        int run;
    };
    std::vector<Task> tasks;
    for (std::size_t pi = 0; pi < config.problems.size(); ++pi)
        for (int run = 0; run < config.runs; ++run) tasks.push_back({pi, run});

    std::vector<std::vector<RunElapsed>> elapsed(config.problems.size());
    for (auto& rows : elapsed)
        rows.resize(static_cast<std::size_t>(config.runs));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    const auto worker = [&] {
        while (true) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            try {
                const Task& task = tasks[t];
                GmocsoConfig run_config = config.algorithm;
                run_config.seed = config.seed_base + static_cast<std::uint64_t>(task.run);
                const RunResult result = run(run_config, specs[task.problem_index]);

                const fs::path problem_dir =
                    out_dir / problem_name(config.problems[task.problem_index]);
                const std::string stem = run_file_stem(task.run, config.runs);
                io::write_front_csv(problem_dir / (stem + ".front.csv"),
                                    result.final_front);
                io::write_positions_csv(problem_dir / (stem + ".positions.csv"),
                                        result.final_positions);
                elapsed[task.problem_index][static_cast<std::size_t>(task.run)] = {
                    task.run, result.seed, result.elapsed_seconds};
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int worker_count =
        std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(worker_count));
        for (int i = 0; i < worker_count; ++i) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    json seeds = json::object();
    json artifacts = json::object();
    for (std::size_t pi = 0; pi < config.problems.size(); ++pi) {
        const std::string name = problem_name(config.problems[pi]);
        write_elapsed_csv(out_dir / name / "elapsed.csv", elapsed[pi]);
        std::vector<std::uint64_t> problem_seeds;
        for (const RunElapsed& r : elapsed[pi]) problem_seeds.push_back(r.seed);
        seeds[name] = problem_seeds;
        for (int run = 0; run < config.runs; ++run) {
            const std::string stem = run_file_stem(run, config.runs);
            for (const char* suffix : {".front.csv", ".positions.csv"}) {
                const std::string rel = name + "/" + stem + suffix;
                artifacts[rel] = hex64(fnv1a_file(out_dir / rel));
            }
        }
    }

    ExperimentConfig echo = config;
    echo.output_dir = out_dir;
    json manifest;
    manifest["tool"] = kToolName;
    manifest["version"] = kToolVersion;
    manifest["config"] = json::parse(config_to_json(echo));
    manifest["seeds"] = std::move(seeds);
    manifest["artifacts"] = std::move(artifacts);

    std::ofstream out(out_dir / "manifest.json");
    if (!out) throw io::IoError("cannot write manifest in " + out_dir.string());
    out << manifest.dump(2) << '\n';
    if (!out.flush()) throw io::IoError("write failed: manifest.json");
}

void cmd_metrics(const fs::path& results_dir,
                 const std::optional<ReferenceSpec>& reference_override,
                 std::ostream& out) {
    const StoreInfo store = read_store(results_dir);
    std::vector<io::MetricsRow> rows;

    for (ProblemId id : store.config.problems) {
        const std::string name = problem_name(id);
        const ReferenceSpec spec =
            reference_override ? *reference_override : store.config.reference.at(id);
        const std::vector<ObjectiveVector> reference = resolve_reference(spec, id, store);

        const auto elapsed = read_elapsed_csv(results_dir / name / "elapsed.csv");
        for (int run = 0; run < store.config.runs; ++run) {
            const fs::path front_file =
                results_dir / name / (run_file_stem(run, store.config.runs) + ".front.csv");
            const auto front = io::read_front_csv(front_file);

            io::MetricsRow row;
            row.problem = name;
            row.algorithm = store.config.algorithm_label;
            row.run = run;
            row.seed = elapsed[static_cast<std::size_t>(run)].seed;
            row.rgd = rgd(reference, front);
            row.spacing = front.size() >= 2 ? spacing(front)
                                            : std::numeric_limits<Scalar>::quiet_NaN();
            row.spread = spread(reference, front);
            row.elapsed_seconds = elapsed[static_cast<std::size_t>(run)].elapsed_seconds;
            rows.push_back(std::move(row));
        }
    }

    io::write_metrics_csv(results_dir / "metrics.csv", rows);

    // per-problem mean/std summary
    std::ofstream summary(results_dir / "summary.csv");
    if (!summary) throw io::IoError("cannot write summary.csv in " + results_dir.string());
    summary << "problem,algorithm,metric,mean,std\n";
    out << std::left << std::setw(16) << "problem" << std::setw(10) << "metric"
        << std::setw(16) << "mean" << std::setw(16) << "std" << '\n';
    for (ProblemId id : store.config.problems) {
        const std::string name = problem_name(id);
        const auto collect = [&](auto field) {
            std::vector<Scalar> values;
            for (const io::MetricsRow& r : rows)
                if (r.problem == name) values.push_back(field(r));
            return values;
        };
        const std::vector<std::pair<std::string, std::vector<Scalar>>> columns = {
            {"rgd", collect([](const io::MetricsRow& r) { return r.rgd; })},
            {"spacing", collect([](const io::MetricsRow& r) { return r.spacing; })},
            {"spread", collect([](const io::MetricsRow& r) { return r.spread; })},
            {"elapsed", collect([](const io::MetricsRow& r) { return r.elapsed_seconds; })},
        };
        for (const auto& [metric, values] : columns) {
            const auto s = stats::summarize(values);
            summary << name << ',' << store.config.algorithm_label << ',' << metric << ','
                    << io::format_scalar(s.mean) << ',' << io::format_scalar(s.std_dev)
                    << '\n';
            out << std::left << std::setw(16) << name << std::setw(10) << metric
                << std::setw(16) << s.mean << std::setw(16) << s.std_dev << '\n';
        }
    }
    if (!summary.flush()) throw io::IoError("write failed: summary.csv");
}

void cmd_compare(const std::vector<fs::path>& metrics_files, const std::string& baseline,
                 Scalar alpha, std::ostream& out) {
    if (metrics_files.size() < 2)
        throw ConfigError("compare needs at least 2 metrics files");

    // A label already used by an earlier file gets a #k suffix, so feeding
    // the same results twice still yields two comparable columns.
    std::vector<io::MetricsRow> rows;
    std::map<std::string, int> label_uses;
    for (const fs::path& file : metrics_files) {
        auto file_rows = io::read_metrics_csv(file);
        std::map<std::string, std::string> renamed;
        for (const io::MetricsRow& r : file_rows)
            if (!renamed.contains(r.algorithm)) {
                const int uses = label_uses[r.algorithm]++;
                renamed[r.algorithm] =
                    uses == 0 ? r.algorithm : r.algorithm + "#" + std::to_string(uses + 1);
            }
        for (io::MetricsRow& r : file_rows) {
            r.algorithm = renamed.at(r.algorithm);
            rows.push_back(std::move(r));
        }
    }

    std::set<std::string> algorithms;
    std::map<std::string, std::set<std::string>> problems_of;
    for (const io::MetricsRow& r : rows) {
        algorithms.insert(r.algorithm);
        problems_of[r.algorithm].insert(r.problem);
    }
    if (algorithms.size() < 2)
        throw ConfigError("compare needs at least 2 distinct algorithm labels");
    if (!algorithms.contains(baseline))
        throw ConfigError("baseline '" + baseline + "' not found in inputs");

    std::set<std::string> common = problems_of.begin()->second;
    for (const auto& [algorithm, problems] : problems_of) {
        std::set<std::string> kept;
        std::set_intersection(common.begin(), common.end(), problems.begin(),
                              problems.end(), std::inserter(kept, kept.end()));
        common = std::move(kept);
    }
    if (common.empty()) {
        std::string message = "no problems shared by all inputs:";
        for (const auto& [algorithm, problems] : problems_of) {
            message += "\n  " + algorithm + ":";
            for (const std::string& p : problems) message += " " + p;
        }
        throw ConfigError(message);
    }
    for (const auto& [algorithm, problems] : problems_of)
        for (const std::string& p : problems)
            if (!common.contains(p))
                out << "warning: dropping " << p << " (only present for " << algorithm
                    << ")\n";

    const std::vector<std::string> metrics = {"rgd", "spacing", "spread"};
    const auto values_of = [&](const std::string& algorithm, const std::string& problem,
                               const std::string& metric) {
        std::vector<Scalar> values;
        for (const io::MetricsRow& r : rows) {
            if (r.algorithm != algorithm || r.problem != problem) continue;
            if (metric == "rgd") values.push_back(r.rgd);
            else if (metric == "spacing") values.push_back(r.spacing);
            else if (metric == "spread") values.push_back(r.spread);
        }
        return values;
    };

    std::map<stats::RowKey, std::map<std::string, Scalar>> averages;
    std::vector<stats::MetricSample> samples;
    for (const std::string& problem : common)
        for (const std::string& metric : metrics)
            for (const std::string& algorithm : algorithms) {
                auto values = values_of(algorithm, problem, metric);
                if (values.empty()) continue;
                averages[{problem, metric}][algorithm] = stats::summarize(values).mean;
                samples.push_back({algorithm, problem, metric, std::move(values)});
            }

    const stats::RankTable table = stats::friedman_ranks(averages);

    out << "Rank table (rank 1 = best = lowest mean)\n";
    out << std::left << std::setw(16) << "problem" << std::setw(10) << "metric";
    for (const std::string& algorithm : table.algorithms)
        out << std::setw(14) << algorithm;
    out << '\n';
    for (const auto& row : table.rows) {
        out << std::left << std::setw(16) << row.problem << std::setw(10) << row.metric;
        for (Scalar r : row.ranks) out << std::setw(14) << r;
        out << '\n';
    }
    for (const auto& [metric, subtotal] : table.metric_subtotals) {
        out << std::left << std::setw(16) << (metric + " subtotal") << std::setw(10) << "";
        for (Scalar v : subtotal) out << std::setw(14) << v;
        out << '\n';
        out << std::left << std::setw(16) << (metric + " ranking") << std::setw(10) << "";
        for (Scalar v : table.metric_rankings.at(metric)) out << std::setw(14) << v;
        out << '\n';
    }
    out << std::left << std::setw(16) << "total" << std::setw(10) << "";
    for (Scalar v : table.totals) out << std::setw(14) << v;
    out << '\n';
    out << std::left << std::setw(16) << "overall ranking" << std::setw(10) << "";
    for (Scalar v : table.overall_ranking) out << std::setw(14) << v;
    out << '\n';
    out << "Friedman chi-square = " << table.friedman_chi_square
        << ", p = " << table.friedman_p_value << "\n\n";

    const stats::SignificanceReport report =
        stats::significance_report(samples, baseline, alpha);
    std::set<std::string> others;
    for (const auto& entry : report.entries) others.insert(entry.algorithm);

    out << "Wilcoxon rank-sum p-values, " << baseline << " vs others (alpha = " << alpha
        << ", * = significant)\n";
    out << std::left << std::setw(16) << "problem" << std::setw(10) << "metric";
    for (const std::string& other : others) out << std::setw(18) << other;
    out << '\n';
    for (const std::string& problem : common)
        for (const std::string& metric : metrics) {
            out << std::left << std::setw(16) << problem << std::setw(10) << metric;
            for (const std::string& other : others) {
                bool found = false;
                for (const auto& entry : report.entries)
                    if (entry.problem == problem && entry.metric == metric &&
                        entry.algorithm == other) {
                        std::ostringstream cell;
                        cell << std::scientific << std::setprecision(4) << entry.p_value
                             << (entry.significant ? " *" : "");
                        out << std::setw(18) << cell.str();
                        found = true;
                        break;
                    }
                if (!found) out << std::setw(18) << "-";
            }
            out << '\n';
        }
    for (const std::string& warning : report.warnings)
        out << "warning: " << warning << '\n';
}

void cmd_plotdata(const fs::path& results_dir, const std::string& problem,
                  std::ostream& out) {
    if (!fs::exists(results_dir / "manifest.json"))
        throw ConfigError("no results found in '" + results_dir.string() +
                          "' (missing manifest.json)");
    const StoreInfo store = read_store(results_dir);

    const auto id = parse_problem_id(problem);
    if (!id) throw ConfigError("unknown problem id '" + problem + "'");
    if (std::find(store.config.problems.begin(), store.config.problems.end(), *id) ==
        store.config.problems.end())
        throw ConfigError("problem '" + problem + "' is not part of these results");

    const fs::path plot_dir = results_dir / "plot" / problem;
    try {
        fs::create_directories(plot_dir);
    } catch (const fs::filesystem_error& e) {
        throw io::IoError(std::string("cannot create plot directory: ") + e.what());
    }

    const std::vector<ObjectiveVector> reference =
        resolve_reference(store.config.reference.at(*id), *id, store);
    io::write_front_csv(plot_dir / "reference.csv", reference);

    std::ofstream combined(plot_dir / "combined.csv");
    if (!combined) throw io::IoError("cannot write combined.csv");
    combined << "run,f1,f2\n";
    std::size_t total_rows = 0;
    for (int run = 0; run < store.config.runs; ++run) {
        const std::string stem = run_file_stem(run, store.config.runs);
        const auto front = io::read_front_csv(results_dir / problem / (stem + ".front.csv"));
        io::write_front_csv(plot_dir / (stem + ".csv"), front);
        for (const ObjectiveVector& p : front) {
            combined << run << ',' << io::format_scalar(p[0]) << ','
                     << io::format_scalar(p[1]) << '\n';
            ++total_rows;
        }
    }
    for (const ObjectiveVector& p : reference) {
        combined << "reference," << io::format_scalar(p[0]) << ','
                 << io::format_scalar(p[1]) << '\n';
        ++total_rows;
    }
    if (!combined.flush()) throw io::IoError("write failed: combined.csv");
    out << "wrote " << plot_dir.string() << " (" << store.config.runs
        << " run fronts, reference with " << reference.size() << " points, combined "
        << total_rows << " rows)\n";
}

void cmd_reference(const std::string& problem, int n_points, const fs::path& out_file) {
    const auto id = parse_problem_id(problem);
    if (!id) throw ConfigError("unknown problem id '" + problem + "'");
    if (n_points < 1) throw ConfigError("reference needs --points >= 1");
    const ReferenceFront front = reference_front(make_problem(*id), n_points);
    io::write_front_csv(out_file, front.points);
}

}  // namespace gmocso
