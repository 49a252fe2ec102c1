#ifndef GMOCSO_EXPERIMENT_HPP
#define GMOCSO_EXPERIMENT_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmocso/optimizer.hpp"
#include "gmocso/problems.hpp"

namespace gmocso {

/// Invalid configuration or command usage (maps to exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Where a problem's reference front comes from when metrics are computed.
struct ReferenceSpec {
    enum class Kind { Analytic, Pooled, File };
    Kind kind = Kind::Analytic;
    std::filesystem::path file;  // set when kind == File
};

/// Parses "analytic", "pooled" or "file:PATH".
ReferenceSpec parse_reference_spec(const std::string& text);
std::string reference_spec_to_string(const ReferenceSpec& spec);

/// A batch experiment: which problems, how many seeded runs, which
/// optimizer settings, and how references are resolved per problem.
/// Run i of every problem uses seed_base + i.
struct ExperimentConfig {
    std::vector<ProblemId> problems;
    int runs = 30;
    std::uint64_t seed_base = 0;
    int reference_points = 1000;
    std::string algorithm_label = "GMOCSO";
    std::optional<std::filesystem::path> output_dir;
    std::map<ProblemId, ReferenceSpec> reference;
    GmocsoConfig algorithm;  // `seed` is ignored; per-run seeds come from seed_base
};

/// Strict JSON parse: unknown or mistyped keys raise ConfigError naming
/// the offending field.
ExperimentConfig parse_config_json(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& file);

/// Resolved-config echo, parseable by parse_config_json again.
std::string config_to_json(const ExperimentConfig& config, int indent = 2);

inline constexpr const char* kToolName = "gmocso";
inline constexpr const char* kToolVersion = "0.1.0";

/// Executes runs x problems optimizations and persists fronts, positions,
/// per-run elapsed times and a manifest under out_dir. jobs > 1 runs
/// independent optimizations on worker threads; outputs are identical to
/// a serial execution except for elapsed times.
void cmd_run(const ExperimentConfig& config, const std::filesystem::path& out_dir,
             int jobs = 1);

/// Computes rgd/spacing/spread/elapsed per run from a results directory,
/// writes metrics.csv and summary.csv next to the results, and prints the
/// per-problem mean/std summary. `reference_override`, when set, replaces
/// the per-problem reference sources recorded in the manifest.
void cmd_metrics(const std::filesystem::path& results_dir,
                 const std::optional<ReferenceSpec>& reference_override,
                 std::ostream& out);

/// Cross-algorithm comparison over two or more metrics.csv files: prints
/// the rank table (per-row ranks, per-metric subtotals, overall ranking)
/// and the baseline-vs-others p-value grid with significance flags.
void cmd_compare(const std::vector<std::filesystem::path>& metrics_files,
                 const std::string& baseline, Scalar alpha, std::ostream& out);

/// Exports plot-ready CSVs (per-run fronts, reference front, one combined
/// file with a run-id column) for a single problem of a results directory.
void cmd_plotdata(const std::filesystem::path& results_dir,
                  const std::string& problem, std::ostream& out);

/// Writes the analytic reference front of a problem as a front CSV.
void cmd_reference(const std::string& problem, int n_points,
                   const std::filesystem::path& out_file);

}  // namespace gmocso

#endif  // GMOCSO_EXPERIMENT_HPP
