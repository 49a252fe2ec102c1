// gmocso command line: batch experiment runner and analysis tools.
//
// Exit codes: 0 success, 2 usage/config error, 3 I/O error,
// 4 missing-reference error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmocso/csv.hpp"
#include "gmocso/experiment.hpp"

namespace {

std::vector<std::filesystem::path> split_paths(const std::string& joined) {
    std::vector<std::filesystem::path> paths;
    std::string::size_type start = 0;
    while (start <= joined.size()) {
        const auto comma = joined.find(',', start);
        const std::string piece = joined.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) paths.emplace_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return paths;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid-based multi-objective cat swarm optimization toolkit"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "execute a batch of seeded optimizations");
    std::string run_config;
    std::string run_out;
    int run_jobs = 1;
    run_cmd->add_option("--config", run_config, "experiment config JSON")->required();
    run_cmd->add_option("--out", run_out, "output directory")->required();
    run_cmd->add_option("--jobs", run_jobs, "parallel runs")->default_val(1);

    // metrics
    auto* metrics_cmd =
        app.add_subcommand("metrics", "compute front metrics for stored results");
    std::string metrics_results;
    std::string metrics_reference;
    metrics_cmd->add_option("--results", metrics_results, "results directory")->required();
    metrics_cmd->add_option("--reference", metrics_reference,
                            "analytic | pooled | file:PATH (overrides the manifest)");

    // compare
    auto* compare_cmd =
        app.add_subcommand("compare", "rank algorithms and test significance");
    std::string compare_inputs;
    std::string compare_baseline;
    double compare_alpha = 0.05;
    compare_cmd->add_option("--inputs", compare_inputs, "comma-separated metrics CSVs")
        ->required();
    compare_cmd->add_option("--baseline", compare_baseline, "baseline algorithm label")
        ->required();
    compare_cmd->add_option("--alpha", compare_alpha, "significance level")
        ->default_val(0.05);

    // plotdata
    auto* plot_cmd = app.add_subcommand("plotdata", "export plot-ready front CSVs");
    std::string plot_results;
    std::string plot_problem;
    plot_cmd->add_option("--results", plot_results, "results directory")->required();
    plot_cmd->add_option("--problem", plot_problem, "problem id")->required();

    // reference
    auto* reference_cmd =
        app.add_subcommand("reference", "write an analytic reference front");
    std::string reference_problem;
    int reference_points = 1000;
    std::string reference_out;
    reference_cmd->add_option("--problem", reference_problem, "problem id")->required();
    reference_cmd->add_option("--points", reference_points, "number of samples")
        ->default_val(1000);
    reference_cmd->add_option("--out", reference_out, "output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd) {
            const auto config = gmocso::load_config(run_config);
            gmocso::cmd_run(config, run_out, run_jobs);
            std::cout << "results written to " << run_out << '\n';
        } else if (*metrics_cmd) {
            std::optional<gmocso::ReferenceSpec> override_spec;
            if (!metrics_reference.empty())
                override_spec = gmocso::parse_reference_spec(metrics_reference);
            gmocso::cmd_metrics(metrics_results, override_spec, std::cout);
        } else if (*compare_cmd) {
            gmocso::cmd_compare(split_paths(compare_inputs), compare_baseline,
                                compare_alpha, std::cout);
        } else if (*plot_cmd) {
            gmocso::cmd_plotdata(plot_results, plot_problem, std::cout);
        } else if (*reference_cmd) {
            gmocso::cmd_reference(reference_problem, reference_points, reference_out);
            std::cout << "reference front written to " << reference_out << '\n';
        }
    } catch (const gmocso::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gmocso::MissingReferenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const gmocso::io::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
