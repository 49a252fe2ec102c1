#ifndef GMOCSO_CSV_HPP
#define GMOCSO_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmocso/types.hpp"

namespace gmocso::io {

/// File-system or parse failure while reading/writing result files.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar formatted with 17 significant digits (lossless double round-trip).
std::string format_scalar(Scalar value);

/// Front files: header "f1,f2", one objective point per row.
void write_front_csv(const std::filesystem::path& file,
                     const std::vector<ObjectiveVector>& front);
std::vector<ObjectiveVector> read_front_csv(const std::filesystem::path& file);

/// Position files: header "x1,...,xn", one decision vector per row.
void write_positions_csv(const std::filesystem::path& file,
                         const std::vector<Vector>& positions);
std::vector<Vector> read_positions_csv(const std::filesystem::path& file);

/// One row of the per-run metrics table.
struct MetricsRow {
    std::string problem;
    std::string algorithm;
    int run = 0;
    std::uint64_t seed = 0;
    Scalar rgd = 0;
    Scalar spacing = 0;
    Scalar spread = 0;
    Scalar elapsed_seconds = 0;
};

void write_metrics_csv(const std::filesystem::path& file,
                       const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& file);

}  // namespace gmocso::io

#endif  // GMOCSO_CSV_HPP
