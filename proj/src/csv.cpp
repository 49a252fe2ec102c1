#include "gmocso/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gmocso::io {

namespace {

constexpr const char* kFrontHeader = "f1,f2";
constexpr const char* kMetricsHeader =
    "problem,algorithm,run,seed,rgd,spacing,spread,elapsed_seconds";

std::ofstream open_for_write(const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot open for writing: " + file.string());
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open for reading: " + file.string());
    return in;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

Scalar parse_scalar(const std::string& text, const std::filesystem::path& file) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const Scalar value = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw IoError("bad numeric field '" + text + "' in " + file.string());
    return value;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::uint64_t parse_u64(const std::string& text, const std::filesystem::path& file) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const std::uint64_t value = std::strtoull(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw IoError("bad integer field '" + text + "' in " + file.string());
    return value;
}

}  // namespace

std::string format_scalar(Scalar value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_front_csv(const std::filesystem::path& file,
                     const std::vector<ObjectiveVector>& front) {
    auto out = open_for_write(file);
    out << kFrontHeader << '\n';
    for (const ObjectiveVector& p : front)
        out << format_scalar(p[0]) << ',' << format_scalar(p[1]) << '\n';
    if (!out.flush()) throw IoError("write failed: " + file.string());
}

std::vector<ObjectiveVector> read_front_csv(const std::filesystem::path& file) {
    auto in = open_for_read(file);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kFrontHeader)
        throw IoError("missing 'f1,f2' header in " + file.string());
    std::vector<ObjectiveVector> front;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 2)
            throw IoError("expected 2 columns in " + file.string());
        ObjectiveVector p(2);
        p << parse_scalar(fields[0], file), parse_scalar(fields[1], file);
        front.push_back(std::move(p));
    }
    return front;
}

void write_positions_csv(const std::filesystem::path& file,
                         const std::vector<Vector>& positions) {
    auto out = open_for_write(file);
    const Eigen::Index dims = positions.empty() ? 0 : positions.front().size();
    for (Eigen::Index d = 0; d < dims; ++d) out << (d ? "," : "") << 'x' << (d + 1);
    out << '\n';
    for (const Vector& x : positions) {
        for (Eigen::Index d = 0; d < x.size(); ++d)
            out << (d ? "," : "") << format_scalar(x[d]);
        out << '\n';
    }
    if (!out.flush()) throw IoError("write failed: " + file.string());
}

std::vector<Vector> read_positions_csv(const std::filesystem::path& file) {
    auto in = open_for_read(file);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty positions file: " + file.string());
    const std::size_t dims = split_fields(strip_cr(line)).size();
    std::vector<Vector> positions;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != dims)
            throw IoError("ragged row in " + file.string());
        Vector x(static_cast<Eigen::Index>(dims));
        for (std::size_t d = 0; d < dims; ++d)
            x[static_cast<Eigen::Index>(d)] = parse_scalar(fields[d], file);
        positions.push_back(std::move(x));
    }
    return positions;
}

void write_metrics_csv(const std::filesystem::path& file,
                       const std::vector<MetricsRow>& rows) {
    auto out = open_for_write(file);
    out << kMetricsHeader << '\n';
    for (const MetricsRow& r : rows) {
        out << r.problem << ',' << r.algorithm << ',' << r.run << ',' << r.seed << ','
            << format_scalar(r.rgd) << ',' << format_scalar(r.spacing) << ','
            << format_scalar(r.spread) << ',' << format_scalar(r.elapsed_seconds)
            << '\n';
    }
    if (!out.flush()) throw IoError("write failed: " + file.string());
}

std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& file) {
    auto in = open_for_read(file);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kMetricsHeader)
        throw IoError("missing metrics header in " + file.string());
    std::vector<MetricsRow> rows;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 8)
            throw IoError("expected 8 columns in " + file.string());
        MetricsRow r;
        r.problem = fields[0];
        r.algorithm = fields[1];
        r.run = static_cast<int>(parse_u64(fields[2], file));
        r.seed = parse_u64(fields[3], file);
        r.rgd = parse_scalar(fields[4], file);
        r.spacing = parse_scalar(fields[5], file);
        r.spread = parse_scalar(fields[6], file);
        r.elapsed_seconds = parse_scalar(fields[7], file);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace gmocso::io
