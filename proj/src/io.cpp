#include "sng/io.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <unordered_map>

static_assert(std::endian::native == std::endian::little,
              "binary dataset format assumes a little-endian host");

namespace sng {

namespace {

constexpr char kMagic[4] = {'S', 'N', 'G', 'D'};
constexpr std::uint8_t kVersion = 1;

std::vector<std::string_view> split_fields(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

double parse_cell(std::string_view cell, std::size_t line_no) {
    // Tolerate surrounding spaces; from_chars itself is strict.
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ParseError("cell '" + std::string(cell) + "' is not a number", line_no);
    if (!std::isfinite(value)) throw ParseError("cell value is not finite", line_no);
    return value;
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    std::vector<double> values;
    std::vector<std::int32_t> labels;
    std::unordered_map<std::string, std::int32_t> label_ids;
    std::vector<std::string_view> fields;

    std::string line;
    std::size_t line_no = 0;
    std::size_t columns = 0;
    bool skipped_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (options.header && !skipped_header) {
            skipped_header = true;
            continue;
        }
        if (line.empty()) continue;

        split_fields(line, fields);
        if (columns == 0) {
            columns = fields.size();
            if (options.label_column && *options.label_column >= columns)
                throw ParseError("label column " + std::to_string(*options.label_column) +
                                     " out of range for " + std::to_string(columns) + " columns",
                                 line_no);
        } else if (fields.size() != columns) {
            throw ParseError("expected " + std::to_string(columns) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        }

        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (options.label_column && c == *options.label_column) {
                const std::string key(fields[c]);
                auto [it, inserted] =
                    label_ids.emplace(key, static_cast<std::int32_t>(label_ids.size()));
                labels.push_back(it->second);
            } else {
                values.push_back(parse_cell(fields[c], line_no));
            }
        }
    }

    if (columns == 0) throw ParseError("file '" + path + "' contains no data rows");
    const std::size_t dim = options.label_column ? columns - 1 : columns;
    if (dim == 0) throw ParseError("file '" + path + "' has no feature columns");

    Dataset data(std::move(values), dim);
    if (options.label_column) data.set_truth(std::move(labels));
    return data;
}

void save_csv(const Dataset& data, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    char buf[64];
    for (std::size_t i = 0; i < data.size(); ++i) {
        auto row = data.row(i);
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
            if (c > 0) std::fputc(',', f);
            std::fputs(buf, f);
        }
        if (data.has_truth()) std::fprintf(f, ",%d", data.truth()[i]);
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0) throw IoError("error while writing '" + path + "'");
}

void save_binary(const Dataset& data, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(kMagic, 4);
    out.put(static_cast<char>(kVersion));
    const std::uint64_t n = data.size();
    const std::uint64_t dim = data.dim();
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
    out.write(reinterpret_cast<const char*>(data.values().data()),
              static_cast<std::streamsize>(data.values().size() * sizeof(double)));
    if (!out) throw IoError("error while writing '" + path + "'");
}

Dataset load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw ParseError("file '" + path + "' is not an SNGD binary dataset");
    const int version = in.get();
    if (version != kVersion)
        throw ParseError("unsupported SNGD version " + std::to_string(version));
    std::uint64_t n = 0, dim = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    in.read(reinterpret_cast<char*>(&dim), sizeof(dim));
    if (!in || n == 0 || dim == 0) throw ParseError("corrupt SNGD header in '" + path + "'");
    std::vector<double> values(n * dim);
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!in) throw ParseError("truncated SNGD payload in '" + path + "'");
    return Dataset(std::move(values), dim);
}

Dataset load_points(const std::string& path, const CsvOptions& csv_options) {
    {
        std::ifstream probe(path, std::ios::binary);
        if (!probe) throw IoError("cannot open '" + path + "' for reading");
        char magic[4] = {};
        probe.read(magic, 4);
        if (probe.gcount() == 4 && std::memcmp(magic, kMagic, 4) == 0) return load_binary(path);
    }
    return load_csv(path, csv_options);
}

void save_labels(std::span<const std::int32_t> labels, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    for (std::int32_t v : labels) std::fprintf(f, "%d\n", v);
    if (std::fclose(f) != 0) throw IoError("error while writing '" + path + "'");
}

std::vector<std::int32_t> load_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::vector<std::int32_t> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::int32_t value = 0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{} || ptr != line.data() + line.size())
            throw ParseError("label '" + line + "' is not an integer", line_no);
        labels.push_back(value);
    }
    return labels;
}

}  // namespace sng
