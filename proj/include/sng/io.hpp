#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sng/dataset.hpp"
#include "sng/errors.hpp"

namespace sng {

struct CsvOptions {
    std::optional<std::size_t> label_column;  // extracted as truth labels
    bool header = false;                      // skip the first line
};

// Comma-separated numeric rows, UTF-8, no header by default. When a label
// column is given, its distinct cell values (numeric or not) map to 0..c-1 in
// first-appearance order.
Dataset load_csv(const std::string& path, const CsvOptions& options = {});

// Feature rows with 17 significant digits; the truth column, when present, is
// appended last so load_csv(path, {.label_column = dim}) round-trips.
void save_csv(const Dataset& data, const std::string& path);

// Binary layout: magic "SNGD", version byte 1, little-endian u64 n and dim,
// then n*dim little-endian IEEE doubles, row-major.
void save_binary(const Dataset& data, const std::string& path);
Dataset load_binary(const std::string& path);

// Reads either format, deciding by the 4-byte magic.
Dataset load_points(const std::string& path, const CsvOptions& csv_options = {});

// One integer per line, newline-terminated; noise is the literal "-1".
void save_labels(std::span<const std::int32_t> labels, const std::string& path);
std::vector<std::int32_t> load_labels(const std::string& path);

inline void save_clustering(const Clustering& c, const std::string& path) {
    save_labels(c.assignment, path);
}

}  // namespace sng
