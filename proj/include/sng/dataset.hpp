#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sng {

// Label written for unclustered points, both in memory and in label files.
inline constexpr std::int32_t kNoiseLabel = -1;

// A row-major n x dim matrix of finite reals, optionally carrying one
// ground-truth label per row.
class Dataset {
public:
    Dataset() = default;

    Dataset(std::vector<double> values, std::size_t dim) : values_(std::move(values)), dim_(dim) {
        if (dim_ == 0) throw std::invalid_argument("dataset dimension must be >= 1");
        if (values_.empty() || values_.size() % dim_ != 0)
            throw std::invalid_argument("dataset values do not form n x dim rows");
        for (double v : values_)
            if (!std::isfinite(v)) throw std::invalid_argument("dataset contains a non-finite value");
    }

    std::size_t size() const { return dim_ == 0 ? 0 : values_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    bool empty() const { return values_.empty(); }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(values_.data() + i * dim_, dim_);
    }

    const std::vector<double>& values() const { return values_; }

    bool has_truth() const { return truth_.has_value(); }
    const std::vector<std::int32_t>& truth() const { return *truth_; }

    void set_truth(std::vector<std::int32_t> labels) {
        if (labels.size() != size())
            throw std::invalid_argument("truth labels must have one entry per row");
        truth_ = std::move(labels);
    }

    void clear_truth() { truth_.reset(); }

    // New dataset made of the given rows, truth labels carried along.
    Dataset select(std::span<const std::uint32_t> rows) const {
        std::vector<double> vals;
        vals.reserve(rows.size() * dim_);
        for (std::uint32_t r : rows) {
            auto src = row(r);
            vals.insert(vals.end(), src.begin(), src.end());
        }
        Dataset out(std::move(vals), dim_);
        if (truth_) {
            std::vector<std::int32_t> t;
            t.reserve(rows.size());
            for (std::uint32_t r : rows) t.push_back((*truth_)[r]);
            out.set_truth(std::move(t));
        }
        return out;
    }

private:
    std::vector<double> values_;
    std::size_t dim_ = 0;
    std::optional<std::vector<std::int32_t>> truth_;
};

enum class PointRole : std::uint8_t { Core, Border, Noise };

// Per-point cluster assignment. Core and Border points carry a cluster id in
// [0, cluster_count); Noise points carry kNoiseLabel.
struct Clustering {
    std::vector<std::int32_t> assignment;
    std::vector<PointRole> role;
    std::int32_t cluster_count = 0;

    std::size_t size() const { return assignment.size(); }

    std::size_t count_role(PointRole r) const {
        std::size_t c = 0;
        for (PointRole x : role)
            if (x == r) ++c;
        return c;
    }
};

}  // namespace sng
