#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace sng {

enum class Metric { Euclidean, Manhattan, Cosine, Custom };

// Pairwise distance evaluator. Symmetric, non-negative, d(x,x) = 0.
// within() answers d(a,b) <= eps and is the hot path of graph construction;
// for the Euclidean metric it compares squared norms and skips the sqrt.
class Distance {
public:
    using Callback = std::function<double(std::span<const double>, std::span<const double>)>;

    static Distance euclidean() { return Distance(Metric::Euclidean); }
    static Distance manhattan() { return Distance(Metric::Manhattan); }
    static Distance cosine() { return Distance(Metric::Cosine); }

    // User-supplied similarity; expected_dim, when given, is checked against
    // the dataset dimension before use.
    static Distance custom(Callback fn, std::optional<std::size_t> expected_dim = std::nullopt) {
        Distance d(Metric::Custom);
        d.callback_ = std::move(fn);
        d.expected_dim_ = expected_dim;
        return d;
    }

    static Distance parse(const std::string& name) {
        if (name == "euclidean") return euclidean();
        if (name == "manhattan") return manhattan();
        if (name == "cosine") return cosine();
        throw std::invalid_argument("unknown distance '" + name +
                                    "' (expected euclidean, manhattan, or cosine)");
    }

    Metric kind() const { return kind_; }

    void check_dim(std::size_t dim) const {
        if (expected_dim_ && *expected_dim_ != dim)
            throw std::invalid_argument("distance callback expects dimension " +
                                        std::to_string(*expected_dim_) + ", dataset has " +
                                        std::to_string(dim));
    }

    double operator()(std::span<const double> a, std::span<const double> b) const {
        switch (kind_) {
            case Metric::Euclidean: {
                double s = 0.0;
                for (std::size_t k = 0; k < a.size(); ++k) {
                    const double d = a[k] - b[k];
                    s += d * d;
                }
                return std::sqrt(s);
            }
            case Metric::Manhattan: {
                double s = 0.0;
                for (std::size_t k = 0; k < a.size(); ++k) s += std::fabs(a[k] - b[k]);
                return s;
            }
            case Metric::Cosine:
                return cosine_distance(a, b);
            case Metric::Custom:
                return callback_(a, b);
        }
        return 0.0;
    }

    bool within(std::span<const double> a, std::span<const double> b, double eps) const {
        if (kind_ == Metric::Euclidean) {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                const double d = a[k] - b[k];
                s += d * d;
            }
            return s <= eps * eps;
        }
        return (*this)(a, b) <= eps;
    }

private:
    explicit Distance(Metric kind) : kind_(kind) {}

    static double cosine_distance(std::span<const double> a, std::span<const double> b) {
        double dot = 0.0, na = 0.0, nb = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            dot += a[k] * b[k];
            na += a[k] * a[k];
            nb += b[k] * b[k];
        }
        if (na == 0.0 || nb == 0.0)
            throw std::invalid_argument("cosine distance is undefined for zero vectors");
        double c = dot / (std::sqrt(na) * std::sqrt(nb));
        if (c > 1.0) c = 1.0;
        if (c < -1.0) c = -1.0;
        return 1.0 - c;
    }

    Metric kind_;
    Callback callback_;
    std::optional<std::size_t> expected_dim_;
};

}  // namespace sng
