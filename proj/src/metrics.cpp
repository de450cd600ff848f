#include "sng/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace sng {

namespace {

// choose(x, 2) as an exact integer.
std::uint64_t pairs2(std::uint64_t x) { return x * (x - 1) / 2; }

// Cumulative log-factorial table: lf[k] = log(k!). Exact summation keeps the
// expected-MI term stable up to n ~ 1e6.
std::vector<double> log_factorials(std::uint64_t upto) {
    std::vector<double> lf(upto + 1, 0.0);
    for (std::uint64_t k = 2; k <= upto; ++k) lf[k] = lf[k - 1] + std::log(static_cast<double>(k));
    return lf;
}

}  // namespace

ContingencyTable contingency(std::span<const std::int32_t> pred, std::span<const std::int32_t> truth,
                             NoisePolicy policy) {
    if (pred.size() != truth.size())
        throw std::invalid_argument("pred and truth must have equal lengths");

    constexpr std::size_t kNoiseRow = std::numeric_limits<std::size_t>::max();

    std::unordered_map<std::int32_t, std::size_t> pred_ids, truth_ids;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    cells.reserve(pred.size());

    bool has_noise_row = false;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (truth[i] < 0) throw std::invalid_argument("truth labels must be non-negative");
        if (pred[i] < 0 && pred[i] != kNoiseLabel)
            throw std::invalid_argument("pred labels must be cluster ids or -1");

        std::size_t r;
        if (pred[i] == kNoiseLabel) {
            if (policy == NoisePolicy::Exclude) continue;
            r = kNoiseRow;
            has_noise_row = true;
        } else {
            r = pred_ids.emplace(pred[i], pred_ids.size()).first->second;
        }
        const std::size_t c = truth_ids.emplace(truth[i], truth_ids.size()).first->second;
        cells.emplace_back(r, c);
    }

    const std::size_t k_pred = pred_ids.size() + (has_noise_row ? 1 : 0);
    const std::size_t k_true = truth_ids.size();

    ContingencyTable t;
    t.counts.assign(k_pred, std::vector<std::uint64_t>(k_true, 0));
    for (auto [r, c] : cells) {
        if (r == kNoiseRow) r = k_pred - 1;  // noise forms the last predicted cluster
        ++t.counts[r][c];
    }
    t.row_sums.assign(k_pred, 0);
    t.col_sums.assign(k_true, 0);
    for (std::size_t i = 0; i < k_pred; ++i)
        for (std::size_t j = 0; j < k_true; ++j) {
            t.row_sums[i] += t.counts[i][j];
            t.col_sums[j] += t.counts[i][j];
            t.total += t.counts[i][j];
        }
    return t;
}

double ari(const ContingencyTable& t) {
    if (t.total < 2) throw std::invalid_argument("ari requires at least 2 scored points");

    std::uint64_t sum_cells = 0, sum_rows = 0, sum_cols = 0;
    for (const auto& row : t.counts)
        for (std::uint64_t v : row) sum_cells += pairs2(v);
    for (std::uint64_t a : t.row_sums) sum_rows += pairs2(a);
    for (std::uint64_t b : t.col_sums) sum_cols += pairs2(b);

    const double all_pairs = static_cast<double>(pairs2(t.total));
    const double expected = static_cast<double>(sum_rows) * static_cast<double>(sum_cols) / all_pairs;
    const double maximum = 0.5 * (static_cast<double>(sum_rows) + static_cast<double>(sum_cols));
    const double numerator = static_cast<double>(sum_cells) - expected;
    const double denominator = maximum - expected;
    if (denominator == 0.0) return numerator == 0.0 ? 1.0 : 0.0;
    return numerator / denominator;
}

double ami(const ContingencyTable& t) {
    if (t.total < 1) throw std::invalid_argument("ami requires at least 1 scored point");
    const auto n = static_cast<double>(t.total);
    const std::size_t R = t.row_sums.size(), C = t.col_sums.size();

    double mi = 0.0;
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) {
            const auto nij = static_cast<double>(t.counts[i][j]);
            if (nij == 0.0) continue;
            mi += nij / n *
                  std::log(n * nij /
                           (static_cast<double>(t.row_sums[i]) * static_cast<double>(t.col_sums[j])));
        }

    auto entropy = [n](const std::vector<std::uint64_t>& sums) {
        double h = 0.0;
        for (std::uint64_t s : sums) {
            if (s == 0) continue;
            const double p = static_cast<double>(s) / n;
            h -= p * std::log(p);
        }
        return h;
    };
    const double h_pred = entropy(t.row_sums);
    const double h_true = entropy(t.col_sums);

    // E[MI] under the hypergeometric model of random tables with the given
    // margins, in log space.
    const auto lf = log_factorials(t.total);
    double emi = 0.0;
    for (std::size_t i = 0; i < R; ++i) {
        const std::uint64_t a = t.row_sums[i];
        for (std::size_t j = 0; j < C; ++j) {
            const std::uint64_t b = t.col_sums[j];
            const std::uint64_t lo = a + b > t.total ? a + b - t.total : 1;
            const std::uint64_t hi = std::min(a, b);
            for (std::uint64_t nij = std::max<std::uint64_t>(lo, 1); nij <= hi; ++nij) {
                const double log_prob = lf[a] + lf[b] + lf[t.total - a] + lf[t.total - b] -
                                        lf[t.total] - lf[nij] - lf[a - nij] - lf[b - nij] -
                                        lf[t.total - a - b + nij];
                const auto x = static_cast<double>(nij);
                emi += std::exp(log_prob) * (x / n) *
                       std::log(n * x / (static_cast<double>(a) * static_cast<double>(b)));
            }
        }
    }

    const double denominator = 0.5 * (h_pred + h_true) - emi;
    if (denominator == 0.0) return 0.0;
    const double value = (mi - emi) / denominator;
    // Guard against log-space round-off pushing an identical partition past 1.
    return std::min(value, 1.0);
}

double hausdorff(const Dataset& a, const Dataset& b, const Distance& dist) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff requires non-empty sets");
    if (a.dim() != b.dim()) throw std::invalid_argument("hausdorff sets must share a dimension");

    auto directed = [&](const Dataset& from, const Dataset& to) {
        double worst = 0.0;
        for (std::size_t i = 0; i < from.size(); ++i) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < to.size(); ++j) {
                nearest = std::min(nearest, dist(from.row(i), to.row(j)));
                if (nearest <= worst) break;  // cannot raise the supremum
            }
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace sng
