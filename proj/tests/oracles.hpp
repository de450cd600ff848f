// Independent reference implementations used only by tests. Everything here
// deliberately avoids the library's code paths: edges come from a plain
// double loop, components from BFS, min cuts from subset enumeration, DBSCAN
// from the classical expand-cluster procedure, and the metric oracles from
// direct pair counting and exact binomials.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "sng/dataset.hpp"
#include "sng/distance.hpp"

namespace oracle {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

inline std::set<Edge> brute_force_edges(const sng::Dataset& data, double eps,
                                        const sng::Distance& dist = sng::Distance::euclidean()) {
    std::set<Edge> edges;
    for (std::uint32_t i = 0; i < data.size(); ++i)
        for (std::uint32_t j = i + 1; j < data.size(); ++j)
            if (dist(data.row(i), data.row(j)) <= eps) edges.insert({i, j});
    return edges;
}

// BFS component labeling restricted to active vertices; ids ordered by
// smallest contained vertex.
inline std::vector<std::int32_t> bfs_components(std::size_t n, const std::set<Edge>& edges,
                                                const std::vector<bool>& active) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& [u, v] : edges) {
        if (!active[u] || !active[v]) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::int32_t> label(n, -1);
    std::int32_t next = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (!active[s] || label[s] >= 0) continue;
        const std::int32_t id = next++;
        std::deque<std::uint32_t> queue{s};
        label[s] = id;
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t v : adj[u])
                if (label[v] < 0) {
                    label[v] = id;
                    queue.push_back(v);
                }
        }
    }
    return label;
}

// Minimum cut by enumerating every proper subset containing vertex 0.
// Feasible for n <= ~20; tests stay at n <= 12.
inline std::uint64_t exhaustive_min_cut(std::size_t n, const std::vector<Edge>& edges) {
    std::uint64_t best = UINT64_MAX;
    const std::uint64_t subsets = 1ULL << (n - 1);
    for (std::uint64_t s = 0; s < subsets - 1; ++s) {
        const std::uint64_t mask = (s << 1) | 1ULL;  // vertex 0 pinned inside
        std::uint64_t crossing = 0;
        for (const auto& [u, v] : edges)
            if (((mask >> u) & 1ULL) != ((mask >> v) & 1ULL)) ++crossing;
        best = std::min(best, crossing);
    }
    return best;
}

// Classical DBSCAN by cluster expansion, written against the same contract as
// the library (self excluded from the degree, border ties to the smallest
// cluster id, final relabeling by smallest member index).
struct ReferenceClustering {
    std::vector<std::int32_t> assignment;
    std::vector<bool> core;
};

inline ReferenceClustering reference_dbscan(const sng::Dataset& data, double eps, int min_pts,
                                            const sng::Distance& dist = sng::Distance::euclidean()) {
    const std::size_t n = data.size();
    std::vector<std::vector<std::uint32_t>> neighbors(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (i != j && dist(data.row(i), data.row(j)) <= eps) neighbors[i].push_back(j);

    std::vector<bool> core(n);
    for (std::uint32_t i = 0; i < n; ++i)
        core[i] = neighbors[i].size() >= static_cast<std::size_t>(min_pts);

    std::vector<std::int32_t> assignment(n, sng::kNoiseLabel);
    std::int32_t next = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (!core[s] || assignment[s] >= 0) continue;
        const std::int32_t id = next++;
        std::deque<std::uint32_t> queue{s};
        assignment[s] = id;
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t v : neighbors[u]) {
                if (!core[v] || assignment[v] >= 0) continue;
                assignment[v] = id;
                queue.push_back(v);
            }
        }
    }
    // Border points: smallest adjacent core cluster id.
    for (std::uint32_t i = 0; i < n; ++i) {
        if (core[i]) continue;
        std::int32_t best = -1;
        for (std::uint32_t v : neighbors[i])
            if (core[v] && (best < 0 || assignment[v] < best)) best = assignment[v];
        assignment[i] = best >= 0 ? best : sng::kNoiseLabel;
    }
    // Relabel 0..k-1 by smallest member index.
    std::map<std::int32_t, std::int32_t> remap;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (assignment[i] < 0) continue;
        auto [it, inserted] = remap.emplace(assignment[i], static_cast<std::int32_t>(remap.size()));
        assignment[i] = it->second;
    }
    return {assignment, core};
}

// ARI by explicit enumeration of all point pairs: (RI - E[RI]) / (max - E[RI])
// in its pair-count form.
inline double ari_pair_counting(std::span<const std::int32_t> pred,
                                std::span<const std::int32_t> truth) {
    const std::size_t n = pred.size();
    double same_both = 0.0, same_pred = 0.0, same_truth = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool p = pred[i] == pred[j];
            const bool t = truth[i] == truth[j];
            same_both += p && t;
            same_pred += p;
            same_truth += t;
        }
    const double total = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    const double expected = same_pred * same_truth / total;
    const double maximum = 0.5 * (same_pred + same_truth);
    if (maximum == expected) return same_both == expected ? 1.0 : 0.0;
    return (same_both - expected) / (maximum - expected);
}

// AMI with the expected-MI sum evaluated from exact binomial coefficients
// (Pascal's triangle; exact in doubles for n <= 30).
inline double ami_direct_summation(std::span<const std::int32_t> pred,
                                   std::span<const std::int32_t> truth) {
    const std::size_t n = pred.size();
    std::map<std::int32_t, std::size_t> pid, tid;
    for (std::size_t i = 0; i < n; ++i) {
        pid.emplace(pred[i], pid.size());
        tid.emplace(truth[i], tid.size());
    }
    std::vector<std::vector<std::uint64_t>> counts(pid.size(),
                                                   std::vector<std::uint64_t>(tid.size(), 0));
    for (std::size_t i = 0; i < n; ++i) ++counts[pid[pred[i]]][tid[truth[i]]];

    std::vector<std::uint64_t> a(pid.size(), 0), b(tid.size(), 0);
    for (std::size_t i = 0; i < pid.size(); ++i)
        for (std::size_t j = 0; j < tid.size(); ++j) {
            a[i] += counts[i][j];
            b[j] += counts[i][j];
        }

    const double dn = static_cast<double>(n);
    double mi = 0.0;
    for (std::size_t i = 0; i < pid.size(); ++i)
        for (std::size_t j = 0; j < tid.size(); ++j) {
            const double nij = static_cast<double>(counts[i][j]);
            if (nij > 0.0)
                mi += nij / dn *
                      std::log(dn * nij / (static_cast<double>(a[i]) * static_cast<double>(b[j])));
        }
    auto entropy = [dn](const std::vector<std::uint64_t>& sums) {
        double h = 0.0;
        for (std::uint64_t s : sums)
            if (s > 0) h -= static_cast<double>(s) / dn * std::log(static_cast<double>(s) / dn);
        return h;
    };

    std::vector<std::vector<double>> choose(n + 1, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i <= n; ++i) {
        choose[i][0] = 1.0;
        for (std::size_t j = 1; j <= i; ++j)
            choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0.0);
    }

    double emi = 0.0;
    for (std::size_t i = 0; i < pid.size(); ++i)
        for (std::size_t j = 0; j < tid.size(); ++j) {
            const std::uint64_t ai = a[i], bj = b[j];
            const std::uint64_t lo = ai + bj > n ? ai + bj - n : 1;
            for (std::uint64_t x = std::max<std::uint64_t>(lo, 1); x <= std::min(ai, bj); ++x) {
                const double prob =
                    choose[ai][x] * choose[n - ai][bj - x] / choose[n][bj];
                emi += prob * (static_cast<double>(x) / dn) *
                       std::log(dn * static_cast<double>(x) /
                                (static_cast<double>(ai) * static_cast<double>(bj)));
            }
        }

    const double denominator = 0.5 * (entropy(a) + entropy(b)) - emi;
    if (denominator == 0.0) return 0.0;
    return (mi - emi) / denominator;
}

// Maps noise labels to one shared fresh cluster id, mirroring the own-cluster
// scoring policy, so label vectors can feed the pair-counting oracles.
inline std::vector<std::int32_t> noise_as_own_cluster(std::span<const std::int32_t> labels) {
    std::int32_t max_label = -1;
    for (std::int32_t v : labels) max_label = std::max(max_label, v);
    std::vector<std::int32_t> out(labels.begin(), labels.end());
    for (std::int32_t& v : out)
        if (v == sng::kNoiseLabel) v = max_label + 1;
    return out;
}

}  // namespace oracle
