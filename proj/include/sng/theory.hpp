#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sng/graph.hpp"
#include "sng/synthetic.hpp"

namespace sng {

// Lemma-2 window for MinPts/(s*n): the open interval
// (lambda_N * v_D * eps^D, rho * lambda_C * v_D * eps^D).
struct MinPtsWindow {
    double lo = 0.0;
    double hi = 0.0;
    double unit_volume = 0.0;  // v_D
    double sn = 0.0;           // s * n
    bool eps_ok = true;        // eps < min(R_0, R_s); window is computed either way

    // Integer MinPts range {ceil(lo*sn)+1, ..., floor(hi*sn)}; empty when
    // min_pts_lo > min_pts_hi.
    long long min_pts_lo = 0;
    long long min_pts_hi = 0;

    bool has_integer_range() const { return min_pts_lo <= min_pts_hi; }

    // Margin between MinPts/(s*n) and the nearer window edge; positive inside.
    double margin(double min_pts) const {
        const double q = min_pts / sn;
        return std::min(q - lo, hi - q);
    }

    // Integer MinPts nearest the window midpoint, clamped to the valid range
    // and never below 1.
    int midpoint_min_pts() const;
};

MinPtsWindow compute_minpts_window(const TheoryScenario& scenario, double eps, double rate,
                                   std::size_t n);

struct ReportRow {
    std::string config;
    std::string statistic;
    double value = 0.0;
    double se = 0.0;  // meaningful only when trials > 1
    long long trials = 1;
};

// Tabular experiment output; rows appear in a fixed order so a report is
// byte-for-byte reproducible from (config, seed).
struct ExperimentReport {
    std::string experiment;
    std::uint64_t seed = 0;
    std::vector<ReportRow> rows;

    void add(std::string config, std::string statistic, double value) {
        rows.push_back({std::move(config), std::move(statistic), value, 0.0, 1});
    }
    void add(std::string config, std::string statistic, double mean, double se, long long trials) {
        rows.push_back({std::move(config), std::move(statistic), mean, se, trials});
    }

    // Throws when the (config, statistic) pair is absent.
    const ReportRow& get(const std::string& config, const std::string& statistic) const;

    std::string to_tsv() const;
    std::string to_json() const;
};

// Lemma 1: ratio min_cut / n of each generated cluster's exact eps-graph
// against the 1/4 * lambda_C * rho * v_D * eps^D bound, across a grid of n.
ExperimentReport mincut_scaling_experiment(const TheoryScenario& scenario, double eps,
                                           std::span<const std::size_t> n_grid,
                                           std::span<const std::uint64_t> seeds, int threads = 0);

// Lemma 3: empirical connectivity frequency of Bernoulli(s) edge subsampling
// of a fixed connected graph, across a grid of rates.
ExperimentReport karger_connectivity_trial(const SampledGraph& g, std::span<const double> s_grid,
                                           int trials, std::uint64_t seed);

// Theorem 1 / Figure 1: cluster recovery of a ball mixture under
// rate = min(1, multiplier * log n / n), eps and MinPts from the Lemma-2
// window midpoint. eps_override = 0 picks radius/2.
ExperimentReport recovery_experiment(const BallMixtureSpec& spec,
                                     std::span<const std::size_t> n_grid, double multiplier,
                                     std::span<const std::uint64_t> seeds, double eps_override = 0.0,
                                     int threads = 0);

// Theorem 2: Hausdorff distance between the recovered cluster union and the
// analytic level set, with MinPts from the Theorem-2 calibration.
ExperimentReport levelset_experiment(const LevelSetScenario& scenario, double eps, double rate,
                                     std::span<const std::size_t> n_grid,
                                     std::span<const std::uint64_t> seeds, int threads = 0);

// MinPts from the Theorem-2 calibration; throws when a term drives it below 1.
int levelset_calibrated_min_pts(const LevelSetScenario& scenario, double eps, double rate,
                                std::size_t n);

}  // namespace sng
