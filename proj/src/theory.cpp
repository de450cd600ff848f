#include "sng/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sng/clusterer.hpp"
#include "sng/metrics.hpp"
#include "sng/rng.hpp"
#include "sng/union_find.hpp"

namespace sng {

namespace {

// Data generation and graph sampling must not share RNG streams, so every
// experiment cell derives separate seeds from its cell seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return rng::mix(seed ^ rng::mix(salt + 0x2545f4914f6cdd1dULL));
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_se(std::span<const double> xs) {
    MeanSe out;
    if (xs.empty()) return out;
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.se = std::sqrt(ss / static_cast<double>(xs.size() - 1)) /
                 std::sqrt(static_cast<double>(xs.size()));
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string config_n(std::size_t n) { return "n=" + std::to_string(n); }

double score_vs_truth(const Clustering& c, const std::vector<std::int32_t>& truth, bool use_ari) {
    const ContingencyTable t = contingency(c.assignment, truth, NoisePolicy::OwnCluster);
    return use_ari ? ari(t) : ami(t);
}

}  // namespace

int MinPtsWindow::midpoint_min_pts() const {
    const double target = sn * 0.5 * (lo + hi);
    auto rounded = static_cast<long long>(std::llround(target));
    if (has_integer_range()) rounded = std::clamp(rounded, min_pts_lo, min_pts_hi);
    return static_cast<int>(std::max<long long>(1, rounded));
}

MinPtsWindow compute_minpts_window(const TheoryScenario& scenario, double eps, double rate,
                                   std::size_t n) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
    if (!(rate > 0.0) || rate > 1.0) throw std::invalid_argument("rate must lie in (0, 1]");
    if (n == 0) throw std::invalid_argument("n must be >= 1");

    MinPtsWindow w;
    w.unit_volume = unit_ball_volume(scenario.dim);
    const double ball_mass = w.unit_volume * std::pow(eps, static_cast<double>(scenario.dim));
    w.lo = scenario.lambda_noise * ball_mass;
    w.hi = scenario.thinness * scenario.lambda_cluster * ball_mass;
    w.sn = rate * static_cast<double>(n);
    w.eps_ok = eps < std::min(scenario.radius_bound, scenario.separation);
    w.min_pts_lo = static_cast<long long>(std::ceil(w.lo * w.sn)) + 1;
    w.min_pts_hi = static_cast<long long>(std::floor(w.hi * w.sn));
    return w;
}

const ReportRow& ExperimentReport::get(const std::string& config,
                                       const std::string& statistic) const {
    for (const ReportRow& row : rows)
        if (row.config == config && row.statistic == statistic) return row;
    throw std::out_of_range("no report row (" + config + ", " + statistic + ")");
}

std::string ExperimentReport::to_tsv() const {
    std::string out = "config\tstatistic\tvalue\tstderr\ttrials\n";
    for (const ReportRow& row : rows) {
        out += row.config;
        out += '\t';
        out += row.statistic;
        out += '\t';
        out += format_double(row.value);
        out += '\t';
        out += row.trials > 1 ? format_double(row.se) : std::string();
        out += '\t';
        out += std::to_string(row.trials);
        out += '\n';
    }
    return out;
}

std::string ExperimentReport::to_json() const {
    std::string out = "{\"experiment\":\"" + experiment + "\",\"seed\":" + std::to_string(seed) +
                      ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& row = rows[i];
        if (i > 0) out += ',';
        out += "{\"config\":\"" + row.config + "\",\"statistic\":\"" + row.statistic +
               "\",\"value\":" + format_double(row.value) + ",\"stderr\":";
        out += row.trials > 1 ? format_double(row.se) : std::string("null");
        out += ",\"trials\":" + std::to_string(row.trials) + "}";
    }
    out += "]}\n";
    return out;
}

ExperimentReport mincut_scaling_experiment(const TheoryScenario& scenario, double eps,
                                           std::span<const std::size_t> n_grid,
                                           std::span<const std::uint64_t> seeds, int threads) {
    scenario.validate();
    if (n_grid.empty() || seeds.empty())
        throw std::invalid_argument("n grid and seeds must be non-empty");

    ExperimentReport report;
    report.experiment = "mincut";
    report.seed = seeds[0];
    const double bound = 0.25 * scenario.lambda_cluster * scenario.thinness *
                         unit_ball_volume(scenario.dim) *
                         std::pow(eps, static_cast<double>(scenario.dim));
    report.add("", "lemma1_bound_ratio", bound);

    const Distance dist = Distance::euclidean();
    for (std::size_t n : n_grid) {
        std::vector<double> ratios, degree_ratios;
        long long disconnected = 0, degree_violations = 0;
        for (std::uint64_t seed : seeds) {
            const Dataset data = generate_theory_scenario(scenario, n, derive_seed(seed, n));
            std::vector<std::uint32_t> members;
            for (std::size_t i = 0; i < data.size(); ++i)
                if (data.truth()[i] == 0) members.push_back(static_cast<std::uint32_t>(i));
            if (members.size() < 2) {
                ++disconnected;
                continue;
            }
            const Dataset cluster_points = data.select(members);
            const SampledGraph g = build_full_graph(cluster_points, eps, dist, threads);
            if (connected_components(g).count != 1) {
                ++disconnected;
                continue;
            }
            const std::uint64_t cut = min_cut(g);
            std::size_t min_degree = g.vertex_count();
            for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
                min_degree = std::min(min_degree, g.degree(v));
            if (cut > min_degree) ++degree_violations;
            ratios.push_back(static_cast<double>(cut) / static_cast<double>(n));
            degree_ratios.push_back(static_cast<double>(min_degree) / static_cast<double>(n));
        }
        const auto stat = mean_se(ratios);
        const auto deg = mean_se(degree_ratios);
        report.add(config_n(n), "mincut_ratio", stat.mean, stat.se,
                   static_cast<long long>(ratios.size()));
        report.add(config_n(n), "min_degree_ratio", deg.mean, deg.se,
                   static_cast<long long>(degree_ratios.size()));
        report.add(config_n(n), "disconnected_runs", static_cast<double>(disconnected));
        report.add(config_n(n), "mincut_above_min_degree", static_cast<double>(degree_violations));
    }
    return report;
}

ExperimentReport karger_connectivity_trial(const SampledGraph& g, std::span<const double> s_grid,
                                           int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::size_t n = g.vertex_count();
    if (n < 2 || connected_components(g).count != 1)
        throw std::invalid_argument("karger trial requires a connected input graph");

    const auto edges = g.edges();
    const std::uint64_t cut = min_cut(g);

    ExperimentReport report;
    report.experiment = "karger";
    report.seed = seed;
    report.add("", "min_cut", static_cast<double>(cut));
    report.add("", "karger_threshold_rate",
               std::log(static_cast<double>(n)) / static_cast<double>(cut));

    for (std::size_t si = 0; si < s_grid.size(); ++si) {
        const double s = s_grid[si];
        if (s < 0.0 || s > 1.0) throw std::invalid_argument("edge rates must lie in [0, 1]");
        long long connected = 0;
        for (int trial = 0; trial < trials; ++trial) {
            rng::Stream stream =
                rng::substream(seed, (static_cast<std::uint64_t>(si) << 32) | static_cast<std::uint32_t>(trial));
            UnionFind uf(n);
            std::size_t merges = 0;
            for (const auto& [u, v] : edges)
                if (stream.next_bernoulli(s) && uf.unite(u, v)) ++merges;
            if (merges == n - 1) ++connected;
        }
        const double freq = static_cast<double>(connected) / static_cast<double>(trials);
        const double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(trials));
        char cfg[32];
        std::snprintf(cfg, sizeof(cfg), "s=%.6g", s);
        report.add(cfg, "connect_freq", freq, se, trials);
    }
    return report;
}

ExperimentReport recovery_experiment(const BallMixtureSpec& spec,
                                     std::span<const std::size_t> n_grid, double multiplier,
                                     std::span<const std::uint64_t> seeds, double eps_override,
                                     int threads) {
    spec.validate();
    if (n_grid.empty() || seeds.empty())
        throw std::invalid_argument("n grid and seeds must be non-empty");
    if (!(multiplier > 0.0)) throw std::invalid_argument("multiplier must be > 0");

    const TheoryScenario scenario = TheoryScenario::from_ball_mixture(spec);
    const double eps = eps_override > 0.0 ? eps_override : spec.radius / 2.0;

    ExperimentReport report;
    report.experiment = "recovery";
    report.seed = spec.seed;
    report.add("", "eps", eps);
    report.add("", "multiplier", multiplier);

    for (std::size_t n : n_grid) {
        const double rate =
            std::min(1.0, multiplier * std::log(static_cast<double>(n)) / static_cast<double>(n));
        const MinPtsWindow window = compute_minpts_window(scenario, eps, rate, n);
        const int min_pts = window.midpoint_min_pts();

        std::vector<double> aris, amis, cluster_counts;
        for (std::uint64_t seed : seeds) {
            BallMixtureSpec cell = spec;
            cell.n = n;
            cell.seed = derive_seed(seed ^ spec.seed, n);
            const Dataset data = generate_ball_mixture(cell);

            SngParams params;
            params.eps = eps;
            params.min_pts = min_pts;
            params.rate = rate;
            params.seed = derive_seed(seed ^ spec.seed, n + 0x9e3779b9ULL);
            params.threads = threads;
            const Clustering c = sng_dbscan(data, params);

            aris.push_back(score_vs_truth(c, data.truth(), true));
            amis.push_back(score_vs_truth(c, data.truth(), false));
            cluster_counts.push_back(static_cast<double>(c.cluster_count));
        }
        const auto ari_stat = mean_se(aris);
        const auto ami_stat = mean_se(amis);
        const auto k_stat = mean_se(cluster_counts);
        const auto trials = static_cast<long long>(seeds.size());
        report.add(config_n(n), "rate", rate);
        report.add(config_n(n), "min_pts", static_cast<double>(min_pts));
        report.add(config_n(n), "ari", ari_stat.mean, ari_stat.se, trials);
        report.add(config_n(n), "ami", ami_stat.mean, ami_stat.se, trials);
        report.add(config_n(n), "clusters", k_stat.mean, k_stat.se, trials);
    }
    return report;
}

int levelset_calibrated_min_pts(const LevelSetScenario& scenario, double eps, double rate,
                                std::size_t n) {
    const double sn = rate * static_cast<double>(n);
    const double smoothing = scenario.c_upper * std::pow(eps, scenario.beta);
    const double deviation =
        std::sqrt((std::log(4.0 * static_cast<double>(n)) + std::log(1.0 / scenario.delta)) / sn);
    const double density_threshold = scenario.level - smoothing - deviation;
    if (density_threshold <= 0.0) {
        if (scenario.level <= smoothing)
            throw std::invalid_argument(
                "Theorem-2 calibration non-positive: smoothing term C_hat*eps^beta (" +
                std::to_string(smoothing) + ") reaches the level " + std::to_string(scenario.level));
        throw std::invalid_argument(
            "Theorem-2 calibration non-positive: deviation term sqrt((log(4n)+log(1/delta))/(s*n)) (" +
            std::to_string(deviation) + ") exhausts the level margin " +
            std::to_string(scenario.level - smoothing));
    }
    const double raw = unit_ball_volume(scenario.dim) *
                       std::pow(eps, static_cast<double>(scenario.dim)) * sn * density_threshold;
    const auto min_pts = static_cast<long long>(std::llround(raw));
    if (min_pts < 1)
        throw std::invalid_argument("Theorem-2 calibration yields MinPts < 1 (raw value " +
                                    std::to_string(raw) + "); increase s*n or eps");
    return static_cast<int>(min_pts);
}

ExperimentReport levelset_experiment(const LevelSetScenario& scenario, double eps, double rate,
                                     std::span<const std::size_t> n_grid,
                                     std::span<const std::uint64_t> seeds, int threads) {
    scenario.validate();
    if (n_grid.empty() || seeds.empty())
        throw std::invalid_argument("n grid and seeds must be non-empty");

    ExperimentReport report;
    report.experiment = "levelset";
    report.seed = seeds[0];
    report.add("", "eps", eps);
    report.add("", "rate", rate);
    report.add("", "support_diameter", scenario.support_diameter());

    constexpr std::size_t kTruthSamples = 10000;
    const Dataset truth_set = scenario.sample_level_set(kTruthSamples, 7);
    report.add("", "truth_discretization", static_cast<double>(kTruthSamples));

    const Distance dist = Distance::euclidean();
    for (std::size_t n : n_grid) {
        const int min_pts = levelset_calibrated_min_pts(scenario, eps, rate, n);
        const double eta =
            std::sqrt((std::log(4.0 * static_cast<double>(n)) + std::log(1.0 / scenario.delta)) /
                      (rate * static_cast<double>(n)));

        std::vector<double> distances;
        long long empty_recoveries = 0;
        for (std::uint64_t seed : seeds) {
            const Dataset data = generate_levelset_scenario(scenario, n, derive_seed(seed, n));
            SngParams params;
            params.eps = eps;
            params.min_pts = min_pts;
            params.rate = rate;
            params.seed = derive_seed(seed, n + 0x9e3779b9ULL);
            params.threads = threads;
            const Clustering c = sng_dbscan(data, params);

            std::vector<std::uint32_t> recovered;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c.assignment[i] != kNoiseLabel) recovered.push_back(static_cast<std::uint32_t>(i));
            if (recovered.empty()) {
                ++empty_recoveries;
                continue;
            }
            distances.push_back(hausdorff(data.select(recovered), truth_set, dist));
        }
        const auto stat = mean_se(distances);
        report.add(config_n(n), "min_pts", static_cast<double>(min_pts));
        report.add(config_n(n), "eta", eta);
        report.add(config_n(n), "theorem_rate",
                   std::pow(eta, 1.0 / scenario.beta) + eps);
        report.add(config_n(n), "hausdorff", stat.mean, stat.se,
                   static_cast<long long>(distances.size()));
        report.add(config_n(n), "empty_recoveries", static_cast<double>(empty_recoveries));
    }
    return report;
}

}  // namespace sng
