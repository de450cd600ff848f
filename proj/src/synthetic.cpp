#include "sng/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sng/rng.hpp"

namespace sng {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

// Point uniform in the ball(center, radius): direction from normalized
// gaussians, radius from u^(1/D) scaling. Exact, rejection-free.
void uniform_in_ball(rng::Stream& stream, std::span<const double> center, double radius,
                     std::span<double> out) {
    const std::size_t dim = center.size();
    double norm2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        out[k] = stream.next_gaussian();
        norm2 += out[k] * out[k];
    }
    const double norm = std::sqrt(norm2);
    const double r = radius * std::pow(stream.next_unit(), 1.0 / static_cast<double>(dim));
    const double scale = norm > 0.0 ? r / norm : 0.0;
    for (std::size_t k = 0; k < dim; ++k) out[k] = center[k] + out[k] * scale;
}

void uniform_on_sphere(rng::Stream& stream, std::span<const double> center, double radius,
                       std::span<double> out) {
    const std::size_t dim = center.size();
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            out[k] = stream.next_gaussian();
            norm2 += out[k] * out[k];
        }
    } while (norm2 == 0.0);
    const double scale = radius / std::sqrt(norm2);
    for (std::size_t k = 0; k < dim; ++k) out[k] = center[k] + out[k] * scale;
}

std::size_t pick_weighted(rng::Stream& stream, std::span<const double> weights) {
    const double u = stream.next_unit();
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

void check_centers(const std::vector<std::vector<double>>& centers, std::size_t dim) {
    if (centers.empty()) throw std::invalid_argument("at least one center is required");
    for (const auto& c : centers)
        if (c.size() != dim) throw std::invalid_argument("center dimension mismatch");
}

}  // namespace

double unit_ball_volume(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
    const double d = static_cast<double>(dim);
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double ball_thinness_constant(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
    if (dim == 1) return 0.5;
    // Lens volume of B(x, R) ∩ Ball(0, R) with |x| = R, by slab quadrature
    // along the center axis: cross-sections are (D-1)-balls.
    const double R = 1.0;
    const std::size_t steps = 20000;
    const double lo = 0.0, hi = R;  // lens spans t in [R - r, R] with r = R
    const double h = (hi - lo) / static_cast<double>(steps);
    const double v_slice = unit_ball_volume(dim - 1);
    const double dm1 = static_cast<double>(dim - 1);
    auto cross = [&](double t) {
        const double a2 = R * R - t * t;              // host ball
        const double b2 = R * R - (t - R) * (t - R);  // probe ball
        const double r2 = std::max(0.0, std::min(a2, b2));
        return v_slice * std::pow(r2, dm1 / 2.0);
    };
    double sum = cross(lo) + cross(hi);  // Simpson
    for (std::size_t i = 1; i < steps; ++i)
        sum += cross(lo + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    const double lens = sum * h / 3.0;
    return lens / unit_ball_volume(dim);
}

BallMixtureSpec BallMixtureSpec::three_balls(std::size_t n, std::uint64_t seed) {
    BallMixtureSpec spec;
    spec.n = n;
    spec.dim = 3;
    spec.radius = 1.0;
    const double y = 3.0 * std::sqrt(3.0);
    spec.centers = {{0.0, 0.0, 0.0}, {6.0, 0.0, 0.0}, {3.0, y, 0.0}};
    spec.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    spec.seed = seed;
    return spec;
}

void BallMixtureSpec::validate() const {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    check_centers(centers, dim);
    if (!(radius > 0.0)) throw std::invalid_argument("radius must be > 0");
    if (weights.size() != centers.size())
        throw std::invalid_argument("one weight per center is required");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("weights must be non-negative");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-9) throw std::invalid_argument("weights must sum to 1");
}

Dataset generate_ball_mixture(const BallMixtureSpec& spec) {
    spec.validate();
    std::vector<double> values(spec.n * spec.dim);
    std::vector<std::int32_t> labels(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        rng::Stream stream = rng::substream(spec.seed, i);
        const std::size_t ball = pick_weighted(stream, spec.weights);
        labels[i] = static_cast<std::int32_t>(ball);
        uniform_in_ball(stream, spec.centers[ball], spec.radius,
                        std::span<double>(values.data() + i * spec.dim, spec.dim));
    }
    Dataset data(std::move(values), spec.dim);
    data.set_truth(std::move(labels));
    return data;
}

TheoryScenario TheoryScenario::uniform_ball(std::size_t dim, double radius) {
    TheoryScenario s;
    s.dim = dim;
    s.centers = {std::vector<double>(dim, 0.0)};
    s.cluster_radius = radius;
    s.lambda_cluster = 1.0 / (unit_ball_volume(dim) * std::pow(radius, static_cast<double>(dim)));
    s.lambda_noise = 0.0;
    s.thinness = ball_thinness_constant(dim);
    s.radius_bound = radius;
    return s;
}

TheoryScenario TheoryScenario::from_ball_mixture(const BallMixtureSpec& spec) {
    spec.validate();
    TheoryScenario s;
    s.dim = spec.dim;
    s.centers = spec.centers;
    s.cluster_radius = spec.radius;
    double w_min = 1.0;
    for (double w : spec.weights) w_min = std::min(w_min, w);
    s.lambda_cluster =
        w_min / (unit_ball_volume(spec.dim) * std::pow(spec.radius, static_cast<double>(spec.dim)));
    s.lambda_noise = 0.0;
    s.thinness = ball_thinness_constant(spec.dim);
    s.radius_bound = spec.radius;
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spec.centers.size(); ++i)
        for (std::size_t j = i + 1; j < spec.centers.size(); ++j) {
            const double d = std::sqrt(sq_dist(spec.centers[i], spec.centers[j]));
            min_gap = std::min(min_gap, d - 2.0 * spec.radius);
        }
    s.separation = min_gap;
    return s;
}

TheoryScenario TheoryScenario::with_noise(std::size_t dim, std::vector<std::vector<double>> centers,
                                          double radius, double lambda_noise_fraction) {
    TheoryScenario s;
    s.dim = dim;
    s.centers = std::move(centers);
    s.cluster_radius = radius;
    s.thinness = ball_thinness_constant(dim);
    s.radius_bound = radius;
    s.separation = 2.0 * radius;
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.centers.size(); ++i)
        for (std::size_t j = i + 1; j < s.centers.size(); ++j) {
            const double d = std::sqrt(sq_dist(s.centers[i], s.centers[j]));
            min_gap = std::min(min_gap, d - 2.0 * radius);
        }
    s.separation = std::min(s.separation, min_gap);
    // Densities are relative; the sampler normalizes. The fraction controls
    // how far below rho * lambda_C the background sits.
    s.lambda_cluster = 1.0 / (unit_ball_volume(dim) * std::pow(radius, static_cast<double>(dim)));
    s.lambda_noise = lambda_noise_fraction * s.thinness * s.lambda_cluster;
    s.validate();
    return s;
}

void TheoryScenario::validate() const {
    check_centers(centers, dim);
    if (!(cluster_radius > 0.0)) throw std::invalid_argument("cluster radius must be > 0");
    if (lambda_cluster <= 0.0 && lambda_noise <= 0.0)
        throw std::invalid_argument("scenario density is identically zero");
    if (!(thinness > 0.0) || thinness > 1.0)
        throw std::invalid_argument("thinness must lie in (0, 1]");
    if (!(thinness * lambda_cluster > lambda_noise))
        throw std::invalid_argument("requires thinness * lambda_cluster > lambda_noise");
    if (!(radius_bound > 0.0)) throw std::invalid_argument("radius bound must be > 0");
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            const double gap = std::sqrt(sq_dist(centers[i], centers[j])) - 2.0 * cluster_radius;
            if (gap < separation - 1e-12)
                throw std::invalid_argument("cluster balls are closer than the separation R_s");
        }
}

int TheoryScenario::cluster_of(std::span<const double> x) const {
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (sq_dist(x, centers[i]) <= cluster_radius * cluster_radius)
            return static_cast<int>(i);
    return -1;
}

bool TheoryScenario::in_noise_region(std::span<const double> x) const {
    if (lambda_noise <= 0.0) return false;
    const auto lo = box_lo();
    const auto hi = box_hi();
    for (std::size_t k = 0; k < dim; ++k)
        if (x[k] < lo[k] || x[k] > hi[k]) return false;
    const double moat = cluster_radius + separation;
    for (const auto& c : centers)
        if (sq_dist(x, c) < moat * moat) return false;
    return true;
}

double TheoryScenario::density(std::span<const double> x) const {
    if (cluster_of(x) >= 0) return lambda_cluster;
    if (in_noise_region(x)) return lambda_noise;
    return 0.0;
}

std::vector<double> TheoryScenario::box_lo() const {
    const double margin = lambda_noise > 0.0 ? separation + 3.0 * cluster_radius : cluster_radius;
    std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
    for (const auto& c : centers)
        for (std::size_t k = 0; k < dim; ++k) lo[k] = std::min(lo[k], c[k] - margin);
    return lo;
}

std::vector<double> TheoryScenario::box_hi() const {
    const double margin = lambda_noise > 0.0 ? separation + 3.0 * cluster_radius : cluster_radius;
    std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
    for (const auto& c : centers)
        for (std::size_t k = 0; k < dim; ++k) hi[k] = std::max(hi[k], c[k] + margin);
    return hi;
}

Dataset generate_theory_scenario(const TheoryScenario& scenario, std::size_t n, std::uint64_t seed) {
    scenario.validate();
    if (n == 0) throw std::invalid_argument("n must be >= 1");

    const auto lo = scenario.box_lo();
    const auto hi = scenario.box_hi();
    const double f_max = std::max(scenario.lambda_cluster, scenario.lambda_noise);

    std::vector<double> values(n * scenario.dim);
    std::vector<std::int32_t> labels(n);
    std::vector<double> candidate(scenario.dim);

    for (std::size_t i = 0; i < n; ++i) {
        rng::Stream stream = rng::substream(seed, i);
        while (true) {
            for (std::size_t k = 0; k < scenario.dim; ++k)
                candidate[k] = lo[k] + (hi[k] - lo[k]) * stream.next_unit();
            const double f = scenario.density(candidate);
            if (f > 0.0 && stream.next_unit() * f_max < f) break;
        }
        std::copy(candidate.begin(), candidate.end(), values.begin() + i * scenario.dim);
        const int c = scenario.cluster_of(candidate);
        labels[i] = c >= 0 ? c : kNoiseLabel;
    }

    Dataset data(std::move(values), scenario.dim);
    data.set_truth(std::move(labels));
    return data;
}

LevelSetScenario LevelSetScenario::radial_bumps(std::size_t dim,
                                                std::vector<std::vector<double>> centers,
                                                std::vector<double> support_radii, double beta,
                                                double level, double delta) {
    LevelSetScenario s;
    s.dim = dim;
    s.centers = std::move(centers);
    s.support_radii = std::move(support_radii);
    s.beta = beta;
    s.level = level;
    s.delta = delta;

    const std::size_t bumps = s.centers.size();
    if (s.support_radii.size() != bumps)
        throw std::invalid_argument("one support radius per bump is required");
    const double v_d = unit_ball_volume(dim);
    const double d = static_cast<double>(dim);
    s.heights.resize(bumps);
    s.scales.resize(bumps);
    for (std::size_t i = 0; i < bumps; ++i) {
        const double R = s.support_radii[i];
        if (!(R > 0.0)) throw std::invalid_argument("support radii must be > 0");
        // Bump mass = h * v_D * R^D * beta / (D + beta); set it to 1/bumps.
        s.heights[i] = (d + beta) / (static_cast<double>(bumps) * beta * v_d * std::pow(R, d));
        s.scales[i] = s.heights[i] / std::pow(R, beta);
    }
    s.c_lower = *std::min_element(s.scales.begin(), s.scales.end());
    s.c_upper = *std::max_element(s.scales.begin(), s.scales.end());
    s.validate();
    return s;
}

void LevelSetScenario::validate() const {
    check_centers(centers, dim);
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
    if (!(delta > 0.0) || delta >= 1.0) throw std::invalid_argument("delta must lie in (0, 1)");
    if (c_lower > c_upper) throw std::invalid_argument("requires c_lower <= c_upper");
    if (level >= max_density())
        throw std::invalid_argument("level sits above the maximum density: empty level set");
    if (!(level > 0.0)) throw std::invalid_argument("level must be > 0");
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            const double d = std::sqrt(sq_dist(centers[i], centers[j]));
            if (d < support_radii[i] + support_radii[j])
                throw std::invalid_argument("bump supports must be disjoint");
        }
}

double LevelSetScenario::density(std::span<const double> x) const {
    double f = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double r = std::sqrt(sq_dist(x, centers[i]));
        if (r < support_radii[i])
            f += std::max(0.0, heights[i] - scales[i] * std::pow(r, beta));
    }
    return f;
}

double LevelSetScenario::max_density() const {
    return *std::max_element(heights.begin(), heights.end());
}

double LevelSetScenario::level_radius(std::size_t i) const {
    if (heights[i] <= level) return 0.0;
    return std::pow((heights[i] - level) / scales[i], 1.0 / beta);
}

bool LevelSetScenario::in_level_set(std::span<const double> x) const {
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double r_level = level_radius(i);
        if (r_level > 0.0 && sq_dist(x, centers[i]) <= r_level * r_level) return true;
    }
    return false;
}

double LevelSetScenario::support_diameter() const {
    double diameter = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        diameter = std::max(diameter, 2.0 * support_radii[i]);
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            diameter = std::max(diameter, std::sqrt(sq_dist(centers[i], centers[j])) +
                                              support_radii[i] + support_radii[j]);
    }
    return diameter;
}

Dataset LevelSetScenario::sample_level_set(std::size_t count, std::uint64_t seed) const {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (level_radius(i) > 0.0) live.push_back(i);
    if (live.empty()) throw std::invalid_argument("empty level set");

    std::vector<double> values(count * dim);
    for (std::size_t i = 0; i < count; ++i) {
        rng::Stream stream = rng::substream(seed ^ 0xace1f5e7d00dULL, i);
        const std::size_t bump = live[i % live.size()];
        const double r_level = level_radius(bump);
        auto out = std::span<double>(values.data() + i * dim, dim);
        // Alternate interior and boundary points.
        if (i % 2 == 0)
            uniform_in_ball(stream, centers[bump], r_level, out);
        else
            uniform_on_sphere(stream, centers[bump], r_level, out);
    }
    return Dataset(std::move(values), dim);
}

Dataset generate_levelset_scenario(const LevelSetScenario& scenario, std::size_t n,
                                   std::uint64_t seed) {
    scenario.validate();
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    const std::size_t bumps = scenario.centers.size();

    std::vector<double> values(n * scenario.dim);
    for (std::size_t i = 0; i < n; ++i) {
        rng::Stream stream = rng::substream(seed, i);
        const std::size_t bump = stream.next_below(bumps);  // equal masses
        const double h = scenario.heights[bump];
        auto out = std::span<double>(values.data() + i * scenario.dim, scenario.dim);
        while (true) {
            uniform_in_ball(stream, scenario.centers[bump], scenario.support_radii[bump], out);
            const double r = std::sqrt(sq_dist(out, scenario.centers[bump]));
            const double f = h - scenario.scales[bump] * std::pow(r, scenario.beta);
            if (stream.next_unit() * h < f) break;
        }
    }
    return Dataset(std::move(values), scenario.dim);
}

}  // namespace sng
