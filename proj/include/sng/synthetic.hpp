#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "sng/dataset.hpp"

namespace sng {

// Volume of the unit ball in `dim` dimensions: pi^(d/2) / Gamma(d/2 + 1).
double unit_ball_volume(std::size_t dim);

// Worst-case ratio Volume(B(x, r) ∩ Ball) / (v_D r^D) over points x of a
// D-ball and radii r up to the ball radius; attained by a boundary point at
// r = R. This is the thinness constant a solid ball supports.
double ball_thinness_constant(std::size_t dim);

// Uniform mixture of equal-radius balls; truth label is the ball index.
struct BallMixtureSpec {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<std::vector<double>> centers;
    double radius = 1.0;
    std::vector<double> weights;  // mixing proportions, sum to 1
    std::uint64_t seed = 0;

    // Three unit balls in R^3 with centers at mutual distance 6 and equal
    // weights: comfortably separated, so recovery hinges on the sampling rate.
    static BallMixtureSpec three_balls(std::size_t n, std::uint64_t seed);

    void validate() const;
};

Dataset generate_ball_mixture(const BallMixtureSpec& spec);

// Piecewise-constant density: lambda_cluster on equal-radius balls,
// lambda_noise on a surrounding box minus a moat of width `separation`
// around every ball, zero in the moat.
struct TheoryScenario {
    std::size_t dim = 0;
    std::vector<std::vector<double>> centers;
    double cluster_radius = 1.0;
    double lambda_cluster = 0.0;
    double lambda_noise = 0.0;
    double separation = std::numeric_limits<double>::infinity();  // R_s
    double thinness = 0.0;                                        // rho
    double radius_bound = 0.0;                                    // R_0

    static TheoryScenario uniform_ball(std::size_t dim, double radius = 1.0);
    static TheoryScenario from_ball_mixture(const BallMixtureSpec& spec);
    // Clusters plus a low-density background box.
    static TheoryScenario with_noise(std::size_t dim, std::vector<std::vector<double>> centers,
                                     double radius, double lambda_noise_fraction);

    void validate() const;
    double density(std::span<const double> x) const;
    // Ball index containing x, or -1.
    int cluster_of(std::span<const double> x) const;
    bool in_noise_region(std::span<const double> x) const;
    std::vector<double> box_lo() const;
    std::vector<double> box_hi() const;
};

Dataset generate_theory_scenario(const TheoryScenario& scenario, std::size_t n, std::uint64_t seed);

// Mixture of radially decaying bumps f_i(r) = h_i - c_i * r^beta, truncated
// at zero, with disjoint supports and equal masses. For beta = 1 the level
// regularity constants are exactly c on both sides.
struct LevelSetScenario {
    std::size_t dim = 0;
    std::vector<std::vector<double>> centers;
    std::vector<double> support_radii;
    double beta = 1.0;
    double level = 0.0;  // lambda
    double delta = 0.05;

    // Derived at construction: bump heights and decay scales normalizing the
    // mixture, plus the regularity constants.
    std::vector<double> heights;
    std::vector<double> scales;
    double c_lower = 0.0;  // C-check
    double c_upper = 0.0;  // C-hat

    static LevelSetScenario radial_bumps(std::size_t dim, std::vector<std::vector<double>> centers,
                                         std::vector<double> support_radii, double beta, double level,
                                         double delta = 0.05);

    void validate() const;
    double density(std::span<const double> x) const;
    double max_density() const;
    // Radius of the level set inside bump i (0 when the bump sits below the level).
    double level_radius(std::size_t i) const;
    bool in_level_set(std::span<const double> x) const;
    double support_diameter() const;

    // Deterministic discretization of the true level set: uniform interior
    // points interleaved with points on the level boundary sphere.
    Dataset sample_level_set(std::size_t count, std::uint64_t seed) const;
};

Dataset generate_levelset_scenario(const LevelSetScenario& scenario, std::size_t n, std::uint64_t seed);

}  // namespace sng
