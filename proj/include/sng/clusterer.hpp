#pragma once

#include <cstdint>

#include "sng/dataset.hpp"
#include "sng/distance.hpp"
#include "sng/graph.hpp"

namespace sng {

struct SngParams {
    double eps = 0.0;
    int min_pts = 1;
    double rate = 1.0;
    std::uint64_t seed = 0;
    Distance dist = Distance::euclidean();
    int threads = 0;

    void validate() const {
        if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
        if (min_pts < 1) throw std::invalid_argument("min_pts must be >= 1");
        if (!(rate > 0.0) || rate > 1.0) throw std::invalid_argument("rate must lie in (0, 1]");
    }
};

// Instrumentation for a single clustering run.
struct ClusterRunInfo {
    std::uint64_t distance_evals = 0;
    std::size_t edges = 0;
    std::size_t graph_bytes = 0;
};

// Core/Border/Noise extraction from an already-built neighborhood graph:
// vertices of degree >= min_pts are Core, components of the core-induced
// subgraph become clusters, non-core vertices adjacent to a core vertex
// join that vertex's cluster (smallest cluster id on ties), the rest are
// Noise. Cluster ids are relabeled 0..k-1 by smallest member index.
Clustering cluster_graph(const SampledGraph& g, int min_pts);

// Subsampled neighborhood graph DBSCAN: the sampled epsilon graph, then
// cluster_graph.
Clustering sng_dbscan(const Dataset& data, const SngParams& params, ClusterRunInfo* info = nullptr);

// Classical DBSCAN on the exact epsilon graph; the ground-truth oracle for
// rate=1 equivalence checks.
Clustering dbscan_exact(const Dataset& data, double eps, int min_pts,
                        const Distance& dist = Distance::euclidean(), int threads = 0,
                        ClusterRunInfo* info = nullptr);

}  // namespace sng
