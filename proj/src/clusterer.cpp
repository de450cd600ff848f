#include "sng/clusterer.hpp"

#include <vector>

namespace sng {

Clustering cluster_graph(const SampledGraph& g, int min_pts) {
    if (min_pts < 1) throw std::invalid_argument("min_pts must be >= 1");
    const std::size_t n = g.vertex_count();
    const auto threshold = static_cast<std::size_t>(min_pts);

    std::vector<std::uint8_t> core(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) core[v] = g.degree(v) >= threshold ? 1 : 0;

    const ComponentLabeling comps = connected_components(g, core);

    Clustering result;
    result.assignment.assign(n, kNoiseLabel);
    result.role.assign(n, PointRole::Noise);

    for (std::uint32_t v = 0; v < n; ++v) {
        if (core[v]) {
            result.assignment[v] = comps.label[v];
            result.role[v] = PointRole::Core;
        }
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        if (core[v]) continue;
        std::int32_t best = -1;
        for (std::uint32_t u : g.neighbors(v)) {
            if (!core[u]) continue;
            const std::int32_t c = comps.label[u];
            if (best < 0 || c < best) best = c;
        }
        if (best >= 0) {
            result.assignment[v] = best;
            result.role[v] = PointRole::Border;
        }
    }

    // Relabel so ids run 0..k-1 ordered by smallest member index.
    std::vector<std::int32_t> remap(comps.count, -1);
    std::int32_t next = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::int32_t c = result.assignment[v];
        if (c < 0) continue;
        if (remap[c] < 0) remap[c] = next++;
        result.assignment[v] = remap[c];
    }
    result.cluster_count = next;
    return result;
}

Clustering sng_dbscan(const Dataset& data, const SngParams& params, ClusterRunInfo* info) {
    params.validate();
    BuildStats stats;
    const SampledGraph g = build_sampled_graph(data, params.eps, params.rate, params.dist,
                                               params.seed, params.threads, &stats);
    if (info) {
        info->distance_evals = stats.distance_evals;
        info->edges = g.edge_count();
        info->graph_bytes = g.storage_bytes();
    }
    return cluster_graph(g, params.min_pts);
}

Clustering dbscan_exact(const Dataset& data, double eps, int min_pts, const Distance& dist,
                        int threads, ClusterRunInfo* info) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
    if (min_pts < 1) throw std::invalid_argument("min_pts must be >= 1");
    BuildStats stats;
    const SampledGraph g = build_full_graph(data, eps, dist, threads, &stats);
    if (info) {
        info->distance_evals = stats.distance_evals;
        info->edges = g.edge_count();
        info->graph_bytes = g.storage_bytes();
    }
    return cluster_graph(g, min_pts);
}

}  // namespace sng
