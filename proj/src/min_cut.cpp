#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sng/graph.hpp"

namespace sng {

// Stoer-Wagner with an adjacency matrix of contracted weights. O(V^3), fine
// for the desk-scale graphs the theory experiments feed it (V <= ~1500).
// Ties in the maximum-adjacency ordering go to the smallest vertex index, so
// the run is deterministic.
std::uint64_t min_cut(const SampledGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("min_cut requires at least 2 vertices");

    std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, 0));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : g.neighbors(u)) w[u][v] = 1;

    std::vector<std::uint32_t> active(n);
    for (std::uint32_t v = 0; v < n; ++v) active[v] = v;

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> conn(n);
    std::vector<std::uint8_t> in_a(n);

    while (active.size() > 1) {
        for (std::uint32_t v : active) {
            conn[v] = 0;
            in_a[v] = 0;
        }
        std::uint32_t prev = active[0];
        in_a[prev] = 1;
        for (std::uint32_t v : active) conn[v] = w[prev][v];

        std::uint32_t last = prev;
        for (std::size_t step = 1; step < active.size(); ++step) {
            std::uint32_t pick = 0;
            std::uint64_t pick_conn = 0;
            bool found = false;
            for (std::uint32_t v : active) {
                if (in_a[v]) continue;
                if (!found || conn[v] > pick_conn) {
                    pick = v;
                    pick_conn = conn[v];
                    found = true;
                }
            }
            in_a[pick] = 1;
            prev = last;
            last = pick;
            for (std::uint32_t v : active)
                if (!in_a[v]) conn[v] += w[pick][v];
        }

        // Cut-of-the-phase: `last` against everything else.
        std::uint64_t phase = 0;
        for (std::uint32_t v : active)
            if (v != last) phase += w[last][v];
        best = std::min(best, phase);
        if (best == 0) return 0;

        // Contract `last` into `prev`.
        for (std::uint32_t v : active) {
            if (v == last || v == prev) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        active.erase(std::find(active.begin(), active.end(), last));
    }
    return best;
}

}  // namespace sng
