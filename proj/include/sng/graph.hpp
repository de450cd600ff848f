#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "sng/dataset.hpp"
#include "sng/distance.hpp"

namespace sng {

// Undirected graph over vertex indices in compact CSR form: a flat neighbor
// array plus per-vertex offsets. Neighbor lists are sorted, self-loop free,
// duplicate free, and symmetric.
class SampledGraph {
public:
    SampledGraph() = default;

    // Builds the CSR structure from canonical (u < v) edge pairs. Pairs are
    // deduplicated; self loops are rejected.
    static SampledGraph from_edges(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return std::span<const std::uint32_t>(neighbors_.data() + offsets_[v], degree(v));
    }

    // Canonical edge list: u < v, sorted lexicographically.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    // Text dump, one "u v" line per canonical edge.
    void dump_edges(std::ostream& out) const;

    // Bytes of the CSR arrays; the memory figure reported by the CLI.
    std::size_t storage_bytes() const {
        return (n_ + 1) * sizeof(std::uint64_t) + neighbors_.size() * sizeof(std::uint32_t);
    }

    // Structural invariant check used by tests: sorted, symmetric, no self
    // loops or duplicates, degree sum equal to 2 * edge_count.
    bool check_invariants() const;

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<std::uint32_t> neighbors_;
};

struct BuildStats {
    std::uint64_t distance_evals = 0;
};

// Sampled epsilon-neighborhood graph: every vertex draws min(ceil(rate*n), n-1)
// distinct partners from the other vertices using its own substream of `seed`,
// and an undirected edge appears when either endpoint drew the other within
// eps. rate = 1 yields the exact epsilon graph for any seed. Deterministic in
// (data, eps, rate, dist, seed) regardless of `threads`.
SampledGraph build_sampled_graph(const Dataset& data, double eps, double rate, const Distance& dist,
                                 std::uint64_t seed, int threads = 0, BuildStats* stats = nullptr);

// Exact all-pairs epsilon-neighborhood graph.
SampledGraph build_full_graph(const Dataset& data, double eps, const Distance& dist,
                              int threads = 0, BuildStats* stats = nullptr);

struct ComponentLabeling {
    std::vector<std::int32_t> label;  // component id per vertex, -1 where inactive
    std::int32_t count = 0;           // ids ordered by smallest contained vertex
};

// Connected components of the subgraph induced by the active vertices. Pass an
// empty mask to treat every vertex as active.
ComponentLabeling connected_components(const SampledGraph& g, std::span<const std::uint8_t> active = {});

// Global minimum cut (Stoer-Wagner, unit edge weights). Returns 0 for a
// disconnected graph. Requires at least 2 vertices.
std::uint64_t min_cut(const SampledGraph& g);

}  // namespace sng
