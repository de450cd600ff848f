#include "sng/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "sng/rng.hpp"
#include "sng/union_find.hpp"

namespace sng {

namespace {

void validate_graph_params(const Dataset& data, double eps, const Distance& dist) {
    if (data.empty()) throw std::invalid_argument("dataset is empty");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
    dist.check_dim(data.dim());
}

int resolve_threads(int threads, std::size_t n) {
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    // No point spawning more workers than ~one per 256 vertices.
    const std::size_t cap = n / 256 + 1;
    return static_cast<int>(std::min<std::size_t>(threads, cap));
}

// Builds CSR from canonical (u < v) pairs, deduplicating as it goes.
SampledGraph csr_from_pairs(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                            bool presorted) {
    if (!presorted) std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> canonical = std::move(pairs);
    return SampledGraph::from_edges(n, std::move(canonical));
}

// Runs fn(v) for every vertex in [0, n) over `threads` workers, contiguous
// chunks. fn must only touch per-vertex slots, so the result is independent
// of the schedule.
template <typename Fn>
void parallel_over_vertices(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t v = 0; v < n; ++v) fn(v);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([begin, end, &fn] {
            for (std::size_t v = begin; v < end; ++v) fn(v);
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace

SampledGraph SampledGraph::from_edges(std::size_t n,
                                      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    SampledGraph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);

    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self loop in edge list");
        if (u > v) std::swap(u, v);
        if (v >= n) throw std::invalid_argument("edge endpoint out of range");
    }

    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

    g.neighbors_.resize(g.offsets_[n]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Pairs are sorted (u asc, v asc), so both insertion orders stay sorted.
    for (const auto& [u, v] : edges) {
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto list = std::span<std::uint32_t>(g.neighbors_.data() + g.offsets_[v],
                                             g.offsets_[v + 1] - g.offsets_[v]);
        if (!std::is_sorted(list.begin(), list.end())) std::sort(list.begin(), list.end());
    }
    g.edge_count_ = edges.size();
    return g;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SampledGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::uint32_t v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

void SampledGraph::dump_edges(std::ostream& out) const {
    for (const auto& [u, v] : edges()) out << u << ' ' << v << '\n';
}

bool SampledGraph::check_invariants() const {
    if (offsets_.size() != n_ + 1) return false;
    std::uint64_t degree_sum = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
        auto list = neighbors(v);
        degree_sum += list.size();
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] == v || list[i] >= n_) return false;
            if (i > 0 && list[i - 1] >= list[i]) return false;
            auto back = neighbors(list[i]);
            if (!std::binary_search(back.begin(), back.end(), v)) return false;
        }
    }
    return degree_sum == 2 * edge_count_;
}

SampledGraph build_sampled_graph(const Dataset& data, double eps, double rate, const Distance& dist,
                                 std::uint64_t seed, int threads, BuildStats* stats) {
    validate_graph_params(data, eps, dist);
    if (!(rate > 0.0) || rate > 1.0) throw std::invalid_argument("rate must lie in (0, 1]");

    const std::size_t n = data.size();
    const std::size_t draws = std::min<std::size_t>(
        static_cast<std::size_t>(std::ceil(rate * static_cast<double>(n))), n - 1);

    std::vector<std::vector<std::uint32_t>> accepted(n);
    std::atomic<std::uint64_t> evals{0};
    const int workers = resolve_threads(threads, n);

    parallel_over_vertices(n, workers, [&](std::size_t vi) {
        const auto u = static_cast<std::uint32_t>(vi);
        auto x = data.row(u);
        auto& hits = accepted[u];
        std::uint64_t local_evals = 0;

        auto try_candidate = [&](std::uint32_t v) {
            ++local_evals;
            if (dist.within(x, data.row(v), eps)) hits.push_back(v);
        };

        if (draws >= n - 1) {
            for (std::uint32_t v = 0; v < n; ++v)
                if (v != u) try_candidate(v);
        } else {
            // Floyd's sampling: `draws` distinct values from [0, n-2], then
            // shift indices >= u by one so the vertex never draws itself.
            rng::Stream stream = rng::substream(seed, u);
            std::unordered_set<std::uint64_t> chosen;
            chosen.reserve(draws * 2);
            const std::uint64_t pool = n - 1;
            for (std::uint64_t j = pool - draws; j < pool; ++j) {
                std::uint64_t t = stream.next_below(j + 1);
                if (!chosen.insert(t).second) chosen.insert(j);
            }
            for (std::uint64_t c : chosen) {
                auto v = static_cast<std::uint32_t>(c >= u ? c + 1 : c);
                try_candidate(v);
            }
        }
        evals.fetch_add(local_evals, std::memory_order_relaxed);
    });

    if (stats) stats->distance_evals = evals.load();

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::size_t total = 0;
    for (const auto& h : accepted) total += h.size();
    pairs.reserve(total);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : accepted[u])
            pairs.emplace_back(std::min(u, v), std::max(u, v));
    return csr_from_pairs(n, pairs, /*presorted=*/false);
}

SampledGraph build_full_graph(const Dataset& data, double eps, const Distance& dist, int threads,
                              BuildStats* stats) {
    validate_graph_params(data, eps, dist);

    const std::size_t n = data.size();
    std::vector<std::vector<std::uint32_t>> row_hits(n);
    std::atomic<std::uint64_t> evals{0};
    const int workers = resolve_threads(threads, n);

    parallel_over_vertices(n, workers, [&](std::size_t ui) {
        const auto u = static_cast<std::uint32_t>(ui);
        auto x = data.row(u);
        std::uint64_t local_evals = 0;
        for (std::uint32_t v = u + 1; v < n; ++v) {
            ++local_evals;
            if (dist.within(x, data.row(v), eps)) row_hits[u].push_back(v);
        }
        evals.fetch_add(local_evals, std::memory_order_relaxed);
    });

    if (stats) stats->distance_evals = evals.load();

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::size_t total = 0;
    for (const auto& h : row_hits) total += h.size();
    pairs.reserve(total);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : row_hits[u]) pairs.emplace_back(u, v);
    return csr_from_pairs(n, pairs, /*presorted=*/true);
}

ComponentLabeling connected_components(const SampledGraph& g, std::span<const std::uint8_t> active) {
    const std::size_t n = g.vertex_count();
    if (!active.empty() && active.size() != n)
        throw std::invalid_argument("active mask length must match vertex count");
    auto is_active = [&](std::uint32_t v) { return active.empty() || active[v] != 0; };

    UnionFind uf(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        if (!is_active(u)) continue;
        for (std::uint32_t v : g.neighbors(u)) {
            if (v > u) break;  // each edge once, lists are sorted
            if (is_active(v)) uf.unite(u, v);
        }
    }

    ComponentLabeling result;
    result.label.assign(n, -1);
    std::vector<std::int32_t> root_id(n, -1);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (!is_active(v)) continue;
        const std::uint32_t r = uf.find(v);
        if (root_id[r] < 0) root_id[r] = result.count++;
        result.label[v] = root_id[r];
    }
    return result;
}

}  // namespace sng
