#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace sng {

// Disjoint sets over [0, n) with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true when x and y were in different sets.
    bool unite(std::uint32_t x, std::uint32_t y) {
        std::uint32_t rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        return true;
    }

    bool same(std::uint32_t x, std::uint32_t y) { return find(x) == find(y); }

    std::uint32_t set_size(std::uint32_t x) { return size_[find(x)]; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace sng
