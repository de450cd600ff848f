#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sng/dataset.hpp"
#include "sng/distance.hpp"

namespace sng {

enum class NoisePolicy {
    OwnCluster,  // noise points form one extra predicted cluster
    Exclude,     // noise points are dropped from both vectors
};

// Co-occurrence counts between a predicted and a true labeling; the
// pair-counting substrate for ARI and AMI.
struct ContingencyTable {
    std::vector<std::vector<std::uint64_t>> counts;  // k_pred x k_true
    std::vector<std::uint64_t> row_sums;
    std::vector<std::uint64_t> col_sums;
    std::uint64_t total = 0;
};

// pred may contain kNoiseLabel; truth labels must be non-negative. Both ids
// are compacted in first-appearance order.
ContingencyTable contingency(std::span<const std::int32_t> pred, std::span<const std::int32_t> truth,
                             NoisePolicy policy = NoisePolicy::OwnCluster);

// Hubert-Arabie adjusted Rand index. 1.0 when both partitions are trivial and
// identical (zero denominator).
double ari(const ContingencyTable& table);

// Adjusted mutual information with the arithmetic-mean normalizer and the
// hypergeometric expected-MI term; 0.0 when the denominator vanishes.
double ami(const ContingencyTable& table);

// max-min set distance computed by the full double loop.
double hausdorff(const Dataset& a, const Dataset& b, const Distance& dist = Distance::euclidean());

}  // namespace sng
