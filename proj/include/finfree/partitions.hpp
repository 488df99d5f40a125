#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace finfree {

/// Integer partition stored as (part, multiplicity) pairs with strictly
/// increasing parts.
struct IntPartition {
    std::vector<std::pair<unsigned, unsigned>> parts;

    unsigned total() const noexcept;
    friend bool operator==(const IntPartition&, const IntPartition&) = default;
};

/// All partitions of k, largest part descending: 3 -> {3}, {2,1}, {1,1,1}.
std::vector<IntPartition> int_partitions(unsigned k);

/// Partition of {0, ..., j-1}. Canonical form: each block sorted, blocks
/// ordered by their least element.
struct SetPartition {
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t ground_size() const noexcept;
    std::size_t block_count() const noexcept { return blocks.size(); }
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

inline constexpr std::size_t kMaxSetPartitionSize = 12;

/// All Bell(j) partitions of [j], in lexicographic order of restricted growth strings.
std::vector<SetPartition> set_partitions(std::size_t j);

/// Finest common coarsening of two partitions of the same ground set.
SetPartition join(const SetPartition& a, const SetPartition& b);

/// mu(0_j, pi) = (-1)^(j - |pi|) prod_V (|V| - 1)!
long long mobius_0(const SetPartition& pi);

SetPartition finest_partition(std::size_t j);
SetPartition coarsest_partition(std::size_t j);

}  // namespace finfree
