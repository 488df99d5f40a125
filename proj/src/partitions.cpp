#include "finfree/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "finfree/error.hpp"

namespace finfree {

unsigned IntPartition::total() const noexcept {
    unsigned sum = 0;
    for (auto [part, mult] : parts) sum += part * mult;
    return sum;
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                    std::vector<IntPartition>& out) {
    if (remaining == 0) {
        IntPartition p;
        for (auto it = current.rbegin(); it != current.rend(); ++it) {
            if (!p.parts.empty() && p.parts.back().first == *it) {
                ++p.parts.back().second;
            } else {
                p.parts.emplace_back(*it, 1U);
            }
        }
        out.push_back(std::move(p));
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<IntPartition> int_partitions(unsigned k) {
    std::vector<IntPartition> out;
    std::vector<unsigned> current;
    partitions_rec(k, k, current, out);
    return out;
}

std::size_t SetPartition::ground_size() const noexcept {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    return total;
}

std::vector<SetPartition> set_partitions(std::size_t j) {
    if (j > kMaxSetPartitionSize) {
        throw Error(ErrorCode::size_guard, "set partition enumeration refuses j > " +
                                               std::to_string(kMaxSetPartitionSize));
    }
    std::vector<SetPartition> out;
    if (j == 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<std::size_t> rgs(j, 0);
    std::vector<std::size_t> prefix_max(j, 0);
    while (true) {
        SetPartition p;
        p.blocks.resize(prefix_max[j - 1] + 1);
        for (std::size_t i = 0; i < j; ++i) p.blocks[rgs[i]].push_back(i);
        out.push_back(std::move(p));

        std::size_t i = j - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t t = i + 1; t < j; ++t) {
            rgs[t] = 0;
            prefix_max[t] = prefix_max[i];
        }
    }
    return out;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    const std::size_t j = a.ground_size();
    if (b.ground_size() != j) throw Error(ErrorCode::dimension_mismatch, "join needs partitions of the same set");
    std::vector<std::size_t> parent(j);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto* part : {&a, &b}) {
        for (const auto& block : part->blocks)
            for (std::size_t t = 1; t < block.size(); ++t) {
                if (block[t] >= j || block[0] >= j) throw Error(ErrorCode::out_of_range, "block element out of range");
                parent[find(block[t])] = find(block[0]);
            }
    }
    SetPartition out;
    std::vector<std::size_t> block_of(j, j);
    for (std::size_t x = 0; x < j; ++x) {
        const std::size_t root = find(x);
        if (block_of[root] == j) {
            block_of[root] = out.blocks.size();
            out.blocks.emplace_back();
        }
        out.blocks[block_of[root]].push_back(x);
    }
    return out;
}

long long mobius_0(const SetPartition& pi) {
    const std::size_t j = pi.ground_size();
    long long value = (j - pi.block_count()) % 2 == 0 ? 1 : -1;
    for (const auto& block : pi.blocks)
        for (std::size_t f = 2; f < block.size(); ++f) value *= static_cast<long long>(f);
    return value;
}

SetPartition finest_partition(std::size_t j) {
    SetPartition p;
    for (std::size_t i = 0; i < j; ++i) p.blocks.push_back({i});
    return p;
}

SetPartition coarsest_partition(std::size_t j) {
    SetPartition p;
    if (j == 0) return p;
    p.blocks.emplace_back(j);
    std::iota(p.blocks[0].begin(), p.blocks[0].end(), std::size_t{0});
    return p;
}

}  // namespace finfree
