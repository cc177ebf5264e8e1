#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fgr {

// Mixed-radix index of `tuple` (first component most significant).
std::int64_t tuple_index(std::span<const int> part_sizes, std::span<const int> tuple);
std::vector<int> tuple_from_index(std::span<const int> part_sizes, std::int64_t index);
std::int64_t tuple_count(std::span<const int> part_sizes);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace fgr
