#include "fgr/tuple_index.hpp"

#include <string>

#include "fgr/checked.hpp"
#include "fgr/errors.hpp"

namespace fgr {

std::int64_t tuple_index(std::span<const int> part_sizes, std::span<const int> tuple) {
  if (tuple.size() != part_sizes.size()) throw PreconditionError("tuple length differs from part count");
  std::int64_t index = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= part_sizes[i])
      throw PreconditionError("tuple component " + std::to_string(i) + " out of range");
    index = checked_add(checked_mul(index, part_sizes[i]), tuple[i]);
  }
  return index;
}

std::vector<int> tuple_from_index(std::span<const int> part_sizes, std::int64_t index) {
  if (index < 0 || index >= tuple_count(part_sizes)) throw PreconditionError("tuple index out of range");
  std::vector<int> tuple(part_sizes.size());
  for (std::size_t i = part_sizes.size(); i-- > 0;) {
    tuple[i] = static_cast<int>(index % part_sizes[i]);
    index /= part_sizes[i];
  }
  return tuple;
}

std::int64_t tuple_count(std::span<const int> part_sizes) {
  std::int64_t count = 1;
  for (int s : part_sizes) count = checked_mul(count, s);
  return count;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> pick(k);
  for (int j = 0; j < k; ++j) pick[j] = j;
  while (true) {
    out.push_back(pick);
    int j = k - 1;
    while (j >= 0 && pick[j] == n - k + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

}  // namespace fgr
