#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evpoly/errors.hpp"

namespace evpoly {

/// Partition of the index set {0, ..., k-1} into nonempty blocks. Blocks are
/// zero-based index lists; block order defines the output variable order.
using BlockPartition = std::vector<std::vector<std::size_t>>;

/// Throws PreconditionError unless `p` is a partition of {0..k-1} into
/// nonempty, disjoint, covering blocks.
inline void validate_partition(const BlockPartition& p, std::size_t k) {
  std::vector<int> seen(k, 0);
  for (const auto& block : p) {
    if (block.empty()) throw PreconditionError("partition has an empty block");
    for (std::size_t i : block) {
      if (i >= k) throw PreconditionError("partition index " + std::to_string(i) + " out of range");
      if (seen[i]++) throw PreconditionError("partition blocks overlap at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!seen[i]) throw PreconditionError("partition does not cover index " + std::to_string(i));
}

/// block_index[i] = index of the block containing i.
inline std::vector<std::size_t> block_index(const BlockPartition& p, std::size_t k) {
  validate_partition(p, k);
  std::vector<std::size_t> out(k);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i : p[j]) out[i] = j;
  return out;
}

inline BlockPartition single_block(std::size_t k) {
  BlockPartition p(1);
  for (std::size_t i = 0; i < k; ++i) p[0].push_back(i);
  return p;
}

inline BlockPartition singleton_blocks(std::size_t k) {
  BlockPartition p;
  for (std::size_t i = 0; i < k; ++i) p.push_back({i});
  return p;
}

}  // namespace evpoly
