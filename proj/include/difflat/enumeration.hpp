#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "difflat/poset.hpp"

namespace difflat {

/// Ideals of cardinality n+1 obtained from the ideals of cardinality n in
/// `level`: each ideal is extended only by insertion points with an id
/// larger than its current maximum, so every ideal has a single parent.
/// Output is sorted in canonical order.
std::vector<Ideal> next_level(const Poset& poset, const std::vector<Ideal>& level);

/// Every ideal of cardinality <= max_size exactly once, ascending
/// cardinality, ties broken lexicographically on sorted ids.
std::vector<Ideal> enumerate_ideals(const Poset& poset, std::size_t max_size);

struct RankProfile {
  std::vector<std::uint64_t> counts;

  bool operator==(const RankProfile&) const = default;
};

RankProfile rank_profile(const Poset& poset, std::size_t max_n);

/// Coefficients 0..max_n of P(x)^d where P is the partition generating
/// series. Computed by a coin-change recurrence plus series convolution.
std::vector<std::uint64_t> partition_convolution_oracle(unsigned d, std::size_t max_n);

/// Connected components of the cover graph, each sorted, ordered by their
/// smallest id.
std::vector<PointSet> connected_components(const Poset& poset);

/// True iff `component` can be placed on the N x N grid so that every
/// point's lower covers are exactly its in-range grid predecessors
/// (i-1, j) and (i, j-1). Coordinates are assigned greedily from the
/// unique minimal point.
bool quadrant_check(const Poset& poset, const PointSet& component);

/// Relabeling-invariant encoding of a weighted poset.
struct CanonicalForm {
  std::vector<std::int64_t> code;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;

  std::string to_string() const;
};

inline constexpr std::size_t kCanonicalFormMaxPoints = 1024;

/// Throws PosetError when the poset exceeds kCanonicalFormMaxPoints.
CanonicalForm canonical_form(const Poset& poset);

}  // namespace difflat
