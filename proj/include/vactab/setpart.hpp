#pragma once

#include <utility>
#include <vector>

#include "vactab/arith.hpp"

namespace vactab {

/*
 * Set partition of an arbitrary finite integer ground set. Canonical form:
 * each block ascending, blocks ordered by minimum element. Immutable.
 */
class SetPartition {
 public:
  SetPartition() = default;  // the empty partition of the empty set
  SetPartition(std::vector<int> ground, std::vector<std::vector<int>> blocks);
  static SetPartition from_blocks(std::vector<std::vector<int>> blocks);

  const std::vector<int>& ground() const { return ground_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  // Indices into blocks() ordered by block maxima ascending.
  std::vector<int> blocks_by_max() const;
  int block_index_of(int element) const;  // throws if absent

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  std::vector<int> ground_;
  std::vector<std::vector<int>> blocks_;
};

/*
 * Set partition with an ordered subset of marked blocks; the marked sequence
 * is kept sorted by block maxima, as the bijections require.
 */
class MarkedSetPartition {
 public:
  MarkedSetPartition() = default;
  MarkedSetPartition(SetPartition partition, std::vector<int> marked_block_indices);

  const SetPartition& partition() const { return partition_; }
  const std::vector<int>& marked() const { return marked_; }
  int num_marked() const { return static_cast<int>(marked_.size()); }
  bool is_marked(int block_index) const;
  std::vector<int> marked_maxima() const;  // ascending

  friend bool operator==(const MarkedSetPartition&, const MarkedSetPartition&) = default;
  friend bool operator<(const MarkedSetPartition& a, const MarkedSetPartition& b) {
    if (a.partition_ != b.partition_) return a.partition_ < b.partition_;
    return a.marked_ < b.marked_;
  }

 private:
  SetPartition partition_;
  std::vector<int> marked_;
};

inline constexpr int kDefaultGroundBound = 12;

Int bell(int k);
Int stirling2(int k, int r);
// B(k,j): partitions of [k] with j marked blocks.
Int marked_count(int k, int j);
// B~(k,j): partitions of [k] with j marked blocks, none containing k.
Int tilde_marked_count(int k, int j);
Int fubini(int k);
Int involutions(int j);
std::vector<Int> binomial_transform(const std::vector<Int>& seq);

std::vector<int> range_ground(int k);           // {1..k}
std::vector<int> signed_ground(int k, bool with_zero);  // {-k..-1} u (0?) u {1..k}

std::vector<SetPartition> enumerate_partitions(const std::vector<int>& ground,
                                               int bound = kDefaultGroundBound);
std::vector<MarkedSetPartition> enumerate_marked(int k, int j,
                                                 int bound = kDefaultGroundBound);
std::vector<MarkedSetPartition> enumerate_tilde_marked(int k, int j,
                                                       int bound = kDefaultGroundBound);

// Arcs joining consecutive elements of each block, sorted.
std::vector<std::pair<int, int>> standard_diagram(const SetPartition& p);
// Connected components of the arc set over the ground set.
SetPartition partition_from_arcs(std::vector<int> ground,
                                 const std::vector<std::pair<int, int>>& arcs);

// Partitions of [-k] u [k] (or [-k,k] with zero) closed under negation.
std::vector<SetPartition> enumerate_symmetric(int k, bool with_zero,
                                              int bound = kDefaultGroundBound);
// Negation-closed partitions of [-k] u [k] with at most one zero-block.
std::vector<SetPartition> enumerate_type_b(int k, int bound = kDefaultGroundBound);
// Partitions of [k1+k2] whose every block meets both [k1] and its complement.
std::vector<SetPartition> enumerate_connecting(int k1, int k2,
                                               int bound = kDefaultGroundBound);
// Partitions of [k] with min(X) <= ell <= max(X) for every block X.
std::vector<SetPartition> enumerate_ell_connecting(int k, int ell,
                                                   int bound = kDefaultGroundBound);

// Direct object enumeration of the ordered families.
Int count_partly_ordered(int k);        // marked blocks linearly ordered
Int count_partly_ordered_tilde(int k);  // same over [k], block containing k unmarked
Int count_ordered(int k);               // all blocks linearly ordered
Int count_cyclically_ordered(int k);    // all blocks cyclically ordered

}  // namespace vactab
