#pragma once

#include <string>
#include <vector>

#include "vactab/arith.hpp"

namespace vactab {

// A box position in English notation, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/*
 * Integer partition: weakly decreasing positive parts, stored canonically
 * (no trailing zeros); the empty sequence is the empty partition.
 * Immutable after construction.
 */
class IntegerPartition {
 public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of boxes
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Part in the given 1-based row; 0 below the last row.
  int part(int row) const;

  bool has_cell(Cell u) const;
  bool contains(const IntegerPartition& inner) const;

  IntegerPartition conjugate() const;
  IntegerPartition strip_first_part() const;

  std::vector<Cell> cells() const;
  std::vector<Cell> addable_cells() const;    // positions whose addition stays a partition
  std::vector<Cell> removable_cells() const;  // outer corners
  IntegerPartition with_cell_added(Cell u) const;
  IntegerPartition with_cell_removed(Cell u) const;

  int hook_length(Cell u) const;  // arm + leg + 1; throws if u is outside the shape
  long b_stat() const;            // sum (i-1)*parts[i]

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  // Canonical order: graded by size, then lexicographically descending parts.
  friend bool operator<(const IntegerPartition& a, const IntegerPartition& b);

 private:
  std::vector<int> parts_;
};

IntegerPartition single_row(int n);

// Number of standard Young tableaux of the shape, by the hook length formula.
Int syt_count(const IntegerPartition& shape);

// All partitions of n, canonical order.
std::vector<IntegerPartition> partitions_of(int n);
// All partitions of 0..k, canonical order.
std::vector<IntegerPartition> partitions_up_to(int k);
// Partitions of n with first part >= n-k, canonical order.
std::vector<IntegerPartition> lambda_set(int n, int k);

std::string to_text(const IntegerPartition& p);  // "(2,1)", empty shape renders as a slashed zero

// Comma-separated part list; "" and "0" denote the empty partition.
IntegerPartition parse_shape(const std::string& text);

}  // namespace vactab
