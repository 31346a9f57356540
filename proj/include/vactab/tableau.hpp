#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vactab/partition.hpp"

namespace vactab {

/*
 * Young tableau in English notation: rows of integers whose lengths form a
 * partition. The constructor checks the shape only; the semistandard /
 * partial / standard predicates classify the filling.
 */
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  IntegerPartition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  int at(Cell u) const;

  std::vector<int> content() const;  // all entries, sorted
  std::optional<Cell> find_entry(int x) const;

  bool is_semistandard() const;
  bool is_partial() const;   // semistandard with distinct entries
  bool is_standard() const;  // partial with content exactly 1..size

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

// RSK row insertion: bump the smallest entry greater than x down the rows.
// Returns the grown tableau and the new cell.
std::pair<Tableau, Cell> row_insert(const Tableau& t, int x);

// Inverse of row_insert at a removable corner: returns (t', m) with
// row_insert(t', m) == (t, corner). Throws if the cell is not a corner.
std::pair<Tableau, int> row_uninsert(const Tableau& t, Cell corner);

// Jeu de taquin deletion of the entry x from a partial tableau.
Tableau jdt_delete(const Tableau& t, int x);

// Inverse slide: re-insert x into t so that jdt_delete(result, x) == t,
// with the vacated box appearing at the given outer corner of t's shape.
Tableau jdt_insert(const Tableau& t, int x, Cell corner);

// Two-line array in non-decreasing lexicographic order.
class TwoLineArray {
 public:
  TwoLineArray() = default;
  explicit TwoLineArray(std::vector<std::pair<int, int>> pairs);
  static TwoLineArray from_permutation(const std::vector<int>& one_line);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  friend bool operator==(const TwoLineArray&, const TwoLineArray&) = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Knuth's correspondence: (insertion tableau P, recording tableau Q).
std::pair<Tableau, Tableau> rsk(const TwoLineArray& arr);
TwoLineArray inverse_rsk(const Tableau& insertion, const Tableau& recording);

// One-line permutation with the given insertion and recording tableaux
// (both standard, equal shape).
std::vector<int> permutation_from_pair(const Tableau& insertion, const Tableau& recording);

// Relabel the distinct entries of a partial tableau by 1..size in order.
Tableau standardize(const Tableau& t);

}  // namespace vactab
