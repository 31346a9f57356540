#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vactab/setpart.hpp"
#include "vactab/tableau.hpp"
#include "vactab/walks.hpp"

namespace vactab {

// Image of psi: a marked set partition together with a standard tableau
// whose size equals the number of marked blocks.
struct PsiImage {
  MarkedSetPartition marked;
  Tableau tableau;
  friend bool operator==(const PsiImage&, const PsiImage&) = default;
  friend bool operator<(const PsiImage& a, const PsiImage& b) {
    if (a.marked != b.marked) return a.marked < b.marked;
    return a.tableau < b.tableau;
  }
};

// Image of the delete-insert map: a standard tableau plus the walk of shapes.
struct DiImage {
  Tableau tableau;
  VacillatingTableau walk;
  friend bool operator==(const DiImage&, const DiImage&) = default;
};

struct PsiTraceStep {
  std::string step;  // "0", "1/2", "1", ...
  std::vector<std::pair<int, int>> edges;
  Tableau tableau;
};
using PsiTrace = std::vector<PsiTraceStep>;

// Row-insertion bijection from walks (simplified or limiting, both parities)
// to (marked partition, standard tableau) pairs. For limiting input every
// block comes out marked; for odd length the block holding the top ground
// element comes out unmarked. Throws on invalid walks.
PsiImage psi_forward(const VacillatingTableau& walk, PsiTrace* trace = nullptr);

// Inverse of psi_forward. The image must satisfy the variant/parity
// invariants; k is the number of full step pairs of the desired walk.
VacillatingTableau psi_backward(int k, const PsiImage& img, WalkVariant variant, bool half);

struct DiTrace {
  std::vector<Tableau> tableaux;  // one per half-step, 2k+1 entries
};

// Delete-insert map on integer sequences in [n]^k.
DiImage di_forward(int n, const std::vector<int>& seq, DiTrace* trace = nullptr);
std::vector<int> di_backward(int n, const DiImage& img);

// Gluing constructions behind the counting theorems. Each returns the
// canonicalized set partition the construction produces.
SetPartition glue_symmetric_even(const PsiImage& img);
SetPartition glue_symmetric_odd(const PsiImage& img);
SetPartition glue_odd_pair(const PsiImage& first, const PsiImage& second);
SetPartition glue_connecting(const SetPartition& b1, const Tableau& t1,
                             const SetPartition& b2, const Tableau& t2);

// Doubling construction from partitions of [k+1] with an involution on the
// non-top blocks to type-B partitions of [-k] u [k].
SetPartition type_b_from(const SetPartition& bp, const std::vector<int>& sigma);

// Remove the top block, introduce a sentinel element (max ground + 1), and
// adjust the block involution so the sentinel block is a fixed point.
std::pair<SetPartition, std::vector<int>> collapse_block(const SetPartition& b,
                                                         const std::vector<int>& sigma);

}  // namespace vactab
