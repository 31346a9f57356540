#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vactab/partition.hpp"

namespace vactab {

enum class WalkVariant { NVac, Simplified, Limiting };

std::string variant_tag(WalkVariant v);            // "nvac" | "svt" | "lvt"
WalkVariant variant_from_tag(const std::string&);  // throws on unknown tag

struct WalkCheck {
  bool ok = true;
  std::string message;  // names the first violated step when !ok
};

/*
 * A walk on Young's lattice alternating box-removal and box-addition steps,
 * stored as its shape sequence. Sequence position i holds the shape after
 * step i/2, so a walk of length 2k has 2k+1 shapes and a walk of length
 * 2k+1 has 2k+2 shapes.
 */
class VacillatingTableau {
 public:
  VacillatingTableau(WalkVariant variant, std::vector<IntegerPartition> shapes, int n = 0);

  WalkVariant variant() const { return variant_; }
  int n() const { return n_; }  // meaningful for NVac only
  const std::vector<IntegerPartition>& shapes() const { return shapes_; }
  int length() const { return static_cast<int>(shapes_.size()) - 1; }
  int k() const { return length() / 2; }  // full (remove, add) step pairs
  bool half() const { return length() % 2 == 1; }
  const IntegerPartition& final_shape() const { return shapes_.back(); }

  WalkCheck validate() const;

  friend bool operator==(const VacillatingTableau&, const VacillatingTableau&) = default;
  friend bool operator<(const VacillatingTableau& a, const VacillatingTableau& b);

 private:
  WalkVariant variant_;
  int n_;
  std::vector<IntegerPartition> shapes_;
};

inline constexpr int kDefaultWalkEnumBound = 7;

using ShapeCounts = std::map<IntegerPartition, Int>;

// Number of valid walks of length 2k (2k+1 when half) per final shape,
// by layered transition counting.
ShapeCounts count_dp(WalkVariant variant, int k, bool half, int n = 0);

// Closed-form count for Simplified / Limiting walks; throws for NVac.
Int count_formula(WalkVariant variant, int k, bool half, const IntegerPartition& shape);

// Every valid walk of the requested length, deterministic order; optionally
// restricted to a final shape. Throws when k exceeds the bound.
std::vector<VacillatingTableau> enumerate_walks(
    WalkVariant variant, int k, bool half,
    const std::optional<IntegerPartition>& final_shape = std::nullopt, int n = 0,
    int bound = kDefaultWalkEnumBound);

// Closed forms for the one-row and one-column shapes of n-vacillating walks:
// (sum_{j=1..n} S(k,j), S(k,n) + S(k,n-1)).
std::pair<Int, Int> m_special(int n, int k);

std::string to_text(const VacillatingTableau& w);

}  // namespace vactab
