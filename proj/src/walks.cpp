#include "vactab/walks.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "vactab/setpart.hpp"

namespace vactab {

std::string variant_tag(WalkVariant v) {
  switch (v) {
    case WalkVariant::NVac: return "nvac";
    case WalkVariant::Simplified: return "svt";
    case WalkVariant::Limiting: return "lvt";
  }
  throw std::logic_error("unreachable");
}

WalkVariant variant_from_tag(const std::string& tag) {
  if (tag == "nvac") return WalkVariant::NVac;
  if (tag == "svt") return WalkVariant::Simplified;
  if (tag == "lvt") return WalkVariant::Limiting;
  throw std::invalid_argument("unknown walk variant: " + tag);
}

VacillatingTableau::VacillatingTableau(WalkVariant variant,
                                       std::vector<IntegerPartition> shapes, int n)
    : variant_(variant), n_(n), shapes_(std::move(shapes)) {
  if (shapes_.empty()) throw std::invalid_argument("walk needs at least one shape");
  if (variant_ == WalkVariant::NVac && n_ < 1)
    throw std::invalid_argument("n-vacillating walk needs n >= 1");
}

bool operator<(const VacillatingTableau& a, const VacillatingTableau& b) {
  if (a.variant_ != b.variant_) return a.variant_ < b.variant_;
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.shapes_ < b.shapes_;
}

namespace {

std::string step_name(int pos) {
  // position i in the sequence is reached after step i/2
  if (pos % 2 == 0) return std::to_string(pos / 2);
  return std::to_string(pos) + "/2";
}

}  // namespace

WalkCheck VacillatingTableau::validate() const {
  const IntegerPartition start =
      variant_ == WalkVariant::NVac ? single_row(n_) : IntegerPartition{};
  if (shapes_[0] != start)
    return {false, "step 0: walk must start at " + to_text(start)};
  for (std::size_t i = 1; i < shapes_.size(); ++i) {
    const IntegerPartition& prev = shapes_[i - 1];
    const IntegerPartition& cur = shapes_[i];
    const bool removing = i % 2 == 1;  // odd steps remove, even steps add
    if (removing) {
      if (!prev.contains(cur))
        return {false, "step " + step_name(static_cast<int>(i)) + ": shape must shrink"};
      const int d = prev.size() - cur.size();
      const bool ok = variant_ == WalkVariant::NVac ? d == 1 : (d == 0 || d == 1);
      if (!ok)
        return {false, "step " + step_name(static_cast<int>(i)) +
                           ": odd step must remove " +
                           (variant_ == WalkVariant::NVac ? "exactly one box"
                                                          : "at most one box")};
    } else {
      if (!cur.contains(prev))
        return {false, "step " + step_name(static_cast<int>(i)) + ": shape must grow"};
      const int d = cur.size() - prev.size();
      const bool ok = variant_ == WalkVariant::Simplified ? (d == 0 || d == 1) : d == 1;
      if (!ok)
        return {false, "step " + step_name(static_cast<int>(i)) +
                           ": even step must add " +
                           (variant_ == WalkVariant::Simplified ? "at most one box"
                                                                : "exactly one box")};
    }
  }
  return {};
}

namespace {

// Shapes reachable by one removal (or addition) step under the variant rule.
std::vector<IntegerPartition> remove_step(const IntegerPartition& p, WalkVariant v) {
  std::vector<IntegerPartition> out;
  if (v != WalkVariant::NVac) out.push_back(p);
  for (const Cell c : p.removable_cells()) out.push_back(p.with_cell_removed(c));
  return out;
}

std::vector<IntegerPartition> add_step(const IntegerPartition& p, WalkVariant v) {
  std::vector<IntegerPartition> out;
  if (v == WalkVariant::Simplified) out.push_back(p);
  for (const Cell c : p.addable_cells()) out.push_back(p.with_cell_added(c));
  return out;
}

}  // namespace

ShapeCounts count_dp(WalkVariant variant, int k, bool half, int n) {
  if (k < 0) throw std::invalid_argument("count_dp: negative k");
  ShapeCounts layer;
  layer[variant == WalkVariant::NVac ? single_row(n) : IntegerPartition{}] = 1;
  const int steps = 2 * k + (half ? 1 : 0);
  for (int s = 1; s <= steps; ++s) {
    ShapeCounts next;
    for (const auto& [shape, cnt] : layer) {
      const auto targets = s % 2 == 1 ? remove_step(shape, variant) : add_step(shape, variant);
      for (const auto& t : targets) {
        // reachable shapes stay inside the first-part-bounded strips
        // (half-index shapes partition n-1, so their strip sits one lower)
        assert(variant != WalkVariant::NVac || t.part(1) >= n - k - s % 2);
        next[t] += cnt;
      }
    }
    layer = std::move(next);
  }
  return layer;
}

Int count_formula(WalkVariant variant, int k, bool half, const IntegerPartition& shape) {
  if (variant == WalkVariant::NVac)
    throw std::invalid_argument(
        "count_formula: no closed form for n-vacillating walks; use count_dp");
  const int j = shape.size();
  Int factor;
  if (variant == WalkVariant::Simplified)
    factor = half ? tilde_marked_count(k + 1, j) : marked_count(k, j);
  else
    factor = half ? stirling2(k + 1, j + 1) : stirling2(k, j);
  return factor * syt_count(shape);
}

std::vector<VacillatingTableau> enumerate_walks(
    WalkVariant variant, int k, bool half,
    const std::optional<IntegerPartition>& final_shape, int n, int bound) {
  if (k < 0) throw std::invalid_argument("enumerate_walks: negative k");
  if (k > bound)
    throw std::invalid_argument("enumerate_walks: k exceeds enumeration bound " +
                                std::to_string(bound));
  const int steps = 2 * k + (half ? 1 : 0);
  std::vector<VacillatingTableau> out;
  std::vector<IntegerPartition> prefix{
      variant == WalkVariant::NVac ? single_row(n) : IntegerPartition{}};
  // iterative DFS over step transitions, successors in canonical shape order
  struct Frame {
    std::vector<IntegerPartition> succ;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto successors = [&](const IntegerPartition& p, int step) {
    auto v = step % 2 == 1 ? remove_step(p, variant) : add_step(p, variant);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (steps == 0) {
    if (!final_shape || prefix.back() == *final_shape)
      out.emplace_back(variant, prefix, n);
    return out;
  }
  stack.push_back({successors(prefix.back(), 1), 0});
  while (!stack.empty()) {
    auto& fr = stack.back();
    if (fr.next == fr.succ.size()) {
      stack.pop_back();
      prefix.pop_back();
      continue;
    }
    prefix.push_back(fr.succ[fr.next++]);
    const int depth = static_cast<int>(prefix.size()) - 1;
    if (depth == steps) {
      if (!final_shape || prefix.back() == *final_shape)
        out.emplace_back(variant, prefix, n);
      prefix.pop_back();
    } else {
      stack.push_back({successors(prefix.back(), depth + 1), 0});
    }
  }
  return out;
}

std::pair<Int, Int> m_special(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("m_special: need n, k >= 1");
  Int one_row = 0;
  for (int j = 1; j <= n; ++j) one_row += stirling2(k, j);
  Int one_col = stirling2(k, n) + stirling2(k, n - 1);
  return {one_row, one_col};
}

std::string to_text(const VacillatingTableau& w) {
  std::string s;
  for (std::size_t i = 0; i < w.shapes().size(); ++i) {
    if (i) s += " → ";
    s += to_text(w.shapes()[i]);
  }
  return s;
}

}  // namespace vactab
