#include "vactab/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vactab {

namespace {

// steps are labeled 0, 1/2, 1, 3/2, ...
std::string half_step_name(int j) { return std::to_string(2 * j - 1) + "/2"; }

Cell shape_difference(const IntegerPartition& big, const IntegerPartition& small) {
  for (int i = 1; i <= big.rows(); ++i)
    if (big.part(i) != small.part(i)) return {i, big.part(i)};
  throw std::invalid_argument("shapes are equal");
}

std::vector<int> involution_check(const std::vector<int>& sigma) {
  const int t = static_cast<int>(sigma.size());
  for (int i = 0; i < t; ++i) {
    const int v = sigma[i];
    if (v < 1 || v > t || sigma[v - 1] != i + 1)
      throw std::invalid_argument("not an involution in one-line notation");
  }
  return sigma;
}

}  // namespace

PsiImage psi_forward(const VacillatingTableau& walk, PsiTrace* trace) {
  if (walk.variant() == WalkVariant::NVac)
    throw std::invalid_argument("psi_forward: expects a simplified or limiting walk");
  const auto check = walk.validate();
  if (!check.ok) throw std::invalid_argument("psi_forward: invalid walk: " + check.message);

  const auto& shapes = walk.shapes();
  const int ground_size = walk.half() ? walk.k() + 1 : walk.k();
  Tableau t;
  std::vector<std::pair<int, int>> edges;
  auto log = [&](const std::string& step) {
    if (trace) trace->push_back({step, edges, t});
  };
  log("0");
  for (int j = 1; j <= ground_size; ++j) {
    const IntegerPartition& whole = shapes[2 * j - 2];
    const IntegerPartition& half = shapes[2 * j - 1];
    if (half != whole) {
      // a box left: peel the insertion that produced it and record the edge
      auto [prev, m] = row_uninsert(t, shape_difference(whole, half));
      t = std::move(prev);
      edges.emplace_back(m, j);
    }
    log(half_step_name(j));
    if (2 * j < static_cast<int>(shapes.size())) {
      const IntegerPartition& next = shapes[2 * j];
      if (next != half) {
        auto rows = t.rows();
        const Cell c = shape_difference(next, half);
        if (c.row > static_cast<int>(rows.size())) rows.emplace_back();
        rows[c.row - 1].push_back(j);
        t = Tableau(std::move(rows));
      }
      log(std::to_string(j));
    }
  }

  const SetPartition base = partition_from_arcs(range_ground(ground_size), edges);
  const auto content = t.content();
  std::vector<int> marked;
  for (int i = 0; i < base.num_blocks(); ++i)
    if (std::binary_search(content.begin(), content.end(), base.blocks()[i].back()))
      marked.push_back(i);
  PsiImage img{MarkedSetPartition(base, std::move(marked)), standardize(t)};

  if (walk.variant() == WalkVariant::Limiting) {
    const int expected = walk.half() ? base.num_blocks() - 1 : base.num_blocks();
    if (img.marked.num_marked() != expected)
      throw std::logic_error("psi_forward: limiting walk must mark every eligible block");
  }
  if (walk.half() && img.marked.is_marked(base.block_index_of(ground_size)))
    throw std::logic_error("psi_forward: top element's block must be unmarked");
  return img;
}

VacillatingTableau psi_backward(int k, const PsiImage& img, WalkVariant variant, bool half) {
  if (variant == WalkVariant::NVac)
    throw std::invalid_argument("psi_backward: expects a simplified or limiting variant");
  const SetPartition& base = img.marked.partition();
  const int ground_size = half ? k + 1 : k;
  if (base.ground() != range_ground(ground_size))
    throw std::invalid_argument("psi_backward: ground set must be 1..k (+1 when half)");
  if (!img.tableau.is_standard() || img.tableau.size() != img.marked.num_marked())
    throw std::invalid_argument(
        "psi_backward: tableau must be standard with one entry per marked block");
  if (half && img.marked.is_marked(base.block_index_of(ground_size)))
    throw std::invalid_argument("psi_backward: top element's block must be unmarked");

  // T at the top index: entries are the marked block maxima in order
  const auto maxima = img.marked.marked_maxima();
  auto rows = img.tableau.rows();
  for (auto& row : rows)
    for (auto& e : row) e = maxima[e - 1];
  Tableau t(std::move(rows));

  // arcs keyed by their larger endpoint
  std::vector<int> edge_from(ground_size + 1, 0);
  for (const auto& [a, b] : standard_diagram(base)) edge_from[b] = a;

  std::vector<IntegerPartition> rev;
  rev.push_back(t.shape());
  if (half) {
    // undo the trailing removal half-step first
    if (edge_from[ground_size] != 0) {
      auto [grown, cell] = row_insert(t, edge_from[ground_size]);
      t = std::move(grown);
    }
    rev.push_back(t.shape());
  }
  for (int j = ground_size - (half ? 1 : 0); j >= 1; --j) {
    if (auto pos = t.find_entry(j)) {
      auto r = t.rows();
      r[pos->row - 1].pop_back();
      if (pos->col != static_cast<int>(r[pos->row - 1].size()) + 1)
        throw std::invalid_argument("psi_backward: inconsistent image");
      t = Tableau(std::move(r));
    }
    rev.push_back(t.shape());
    if (edge_from[j] != 0) {
      auto [grown, cell] = row_insert(t, edge_from[j]);
      t = std::move(grown);
    }
    rev.push_back(t.shape());
  }
  if (!t.empty()) throw std::invalid_argument("psi_backward: inconsistent image");
  std::reverse(rev.begin(), rev.end());
  VacillatingTableau walk(variant, std::move(rev));
  const auto check = walk.validate();
  if (!check.ok)
    throw std::invalid_argument("psi_backward: image is not a valid " +
                                variant_tag(variant) + " walk: " + check.message);
  return walk;
}

DiImage di_forward(int n, const std::vector<int>& seq, DiTrace* trace) {
  std::vector<std::vector<int>> first_row(1);
  for (int i = 1; i <= n; ++i) first_row[0].push_back(i);
  Tableau t(n == 0 ? std::vector<std::vector<int>>{} : first_row);
  std::vector<IntegerPartition> shapes{t.shape()};
  if (trace) trace->tableaux.push_back(t);
  for (int x : seq) {
    if (x < 1 || x > n) throw std::invalid_argument("di_forward: entry out of range");
    t = jdt_delete(t, x);
    shapes.push_back(t.shape());
    if (trace) trace->tableaux.push_back(t);
    t = row_insert(t, x).first;
    shapes.push_back(t.shape());
    if (trace) trace->tableaux.push_back(t);
  }
  return {std::move(t), VacillatingTableau(WalkVariant::NVac, std::move(shapes), n)};
}

std::vector<int> di_backward(int n, const DiImage& img) {
  const auto& shapes = img.walk.shapes();
  if (img.walk.variant() != WalkVariant::NVac || img.walk.n() != n || img.walk.half())
    throw std::invalid_argument("di_backward: image walk must be n-vacillating of even length");
  const auto check = img.walk.validate();
  if (!check.ok) throw std::invalid_argument("di_backward: invalid walk: " + check.message);
  if (img.tableau.shape() != shapes.back() || !img.tableau.is_standard())
    throw std::invalid_argument("di_backward: tableau inconsistent with walk");
  Tableau t = img.tableau;
  std::vector<int> seq(img.walk.k());
  for (int j = img.walk.k(); j >= 1; --j) {
    auto [shrunk, m] = row_uninsert(t, shape_difference(shapes[2 * j], shapes[2 * j - 1]));
    seq[j - 1] = m;
    t = jdt_insert(shrunk, m, shape_difference(shapes[2 * j - 2], shapes[2 * j - 1]));
  }
  return seq;
}

namespace {

std::vector<std::vector<int>> marked_blocks_by_max(const PsiImage& img) {
  std::vector<std::vector<int>> out;
  for (int i : img.marked.marked()) out.push_back(img.marked.partition().blocks()[i]);
  return out;
}

std::vector<int> relabel(const std::vector<int>& block, int (*f)(int, int), int param) {
  std::vector<int> out;
  out.reserve(block.size());
  for (int x : block) out.push_back(f(x, param));
  return out;
}

}  // namespace

SetPartition glue_symmetric_even(const PsiImage& img) {
  const SetPartition& base = img.marked.partition();
  const std::vector<int> sigma =
      involution_check(permutation_from_pair(img.tableau, img.tableau));
  const auto marked = marked_blocks_by_max(img);
  auto negate = [](int x, int) { return -x; };
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < base.num_blocks(); ++i) {
    if (img.marked.is_marked(i)) continue;
    blocks.push_back(base.blocks()[i]);
    blocks.push_back(relabel(base.blocks()[i], negate, 0));
  }
  // marked block i joins the mirror of marked block sigma(i)
  for (std::size_t i = 0; i < marked.size(); ++i) {
    std::vector<int> merged = marked[i];
    const auto mirror = relabel(marked[sigma[i] - 1], negate, 0);
    merged.insert(merged.end(), mirror.begin(), mirror.end());
    blocks.push_back(std::move(merged));
  }
  return SetPartition::from_blocks(std::move(blocks));
}

SetPartition glue_symmetric_odd(const PsiImage& img) {
  const SetPartition& base = img.marked.partition();
  const int top = base.ground().back();  // k+1
  if (img.marked.is_marked(base.block_index_of(top)))
    throw std::invalid_argument("glue_symmetric_odd: top element's block must be unmarked");
  const std::vector<int> sigma =
      involution_check(permutation_from_pair(img.tableau, img.tableau));
  const auto marked = marked_blocks_by_max(img);
  auto neg_side = [](int x, int top_) { return x - top_; };
  auto pos_side = [](int x, int top_) { return top_ - x; };
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < base.num_blocks(); ++i) {
    if (img.marked.is_marked(i)) continue;
    const auto& b = base.blocks()[i];
    if (std::binary_search(b.begin(), b.end(), top)) {
      // the two copies share 0 where the identified endpoints meet
      std::set<int> merged;
      for (int x : b) {
        merged.insert(x - top);
        merged.insert(top - x);
      }
      blocks.emplace_back(merged.begin(), merged.end());
    } else {
      blocks.push_back(relabel(b, neg_side, top));
      blocks.push_back(relabel(b, pos_side, top));
    }
  }
  for (std::size_t i = 0; i < marked.size(); ++i) {
    std::vector<int> merged = relabel(marked[i], neg_side, top);
    const auto mirror = relabel(marked[sigma[i] - 1], pos_side, top);
    merged.insert(merged.end(), mirror.begin(), mirror.end());
    blocks.push_back(std::move(merged));
  }
  return SetPartition::from_blocks(std::move(blocks));
}

SetPartition glue_odd_pair(const PsiImage& first, const PsiImage& second) {
  if (first.tableau.shape() != second.tableau.shape())
    throw std::invalid_argument("glue_odd_pair: tableau shapes must match");
  if (first.tableau.size() != first.marked.num_marked() ||
      second.tableau.size() != second.marked.num_marked())
    throw std::invalid_argument("glue_odd_pair: marked block count must match tableau size");
  const SetPartition& b1 = first.marked.partition();
  const SetPartition& b2 = second.marked.partition();
  const int top1 = b1.ground().back();  // k1+1
  const int top2 = b2.ground().back();  // k2+1
  if (first.marked.is_marked(b1.block_index_of(top1)) ||
      second.marked.is_marked(b2.block_index_of(top2)))
    throw std::invalid_argument("glue_odd_pair: top blocks must be unmarked");
  const std::vector<int> sigma = permutation_from_pair(first.tableau, second.tableau);
  const int total = top1 + top2;  // k1+k2+2; element i of the second copy becomes total-i
  const auto marked1 = marked_blocks_by_max(first);
  const auto marked2 = marked_blocks_by_max(second);
  auto flip = [&](const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(b.size());
    for (int x : b) out.push_back(total - x);
    return out;
  };
  std::vector<std::vector<int>> blocks;
  std::vector<int> shared;  // blocks holding the identified vertex k1+1
  for (int i = 0; i < b1.num_blocks(); ++i) {
    if (first.marked.is_marked(i)) continue;
    if (std::binary_search(b1.blocks()[i].begin(), b1.blocks()[i].end(), top1))
      shared = b1.blocks()[i];
    else
      blocks.push_back(b1.blocks()[i]);
  }
  for (int i = 0; i < b2.num_blocks(); ++i) {
    if (second.marked.is_marked(i)) continue;
    const auto flipped = flip(b2.blocks()[i]);
    if (std::binary_search(b2.blocks()[i].begin(), b2.blocks()[i].end(), top2)) {
      std::set<int> merged(shared.begin(), shared.end());
      merged.insert(flipped.begin(), flipped.end());
      blocks.emplace_back(merged.begin(), merged.end());
    } else {
      blocks.push_back(flipped);
    }
  }
  for (std::size_t i = 0; i < marked1.size(); ++i) {
    std::vector<int> merged = marked1[i];
    const auto mirror = flip(marked2[sigma[i] - 1]);
    merged.insert(merged.end(), mirror.begin(), mirror.end());
    blocks.push_back(std::move(merged));
  }
  return SetPartition::from_blocks(std::move(blocks));
}

SetPartition glue_connecting(const SetPartition& b1, const Tableau& t1,
                             const SetPartition& b2, const Tableau& t2) {
  if (t1.shape() != t2.shape())
    throw std::invalid_argument("glue_connecting: tableau shapes must match");
  if (b1.num_blocks() != t1.size() || b2.num_blocks() != t2.size())
    throw std::invalid_argument("glue_connecting: need one block per tableau entry");
  const int k1 = b1.ground().empty() ? 0 : b1.ground().back();
  const int k2 = b2.ground().empty() ? 0 : b2.ground().back();
  const std::vector<int> sigma = permutation_from_pair(t1, t2);
  const auto idx1 = b1.blocks_by_max();
  const auto idx2 = b2.blocks_by_max();
  std::vector<std::vector<int>> blocks;
  for (std::size_t t = 0; t < idx1.size(); ++t) {
    std::vector<int> merged = b1.blocks()[idx1[t]];
    for (int x : b2.blocks()[idx2[sigma[t] - 1]]) merged.push_back(k1 + k2 + 1 - x);
    blocks.push_back(std::move(merged));
  }
  return SetPartition::from_blocks(std::move(blocks));
}

SetPartition type_b_from(const SetPartition& bp, const std::vector<int>& sigma) {
  if (bp.ground().empty()) throw std::invalid_argument("type_b_from: empty partition");
  const int top = bp.ground().back();  // k+1
  if (bp.ground() != range_ground(top))
    throw std::invalid_argument("type_b_from: ground set must be 1..k+1");
  involution_check(sigma);
  const auto by_max = bp.blocks_by_max();
  if (static_cast<int>(sigma.size()) != bp.num_blocks() - 1)
    throw std::invalid_argument("type_b_from: involution must act on the non-top blocks");
  auto negate = [](const std::vector<int>& b) {
    std::vector<int> out;
    for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(-*it);
    return out;
  };
  std::vector<std::vector<int>> blocks;
  for (std::size_t a = 0; a + 1 < by_max.size(); ++a) {
    const auto& pos = bp.blocks()[by_max[a]];
    const std::size_t b = sigma[a] - 1;
    if (b == a) {
      blocks.push_back(pos);
      blocks.push_back(negate(pos));
    } else if (b > a) {
      const auto& other = bp.blocks()[by_max[b]];
      std::vector<int> m1 = pos;
      for (int x : negate(other)) m1.push_back(x);
      std::vector<int> m2 = other;
      for (int x : negate(pos)) m2.push_back(x);
      blocks.push_back(std::move(m1));
      blocks.push_back(std::move(m2));
    }
  }
  // top block folds onto its negative; dropping +-(k+1) leaves the zero block
  std::vector<int> zero;
  for (int x : bp.blocks()[by_max.back()])
    if (x != top) {
      zero.push_back(x);
      zero.push_back(-x);
    }
  if (!zero.empty()) blocks.push_back(std::move(zero));
  return blocks.empty() ? SetPartition{} : SetPartition::from_blocks(std::move(blocks));
}

std::pair<SetPartition, std::vector<int>> collapse_block(const SetPartition& b,
                                                         const std::vector<int>& sigma) {
  if (b.ground().empty()) throw std::invalid_argument("collapse_block: empty partition");
  involution_check(sigma);
  if (static_cast<int>(sigma.size()) != b.num_blocks())
    throw std::invalid_argument("collapse_block: involution must act on all blocks");
  const auto by_max = b.blocks_by_max();
  const int t = b.num_blocks();
  const int star = b.ground().back() + 1;
  const int r = sigma[t - 1];  // partner of the top block (t when fixed)
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a + 1 < t; ++a) blocks.push_back(b.blocks()[by_max[a]]);
  std::vector<int> sigma_out;
  if (r == t) {
    blocks.push_back({star});
    sigma_out = sigma;  // star block keeps index t and stays fixed
  } else {
    blocks[r - 1].push_back(star);  // star block moves to the end of the max order
    // remaining indices: 1..t-1 with r renumbered last
    auto renumber = [&](int a) { return a < r ? a : (a == r ? t - 1 : a - 1); };
    sigma_out.assign(t - 1, 0);
    for (int a = 1; a < t; ++a) {
      if (a == r) continue;
      const int img = sigma[a - 1] == t ? a : sigma[a - 1];  // t only pairs with r
      sigma_out[renumber(a) - 1] = renumber(img);
    }
    sigma_out[t - 2] = t - 1;  // star block is a fixed point
  }
  return {SetPartition::from_blocks(std::move(blocks)), std::move(sigma_out)};
}

}  // namespace vactab
