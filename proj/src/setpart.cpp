#include "vactab/setpart.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vactab {

SetPartition::SetPartition(std::vector<int> ground, std::vector<std::vector<int>> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw std::invalid_argument("ground set has repeated elements");
  std::size_t covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("blocks must be non-empty");
    std::sort(b.begin(), b.end());
    covered += b.size();
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  if (covered != ground_.size())
    throw std::invalid_argument("blocks must partition the ground set");
  std::vector<int> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (all != ground_) throw std::invalid_argument("blocks must partition the ground set");
}

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
  std::vector<int> ground;
  for (const auto& b : blocks) ground.insert(ground.end(), b.begin(), b.end());
  return SetPartition(std::move(ground), std::move(blocks));
}

std::vector<int> SetPartition::blocks_by_max() const {
  std::vector<int> idx(blocks_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return blocks_[a].back() < blocks_[b].back(); });
  return idx;
}

int SetPartition::block_index_of(int element) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element))
      return static_cast<int>(i);
  throw std::invalid_argument("element not in ground set");
}

MarkedSetPartition::MarkedSetPartition(SetPartition partition,
                                       std::vector<int> marked_block_indices)
    : partition_(std::move(partition)), marked_(std::move(marked_block_indices)) {
  std::set<int> seen;
  for (int i : marked_) {
    if (i < 0 || i >= partition_.num_blocks())
      throw std::invalid_argument("marked block index out of range");
    if (!seen.insert(i).second) throw std::invalid_argument("marked block repeated");
  }
  std::sort(marked_.begin(), marked_.end(), [&](int a, int b) {
    return partition_.blocks()[a].back() < partition_.blocks()[b].back();
  });
}

bool MarkedSetPartition::is_marked(int block_index) const {
  return std::find(marked_.begin(), marked_.end(), block_index) != marked_.end();
}

std::vector<int> MarkedSetPartition::marked_maxima() const {
  std::vector<int> out;
  out.reserve(marked_.size());
  for (int i : marked_) out.push_back(partition_.blocks()[i].back());
  return out;
}

Int stirling2(int k, int r) {
  if (k < 0 || r < 0) return 0;
  if (r > k) return 0;
  if (k == 0) return r == 0 ? 1 : 0;
  // S(k,r) = r*S(k-1,r) + S(k-1,r-1)
  std::vector<Int> row(k + 1, Int(0));
  row[0] = 1;
  for (int i = 1; i <= k; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[r];
}

Int bell(int k) {
  Int s = 0;
  for (int r = 0; r <= k; ++r) s += stirling2(k, r);
  return s;
}

Int marked_count(int k, int j) {
  if (k == 0) return j == 0 ? 1 : 0;
  Int s = 0;
  for (int r = j; r <= k; ++r) s += binomial(r, j) * stirling2(k, r);
  return s;
}

Int tilde_marked_count(int k, int j) {
  Int s = 0;
  for (int r = j; r <= k; ++r) s += binomial(r, j) * stirling2(k, r + 1);
  return s;
}

Int fubini(int k) {
  Int s = 0;
  for (int j = 0; j <= k; ++j) s += factorial(j) * stirling2(k, j);
  return s;
}

Int involutions(int j) {
  if (j < 0) return 0;
  Int a = 1, b = 1;  // I_0, I_1
  if (j == 0) return a;
  for (int i = 2; i <= j; ++i) {
    Int c = b + Int(i - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

std::vector<Int> binomial_transform(const std::vector<Int>& seq) {
  std::vector<Int> out(seq.size(), Int(0));
  for (std::size_t k = 0; k < seq.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i)
      out[k] += binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) * seq[i];
  return out;
}

std::vector<int> range_ground(int k) {
  std::vector<int> g(k);
  std::iota(g.begin(), g.end(), 1);
  return g;
}

std::vector<int> signed_ground(int k, bool with_zero) {
  std::vector<int> g;
  for (int i = -k; i <= k; ++i)
    if (i != 0 || with_zero) g.push_back(i);
  return g;
}

std::vector<SetPartition> enumerate_partitions(const std::vector<int>& ground, int bound) {
  if (static_cast<int>(ground.size()) > bound)
    throw std::invalid_argument("enumerate_partitions: ground size exceeds bound " +
                                std::to_string(bound));
  std::vector<int> sorted = ground;
  std::sort(sorted.begin(), sorted.end());
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  // restricted growth: element i joins an existing block or opens a new one
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == sorted.size()) {
      out.push_back(SetPartition(sorted, blocks));
      return;
    }
    // deeper calls only append blocks past this prefix, so indices stay valid
    const std::size_t open = blocks.size();
    for (std::size_t b = 0; b < open; ++b) {
      blocks[b].push_back(sorted[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({sorted[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return out;
}

namespace {

// All j-element subsets of {0..t-1}, each ascending.
std::vector<std::vector<int>> index_subsets(int t, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == j) {
      out.push_back(pick);
      return;
    }
    for (int i = from; i < t; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<MarkedSetPartition> enumerate_marked(int k, int j, int bound) {
  std::vector<MarkedSetPartition> out;
  for (const auto& p : enumerate_partitions(range_ground(k), bound))
    for (const auto& subset : index_subsets(p.num_blocks(), j))
      out.emplace_back(p, subset);
  return out;
}

std::vector<MarkedSetPartition> enumerate_tilde_marked(int k, int j, int bound) {
  std::vector<MarkedSetPartition> out;
  if (k == 0) return out;  // no element k to leave unmarked
  for (const auto& p : enumerate_partitions(range_ground(k), bound)) {
    const int top_block = p.block_index_of(k);
    for (const auto& subset : index_subsets(p.num_blocks(), j)) {
      if (std::find(subset.begin(), subset.end(), top_block) != subset.end()) continue;
      out.emplace_back(p, subset);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> standard_diagram(const SetPartition& p) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : p.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) arcs.emplace_back(b[i - 1], b[i]);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

SetPartition partition_from_arcs(std::vector<int> ground,
                                 const std::vector<std::pair<int, int>>& arcs) {
  std::sort(ground.begin(), ground.end());
  std::vector<int> parent(ground.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto index_of = [&](int v) {
    auto it = std::lower_bound(ground.begin(), ground.end(), v);
    if (it == ground.end() || *it != v)
      throw std::invalid_argument("arc endpoint outside ground set");
    return static_cast<int>(it - ground.begin());
  };
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : arcs) parent[find(index_of(a))] = find(index_of(b));
  std::vector<std::vector<int>> groups(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(ground[i]);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SetPartition(std::move(ground), std::move(blocks));
}

namespace {

bool negation_closed(const SetPartition& p) {
  for (const auto& b : p.blocks()) {
    std::vector<int> neg;
    neg.reserve(b.size());
    for (auto it = b.rbegin(); it != b.rend(); ++it) neg.push_back(-*it);
    bool found = false;
    for (const auto& other : p.blocks()) found = found || other == neg;
    if (!found) return false;
  }
  return true;
}

int zero_block_count(const SetPartition& p) {
  int n = 0;
  for (const auto& b : p.blocks()) {
    std::vector<int> neg;
    neg.reserve(b.size());
    for (auto it = b.rbegin(); it != b.rend(); ++it) neg.push_back(-*it);
    if (neg == b) ++n;
  }
  return n;
}

}  // namespace

std::vector<SetPartition> enumerate_symmetric(int k, bool with_zero, int bound) {
  std::vector<SetPartition> out;
  for (auto& p : enumerate_partitions(signed_ground(k, with_zero), bound))
    if (negation_closed(p)) out.push_back(std::move(p));
  return out;
}

std::vector<SetPartition> enumerate_type_b(int k, int bound) {
  std::vector<SetPartition> out;
  for (auto& p : enumerate_partitions(signed_ground(k, false), bound))
    if (negation_closed(p) && zero_block_count(p) <= 1) out.push_back(std::move(p));
  return out;
}

std::vector<SetPartition> enumerate_connecting(int k1, int k2, int bound) {
  std::vector<SetPartition> out;
  for (auto& p : enumerate_partitions(range_ground(k1 + k2), bound)) {
    bool ok = true;
    for (const auto& b : p.blocks()) ok = ok && b.front() <= k1 && b.back() > k1;
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

std::vector<SetPartition> enumerate_ell_connecting(int k, int ell, int bound) {
  std::vector<SetPartition> out;
  for (auto& p : enumerate_partitions(range_ground(k), bound)) {
    bool ok = true;
    for (const auto& b : p.blocks()) ok = ok && b.front() <= ell && b.back() >= ell;
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

namespace {

Int count_orderings(int k, bool partly, bool tilde, bool cyclic) {
  Int total = 0;
  for (const auto& p : enumerate_partitions(range_ground(k))) {
    const int t = p.num_blocks();
    if (cyclic) {
      // distinct cyclic orders of all blocks
      total += t == 0 ? Int(1) : factorial(t - 1);
      continue;
    }
    if (!partly) {
      total += factorial(t);
      continue;
    }
    const int top = k >= 1 ? p.block_index_of(k) : -1;
    for (const auto& subset : [&] {
           std::vector<std::vector<int>> all;
           for (int j = 0; j <= t; ++j)
             for (auto& s : index_subsets(t, j)) all.push_back(std::move(s));
           return all;
         }()) {
      if (tilde && top >= 0 &&
          std::find(subset.begin(), subset.end(), top) != subset.end())
        continue;
      // count linear orders of the marked subset as explicit objects
      std::vector<int> perm = subset;
      Int orders = 0;
      std::sort(perm.begin(), perm.end());
      do {
        ++orders;
      } while (std::next_permutation(perm.begin(), perm.end()));
      total += orders;
    }
  }
  return total;
}

}  // namespace

Int count_partly_ordered(int k) { return count_orderings(k, true, false, false); }
Int count_partly_ordered_tilde(int k) { return count_orderings(k, true, true, false); }
Int count_ordered(int k) { return count_orderings(k, false, false, false); }
Int count_cyclically_ordered(int k) { return count_orderings(k, false, false, true); }

}  // namespace vactab
