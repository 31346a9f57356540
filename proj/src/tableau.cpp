#include "vactab/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vactab {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 1; i < rows_.size(); ++i)
    if (rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("tableau rows must have weakly decreasing lengths");
}

IntegerPartition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return IntegerPartition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

int Tableau::at(Cell u) const {
  if (u.row < 1 || u.row > static_cast<int>(rows_.size()) || u.col < 1 ||
      u.col > static_cast<int>(rows_[u.row - 1].size()))
    throw std::invalid_argument("cell outside tableau");
  return rows_[u.row - 1][u.col - 1];
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Cell> Tableau::find_entry(int x) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == x) return Cell{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  return std::nullopt;
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
      if (i > 0 && j < rows_[i - 1].size() && rows_[i - 1][j] >= rows_[i][j]) return false;
    }
  return true;
}

bool Tableau::is_partial() const {
  if (!is_semistandard()) return false;
  auto c = content();
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

bool Tableau::is_standard() const {
  if (!is_partial()) return false;
  auto c = content();
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i] != i + 1) return false;
  return true;
}

std::pair<Tableau, Cell> row_insert(const Tableau& t, int x) {
  auto rows = t.rows();
  int carry = x;
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) rows.emplace_back();
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return {Tableau(std::move(rows)),
              Cell{static_cast<int>(i) + 1, static_cast<int>(row.size())}};
    }
    std::swap(carry, *it);
  }
}

std::pair<Tableau, int> row_uninsert(const Tableau& t, Cell corner) {
  auto rows = t.rows();
  const std::size_t i = corner.row - 1;
  if (corner.row < 1 || i >= rows.size() ||
      corner.col != static_cast<int>(rows[i].size()) ||
      (i + 1 < rows.size() && rows[i + 1].size() >= rows[i].size()))
    throw std::invalid_argument("row_uninsert: cell is not a removable corner");
  int carry = rows[i].back();
  rows[i].pop_back();
  for (std::size_t r = i; r-- > 0;) {
    auto& row = rows[r];
    // rightmost entry strictly below the carried value gets bumped back out
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    if (it == row.begin()) throw std::invalid_argument("row_uninsert: malformed tableau");
    --it;
    std::swap(carry, *it);
  }
  return {Tableau(std::move(rows)), carry};
}

Tableau jdt_delete(const Tableau& t, int x) {
  auto pos = t.find_entry(x);
  if (!pos) throw std::invalid_argument("jdt_delete: entry not present");
  auto rows = t.rows();
  std::size_t i = pos->row - 1, j = pos->col - 1;
  for (;;) {
    const bool below = i + 1 < rows.size() && j < rows[i + 1].size();
    const bool right = j + 1 < rows[i].size();
    if (!below && !right) break;
    // slide the smaller of the two neighbours into the hole
    if (!right || (below && rows[i + 1][j] < rows[i][j + 1])) {
      rows[i][j] = rows[i + 1][j];
      ++i;
    } else {
      rows[i][j] = rows[i][j + 1];
      ++j;
    }
  }
  rows[i].pop_back();
  return Tableau(std::move(rows));
}

Tableau jdt_insert(const Tableau& t, int x, Cell corner) {
  auto shape = t.shape();
  bool addable = false;
  for (const Cell c : shape.addable_cells()) addable = addable || c == corner;
  if (!addable) throw std::invalid_argument("jdt_insert: cell is not an outer corner");
  auto rows = t.rows();
  std::size_t i = corner.row - 1, j = corner.col - 1;
  if (i == rows.size()) rows.emplace_back();
  rows[i].push_back(0);  // hole
  for (;;) {
    const bool above = i > 0;
    const bool left = j > 0;
    const int up = above ? rows[i - 1][j] : 0;
    const int lf = left ? rows[i][j - 1] : 0;
    if ((above && up > x) || (left && lf > x)) {
      // retrace the forward slide: pull back the larger neighbour
      if (up >= lf) {
        rows[i][j] = up;
        --i;
      } else {
        rows[i][j] = lf;
        --j;
      }
    } else {
      rows[i][j] = x;
      return Tableau(std::move(rows));
    }
  }
}

TwoLineArray::TwoLineArray(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i - 1].first > pairs_[i].first ||
        (pairs_[i - 1].first == pairs_[i].first && pairs_[i - 1].second > pairs_[i].second))
      throw std::invalid_argument("two-line array must be in lexicographic order");
  }
}

TwoLineArray TwoLineArray::from_permutation(const std::vector<int>& one_line) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(one_line.size());
  for (std::size_t i = 0; i < one_line.size(); ++i)
    pairs.emplace_back(static_cast<int>(i) + 1, one_line[i]);
  return TwoLineArray(std::move(pairs));
}

std::pair<Tableau, Tableau> rsk(const TwoLineArray& arr) {
  Tableau p, q;
  for (const auto& [u, v] : arr.pairs()) {
    auto [grown, cell] = row_insert(p, v);
    p = std::move(grown);
    auto rows = q.rows();
    if (cell.row > static_cast<int>(rows.size())) rows.emplace_back();
    rows[cell.row - 1].push_back(u);
    q = Tableau(std::move(rows));
  }
  return {std::move(p), std::move(q)};
}

TwoLineArray inverse_rsk(const Tableau& insertion, const Tableau& recording) {
  if (insertion.shape() != recording.shape())
    throw std::invalid_argument("inverse_rsk: shape mismatch");
  if (!insertion.is_semistandard() || !recording.is_semistandard())
    throw std::invalid_argument("inverse_rsk: tableaux must be semistandard");
  {
    // equal recording entries must form a horizontal strip
    std::map<int, std::vector<int>> cols;
    for (std::size_t i = 0; i < recording.rows().size(); ++i)
      for (std::size_t j = 0; j < recording.rows()[i].size(); ++j)
        cols[recording.rows()[i][j]].push_back(static_cast<int>(j));
    for (auto& [v, cs] : cols) {
      std::sort(cs.begin(), cs.end());
      if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
        throw std::invalid_argument("inverse_rsk: invalid recording tableau");
    }
  }
  Tableau p = insertion, q = recording;
  std::vector<std::pair<int, int>> pairs;
  while (!q.empty()) {
    // Every occurrence of the maximal recording entry sits at a row end;
    // the rightmost one was placed last.
    Cell best{0, 0};
    int maxval = 0;
    for (std::size_t i = 0; i < q.rows().size(); ++i) {
      const auto& row = q.rows()[i];
      const Cell c{static_cast<int>(i) + 1, static_cast<int>(row.size())};
      if (best.row == 0 || row.back() > maxval ||
          (row.back() == maxval && c.col > best.col)) {
        maxval = row.back();
        best = c;
      }
    }
    auto [pp, v] = row_uninsert(p, best);
    auto rows = q.rows();
    rows[best.row - 1].pop_back();
    p = std::move(pp);
    q = Tableau(std::move(rows));
    pairs.emplace_back(maxval, v);
  }
  std::reverse(pairs.begin(), pairs.end());
  return TwoLineArray(std::move(pairs));
}

std::vector<int> permutation_from_pair(const Tableau& insertion, const Tableau& recording) {
  if (!insertion.is_standard() || !recording.is_standard())
    throw std::invalid_argument("permutation_from_pair: tableaux must be standard");
  auto arr = inverse_rsk(insertion, recording);
  std::vector<int> out;
  out.reserve(arr.pairs().size());
  for (const auto& [u, v] : arr.pairs()) out.push_back(v);
  return out;
}

Tableau standardize(const Tableau& t) {
  auto entries = t.content();
  std::map<int, int> rank;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i] == entries[i - 1])
      throw std::invalid_argument("standardize: entries must be distinct");
    rank[entries[i]] = static_cast<int>(i) + 1;
  }
  auto rows = t.rows();
  for (auto& row : rows)
    for (auto& e : row) e = rank[e];
  return Tableau(std::move(rows));
}

}  // namespace vactab
