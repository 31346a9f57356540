#include "vactab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vactab {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int IntegerPartition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int IntegerPartition::part(int row) const {
  if (row < 1) throw std::invalid_argument("row index is 1-based");
  return row <= rows() ? parts_[row - 1] : 0;
}

bool IntegerPartition::has_cell(Cell u) const {
  return u.row >= 1 && u.col >= 1 && u.row <= rows() && u.col <= parts_[u.row - 1];
}

bool IntegerPartition::contains(const IntegerPartition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

IntegerPartition IntegerPartition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_[0]);
  for (int j = 1; j <= parts_[0]; ++j)
    out[j - 1] = static_cast<int>(std::count_if(
        parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
  return IntegerPartition(std::move(out));
}

IntegerPartition IntegerPartition::strip_first_part() const {
  if (parts_.empty()) return {};
  return IntegerPartition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::vector<Cell> IntegerPartition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

std::vector<Cell> IntegerPartition::addable_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows() + 1; ++i) {
    const int len = i <= rows() ? parts_[i - 1] : 0;
    const int above = i == 1 ? INT32_MAX : parts_[i - 2];
    if (len < above) out.push_back({i, len + 1});
  }
  return out;
}

std::vector<Cell> IntegerPartition::removable_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i) {
    const int below = i < rows() ? parts_[i] : 0;
    if (parts_[i - 1] > below) out.push_back({i, parts_[i - 1]});
  }
  return out;
}

IntegerPartition IntegerPartition::with_cell_added(Cell u) const {
  std::vector<int> next = parts_;
  if (u.row == rows() + 1 && u.col == 1)
    next.push_back(1);
  else if (u.row >= 1 && u.row <= rows() && u.col == parts_[u.row - 1] + 1)
    ++next[u.row - 1];
  else
    throw std::invalid_argument("cell is not addable");
  return IntegerPartition(std::move(next));
}

IntegerPartition IntegerPartition::with_cell_removed(Cell u) const {
  if (u.row < 1 || u.row > rows() || u.col != parts_[u.row - 1])
    throw std::invalid_argument("cell is not a removable corner");
  std::vector<int> next = parts_;
  --next[u.row - 1];
  return IntegerPartition(std::move(next));
}

int IntegerPartition::hook_length(Cell u) const {
  if (!has_cell(u)) throw std::invalid_argument("cell outside shape");
  const int arm = parts_[u.row - 1] - u.col;
  int leg = 0;
  for (int i = u.row; i < rows(); ++i)
    if (parts_[i] >= u.col) ++leg;
  return arm + leg + 1;
}

long IntegerPartition::b_stat() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

bool operator<(const IntegerPartition& a, const IntegerPartition& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.parts_ > b.parts_;  // lexicographically descending within a grade
}

IntegerPartition single_row(int n) {
  if (n == 0) return {};
  return IntegerPartition({n});
}

Int syt_count(const IntegerPartition& shape) {
  Int hooks = 1;
  for (const Cell u : shape.cells()) hooks *= shape.hook_length(u);
  Int num = factorial(static_cast<unsigned>(shape.size()));
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(IntegerPartition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<IntegerPartition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<IntegerPartition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

std::vector<IntegerPartition> partitions_up_to(int k) {
  std::vector<IntegerPartition> out;
  for (int n = 0; n <= k; ++n)
    for (auto& p : partitions_of(n)) out.push_back(std::move(p));
  return out;
}

std::vector<IntegerPartition> lambda_set(int n, int k) {
  std::vector<IntegerPartition> out;
  for (auto& p : partitions_of(n)) {
    const int first = p.empty() ? 0 : p.parts()[0];
    if (first >= n - k) out.push_back(std::move(p));
  }
  return out;
}

IntegerPartition parse_shape(const std::string& text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad shape literal: " + text);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return IntegerPartition(std::move(parts));
}

std::string to_text(const IntegerPartition& p) {
  if (p.empty()) return "∅";
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

}  // namespace vactab
