#include "vactab/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "vactab/setpart.hpp"
#include "vactab/walks.hpp"

namespace vactab {

EvalPoint all_ones(int m) { return {std::vector<Rat>(m, Rat(1))}; }

EvalPoint q_powers(const Rat& q, int m) {
  EvalPoint pt;
  Rat acc = 1;
  for (int i = 0; i < m; ++i) {
    pt.values.push_back(acc);
    acc *= q;
  }
  return pt;
}

void for_each_ssyt(const IntegerPartition& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit) {
  if (shape.rows() > max_entry) return;  // columns cannot be strictly increasing
  std::vector<std::vector<int>> rows(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) rows[i].assign(shape.parts()[i], 0);
  // fill row by row, column-strict against the row above, weakly increasing left to right
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == shape.rows()) {
      visit(Tableau(rows));
      return;
    }
    const auto [nr, nc] = c + 1 < shape.parts()[r] ? std::pair{r, c + 1} : std::pair{r + 1, 0};
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[r][c] = v;
      self(self, nr, nc);
    }
  };
  if (shape.empty()) {
    visit(Tableau{});
    return;
  }
  rec(rec, 0, 0);
}

Rat schur_eval(const IntegerPartition& mu, const EvalPoint& pt) {
  Rat total = 0;
  for_each_ssyt(mu, pt.vars(), [&](const Tableau& t) {
    Rat w = 1;
    for (const auto& row : t.rows())
      for (int e : row) w *= pt.values[e - 1];
    total += w;
  });
  return total;
}

Rat h_complete_eval(int n, const EvalPoint& pt) {
  if (n < 0) return 0;
  // h_j over the first i variables: h[j] <- h[j] + x_i * h[j-1]
  std::vector<Rat> h(n + 1, Rat(0));
  h[0] = 1;
  for (const Rat& x : pt.values)
    for (int j = 1; j <= n; ++j) h[j] += x * h[j - 1];
  return h[n];
}

Rat h_eval(const IntegerPartition& lambda, const EvalPoint& pt) {
  Rat r = 1;
  for (int part : lambda.parts()) r *= h_complete_eval(part, pt);
  return r;
}

QPoly schur_principal(const IntegerPartition& mu, int m) {
  QPoly num = QPoly::monomial(static_cast<int>(mu.b_stat()));
  for (const Cell u : mu.cells()) {
    const int content = m + u.col - u.row;
    if (content <= 0) return {};  // more rows than variables
    num = num * q_int(content);
  }
  QPoly den = Int(1);
  for (const Cell u : mu.cells()) den = den * q_int(mu.hook_length(u));
  return num.divide_exact(den);
}

QPoly syt_count_q(const IntegerPartition& shape) {
  QPoly num = QPoly::monomial(static_cast<int>(shape.b_stat())) * q_factorial(shape.size());
  QPoly den = Int(1);
  for (const Cell u : shape.cells()) den = den * q_int(shape.hook_length(u));
  return num.divide_exact(den);
}

Rat schur_all_ones(const IntegerPartition& mu, int n) {
  Rat r = 1;
  for (const Cell u : mu.cells()) {
    const int content = n + u.col - u.row;
    if (content <= 0) return 0;
    Rat factor(content, mu.hook_length(u));
    factor.canonicalize();
    r *= factor;
  }
  return r;
}

namespace {

Rat sum_over_small_shapes(int k, const std::function<Int(const IntegerPartition&)>& weight,
                          const std::function<Rat(const IntegerPartition&)>& value) {
  Rat total = 0;
  for (const auto& mu : partitions_up_to(k)) total += Rat(weight(mu)) * value(mu);
  return total;
}

Rat h_one_power_sum(int jmax, const std::function<Int(int)>& coeff, const EvalPoint& pt) {
  const Rat h1 = h_complete_eval(1, pt);
  Rat total = 0;
  for (int j = 0; j <= jmax; ++j) total += Rat(coeff(j)) * rat_pow(h1, j);
  return total;
}

// (n-j, 1^j); for j = n this is the single column (1^n).
IntegerPartition hook_shape(int n, int j) {
  std::vector<int> parts;
  if (n - j > 0) parts.push_back(n - j);
  for (int i = 0; i < j; ++i) parts.push_back(1);
  return IntegerPartition(std::move(parts));
}

}  // namespace

Rat identity_side_point(const std::string& id, Side side, const IdentityParams& p,
                        const EvalPoint& pt) {
  const int k = p.k, n = p.n;
  if (id == "thm3.4") {
    if (side == Side::Lhs)
      return sum_over_small_shapes(
          k, [&](const auto& mu) -> Int { return marked_count(k, mu.size()) * syt_count(mu); },
          [&](const auto& mu) { return schur_eval(mu, pt); });
    return h_one_power_sum(k, [&](int j) { return marked_count(k, j); }, pt);
  }
  if (id == "thm4.5") {
    if (side == Side::Lhs)
      return sum_over_small_shapes(
          k,
          [&](const auto& mu) -> Int { return tilde_marked_count(k + 1, mu.size()) * syt_count(mu); },
          [&](const auto& mu) { return schur_eval(mu, pt); });
    return h_one_power_sum(k, [&](int j) { return tilde_marked_count(k + 1, j); }, pt);
  }
  if (id == "thm5.5") {
    if (side == Side::Lhs)
      return sum_over_small_shapes(
          k, [&](const auto& mu) -> Int { return stirling2(k, mu.size()) * syt_count(mu); },
          [&](const auto& mu) { return schur_eval(mu, pt); });
    return h_one_power_sum(k, [&](int j) { return stirling2(k, j); }, pt);
  }
  if (id == "thm6.9") {
    if (side == Side::Lhs)
      return sum_over_small_shapes(
          k, [&](const auto& mu) -> Int { return stirling2(k + 1, mu.size() + 1) * syt_count(mu); },
          [&](const auto& mu) { return schur_eval(mu, pt); });
    return h_one_power_sum(k, [&](int j) { return stirling2(k + 1, j + 1); }, pt);
  }
  if (id == "eq5.4") {
    // q = 1 specialization in n variables; LHS goes through the content formula
    if (side == Side::Lhs)
      return sum_over_small_shapes(
          k, [&](const auto& mu) -> Int { return stirling2(k, mu.size()) * syt_count(mu); },
          [&](const auto& mu) { return schur_all_ones(mu, n); });
    Rat total = 0;
    for (int j = 0; j <= k; ++j) total += Rat(stirling2(k, j) * int_pow(Int(n), j));
    return total;
  }
  if (id == "thm3.5") {
    if (side == Side::Lhs) {
      Rat total = 0;
      for (const auto& [shape, cnt] : count_dp(WalkVariant::NVac, k, false, n))
        total += Rat(cnt) * schur_eval(shape, pt);
      return total;
    }
    Rat total = 0;
    for (int j = 0; j <= std::min(n, k); ++j)
      total += Rat(stirling2(k, j)) * h_eval(hook_shape(n, j), pt);
    return total;
  }
  if (id == "thm4.6") {
    // walks of length 2k-1 ending in Lambda_{n-1}^k
    if (side == Side::Lhs) {
      Rat total = 0;
      for (const auto& [shape, cnt] : count_dp(WalkVariant::NVac, k - 1, true, n))
        total += Rat(cnt) * schur_eval(shape, pt);
      return total;
    }
    Rat total = 0;
    for (int j = 1; j <= std::min(n, k); ++j)
      total += Rat(stirling2(k, j)) * h_eval(hook_shape(n - 1, j - 1), pt);
    return total;
  }
  throw std::invalid_argument("unknown identity: " + id);
}

QPoly identity_side_qpoly(const std::string& id, Side side, const IdentityParams& p) {
  const int k = p.k, n = p.n, m = p.m;
  const QPoly qm = q_int(m);
  if (id == "thm3.4" || id == "thm4.5" || id == "thm5.5" || id == "thm6.9") {
    std::function<Int(int)> coeff;
    if (id == "thm3.4") coeff = [&](int j) { return marked_count(k, j); };
    if (id == "thm4.5") coeff = [&](int j) { return tilde_marked_count(k + 1, j); };
    if (id == "thm5.5") coeff = [&](int j) { return stirling2(k, j); };
    if (id == "thm6.9") coeff = [&](int j) { return stirling2(k + 1, j + 1); };
    if (side == Side::Lhs) {
      QPoly total;
      for (const auto& mu : partitions_up_to(k))
        total += QPoly(coeff(mu.size()) * syt_count(mu)) * schur_principal(mu, m);
      return total;
    }
    QPoly total;
    for (int j = 0; j <= k; ++j) total += QPoly(coeff(j)) * qm.pow(j);
    return total;
  }
  if (id == "thm3.5") {
    if (side == Side::Lhs) {
      QPoly total;
      for (const auto& [shape, cnt] : count_dp(WalkVariant::NVac, k, false, n))
        total += QPoly(cnt) * schur_principal(shape, m);
      return total;
    }
    QPoly total;
    for (int j = 0; j <= std::min(n, k); ++j)
      total += QPoly(stirling2(k, j)) * q_binomial(m + n - j - 1, n - j) * qm.pow(j);
    return total;
  }
  if (id == "thm4.6") {
    if (side == Side::Lhs) {
      QPoly total;
      for (const auto& [shape, cnt] : count_dp(WalkVariant::NVac, k - 1, true, n))
        total += QPoly(cnt) * schur_principal(shape, m);
      return total;
    }
    QPoly total;
    for (int j = 1; j <= std::min(n, k); ++j)
      total += QPoly(stirling2(k, j)) * q_binomial(m + n - j - 1, n - j) * qm.pow(j - 1);
    return total;
  }
  if (id == "eq5.6") {
    if (side == Side::Lhs) {
      QPoly total;
      for (const auto& [shape, cnt] : count_dp(WalkVariant::NVac, k, false, n))
        total += QPoly(cnt) * syt_count_q(shape);
      return total;
    }
    QPoly total;
    for (int j = 0; j <= k; ++j) total += QPoly(stirling2(k, j)) * q_falling(n, j);
    return total;
  }
  throw std::invalid_argument("unknown identity: " + id);
}

}  // namespace vactab
