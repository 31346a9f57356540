#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vactab/partition.hpp"
#include "vactab/qpoly.hpp"
#include "vactab/tableau.hpp"

namespace vactab {

// Finite evaluation point (x_1, ..., x_m) with exact rational coordinates.
struct EvalPoint {
  std::vector<Rat> values;
  int vars() const { return static_cast<int>(values.size()); }
  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

EvalPoint all_ones(int m);
EvalPoint q_powers(const Rat& q, int m);  // (1, q, ..., q^{m-1})

// Visit every semistandard filling of the shape with entries in 1..max_entry.
void for_each_ssyt(const IntegerPartition& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit);

// Schur polynomial as the SSYT generating sum, evaluated exactly.
Rat schur_eval(const IntegerPartition& mu, const EvalPoint& pt);

// Complete homogeneous symmetric polynomials.
Rat h_complete_eval(int n, const EvalPoint& pt);
Rat h_eval(const IntegerPartition& lambda, const EvalPoint& pt);

// Principal specialization s_mu(1, q, ..., q^{m-1}) by the hook-content formula.
QPoly schur_principal(const IntegerPartition& mu, int m);

// q-analog of the tableau count: q^{b} [n]_q! / prod [h(u)]_q.
QPoly syt_count_q(const IntegerPartition& shape);

// s_mu(1^n) by the content/hook product.
Rat schur_all_ones(const IntegerPartition& mu, int n);

enum class Side { Lhs, Rhs };

struct IdentityParams {
  int n = 0;
  int k = 0;
  int m = 0;
};

// One side of a cataloged symmetric-function identity at an exact point.
// Known ids: thm3.4, thm3.5, thm4.5, thm4.6, thm5.5, thm6.9, eq5.4.
Rat identity_side_point(const std::string& id, Side side, const IdentityParams& p,
                        const EvalPoint& pt);

// One side in principal-specialization mode, as an exact polynomial in q.
// Known ids: thm3.4 (eq3.6), thm3.5 (eq3.9), thm4.5, thm4.6, thm5.5, thm6.9, eq5.6.
QPoly identity_side_qpoly(const std::string& id, Side side, const IdentityParams& p);

}  // namespace vactab
