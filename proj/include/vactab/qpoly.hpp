#pragma once

#include <string>
#include <vector>

#include "vactab/arith.hpp"

namespace vactab {

/*
 * Dense univariate polynomial in q with exact integer coefficients.
 * Canonical form trims trailing zeros; the zero polynomial has no
 * coefficients. Immutable value type.
 */
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Int& constant);  // NOLINT: implicit by design, mirrors integer literals
  QPoly(long constant) : QPoly(Int(constant)) {}
  explicit QPoly(std::vector<Int> coeffs);
  static QPoly monomial(int degree, Int coeff = 1);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Int coeff(int degree) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  // Exact division; throws std::domain_error if the division leaves a remainder.
  QPoly divide_exact(const QPoly& divisor) const;

  Rat eval(const Rat& q) const;
  Int eval_int(const Int& q) const;
  QPoly pow(unsigned e) const;

  std::string to_text() const;  // e.g. "1 + q + 2q^2"

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

QPoly q_int(int m);        // 1 + q + ... + q^(m-1)
QPoly q_factorial(int n);  // [n]_q!
QPoly q_binomial(int a, int b);
// [n]_q [n-1]_q ... [n-j+1]_q
QPoly q_falling(int n, int j);

}  // namespace vactab
