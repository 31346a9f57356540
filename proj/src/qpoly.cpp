#include "vactab/qpoly.hpp"

#include <stdexcept>

namespace vactab {

QPoly::QPoly(const Int& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int degree, Int coeff) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  if (coeff == 0) return {};
  std::vector<Int> c(degree + 1, Int(0));
  c[degree] = std::move(coeff);
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int QPoly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[degree];
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPoly(std::move(c));
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Int> rem = coeffs_;
  const Int& lead = divisor.coeffs_.back();
  std::vector<Int> quot(degree() - divisor.degree() + 1, Int(0));
  for (int d = degree() - divisor.degree(); d >= 0; --d) {
    const Int& top = rem[d + divisor.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Int f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[d] = f;
    for (int i = 0; i <= divisor.degree(); ++i) rem[d + i] -= f * divisor.coeffs_[i];
  }
  for (const Int& c : rem)
    if (c != 0) throw std::domain_error("inexact polynomial division");
  return QPoly(std::move(quot));
}

Rat QPoly::eval(const Rat& q) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rat(*it);
  return acc;
}

Int QPoly::eval_int(const Int& q) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly acc = Int(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string QPoly::to_text() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const Int a = abs(c);
    if (d == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str();
      s += d == 1 ? "q" : "q^" + std::to_string(d);
    }
  }
  return s;
}

QPoly q_int(int m) {
  if (m < 0) throw std::invalid_argument("q_int: negative argument");
  return QPoly(std::vector<Int>(m, Int(1)));
}

QPoly q_factorial(int n) {
  QPoly acc = Int(1);
  for (int i = 1; i <= n; ++i) acc = acc * q_int(i);
  return acc;
}

QPoly q_binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) throw std::invalid_argument("q_binomial: need a >= b >= 0");
  // Stepwise product keeps every intermediate an exact Gaussian coefficient.
  QPoly acc = Int(1);
  for (int i = 1; i <= b; ++i) acc = (acc * q_int(a - b + i)).divide_exact(q_int(i));
  return acc;
}

QPoly q_falling(int n, int j) {
  QPoly acc = Int(1);
  for (int i = 0; i < j; ++i) {
    if (n - i <= 0) return {};  // a [0]_q factor kills the product
    acc = acc * q_int(n - i);
  }
  return acc;
}

}  // namespace vactab
