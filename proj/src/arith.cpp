#include "vactab/arith.hpp"

#include <stdexcept>

namespace vactab {

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int int_pow(const Int& base, unsigned exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Rat r(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

}  // namespace vactab
