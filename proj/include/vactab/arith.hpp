#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vactab {

// Exact arithmetic used throughout: counts are Int, evaluation points are Rat.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
Int int_pow(const Int& base, unsigned exp);
Rat rat_pow(const Rat& base, unsigned exp);

std::string to_string(const Int& v);
// Rendered as "p/q" ("p" when the denominator is 1).
std::string to_string(const Rat& v);
Rat parse_rat(const std::string& text);

}  // namespace vactab
