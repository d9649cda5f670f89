#pragma once

// Exact arithmetic substrate: GMP integers and canonical rationals.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clifford {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: den > 0, gcd(num, den) = 1

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Always "num/den", even for integers ("4/1").
std::string to_fraction_string(const Rational& q);

/// Accepts "n", "-n", "n/d"; the result is canonicalized. Throws Error{parse}.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);

/// 2^e for any integer e (negative exponents give 1/2^|e|).
Rational pow2(long e);

double to_double(const Rational& q);

/// Pascal triangle rows 0..max_n, built once and then read-only.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_n);

  const Integer& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }
  std::size_t max_n() const { return rows_.size() - 1; }

 private:
  std::vector<std::vector<Integer>> rows_;
};

}  // namespace clifford
