#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace meshlab {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

// "p/q" for non-integers, plain decimal otherwise.
inline std::string to_string(const BigRational& value) {
  return value.get_den() == 1 ? value.get_num().get_str() : value.get_str();
}

BigInt parse_big_int(std::string_view text);
BigRational parse_big_rational(std::string_view text);

inline bool is_integer(const BigRational& value) { return value.get_den() == 1; }

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace meshlab
