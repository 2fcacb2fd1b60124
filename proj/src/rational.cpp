#include "meshlab/rational.hpp"

#include <string>

#include "meshlab/errors.hpp"

namespace meshlab {

BigInt parse_big_int(std::string_view text) {
  BigInt out;
  if (text.empty() || out.set_str(std::string(text), 10) != 0) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return out;
}

BigRational parse_big_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_big_int(text));
  BigRational out(parse_big_int(text.substr(0, slash)), parse_big_int(text.substr(slash + 1)));
  if (out.get_den() == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  out.canonicalize();
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace meshlab
