#include "ptab/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace ptab {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

std::string to_decimal(const mpf_class& v, int digits) {
  int len = gmp_snprintf(nullptr, 0, "%.*Fg", digits, v.get_mpf_t());
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, v.get_mpf_t());
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string to_decimal(const Rational& v, int digits) {
  mpf_class f(0, kDecimalPrecisionBits);
  f = v;
  return to_decimal(f, digits);
}

}  // namespace ptab
