#pragma once

#include <span>
#include <string>
#include <vector>

#include "ptab/bigint.hpp"
#include "ptab/exec.hpp"

namespace ptab {

// Dense polynomial in z with big-integer coefficients, ascending degree.
// Trailing zeros are always trimmed, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  // z(z+1)...(z+n-1); 1 for n = 0.
  static UniPoly rising_factorial(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;

  BigInt operator()(const BigInt& z) const;
  Rational operator()(const Rational& z) const;

  // p(z + 1).
  UniPoly shifted(Exec exec = Exec::serial) const;
  // z^k p(z).
  UniPoly times_z_power(int k) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(const BigInt& c, const UniPoly& p);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // "2*z^2 + z"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

namespace kernels {

// In-place p(z) -> p(z+1) by repeated synthetic division: O(d^2)
// additions with a serial dependency chain. Reference implementation.
void taylor_shift_reference(std::vector<BigInt>& coeffs);

// b_k = sum_{i >= k} C(i, k) a_i. Output coefficients are independent, so
// Exec::parallel distributes them over OpenMP threads.
std::vector<BigInt> taylor_shift_convolution(std::span<const BigInt> coeffs, Exec exec);

}  // namespace kernels

}  // namespace ptab
