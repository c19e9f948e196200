#pragma once

#include <vector>

#include "ptab/bigint.hpp"
#include "ptab/exec.hpp"
#include "ptab/poly.hpp"

namespace ptab {

inline constexpr int kGenfunFullCap = 60;
inline constexpr int kCoefficientLengthCap = 300;
inline constexpr int kCoefficientOrderCap = 10;

// sum_{T in P_n} x^{c(T)} z^{u(T)}, stored as sum_m c_{n,m}(z) (x-1)^m.
class BivariatePoly {
 public:
  BivariatePoly(int n, std::vector<UniPoly> terms);

  int n() const { return n_; }
  // c_{n,m}(z); zero outside the stored range.
  const UniPoly& coeff(int m) const;
  const std::vector<UniPoly>& terms() const { return terms_; }
  int max_order() const { return static_cast<int>(terms_.size()) - 1; }

  // Index k holds the coefficient of x^k after re-expanding (x-1)^m.
  std::vector<UniPoly> monomial_x_basis() const;
  // C_n(1, z).
  UniPoly at_x_one() const { return coeff(0); }

 private:
  int n_;
  std::vector<UniPoly> terms_;
};

// Full C_n(x, z) for n <= kGenfunFullCap (else LimitExceeded).
BivariatePoly genfun(int n, Exec exec = Exec::parallel);

// c_{n,m}(z) from the order-indexed recursion, carrying orders 0..m only.
// Zero polynomial for m outside 0..floor(n/2).
UniPoly coeff_cnm(int n, int m, Exec exec = Exec::parallel);

// Runs the coefficient recursion once up to (n_max, m_max) and keeps
// c_{n,m}(1) for every level. Only the previous two levels are held as
// polynomials.
class CoefficientSweep {
 public:
  CoefficientSweep(int n_max, int m_max, Exec exec = Exec::parallel);

  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }
  const BigInt& at_one(int n, int m) const;

  // E (C_n)_j = j! c_{n,j}(1) / n!.
  Rational factorial_moment(int n, int j) const;
  Rational mean(int n) const;
  Rational variance(int n) const;

 private:
  int n_max_;
  int m_max_;
  std::vector<std::vector<BigInt>> at_one_;
};

Rational mean_exact(int n);
Rational variance_exact(int n);
// E C_n (C_n - 1).
Rational second_factorial_moment(int n);

// Closed forms in n. The mean and variance carry their small-n special
// values (mean 0 at n = 1; variance 0, 1/4, 5/36 at n = 1, 2, 3). The
// second factorial moment form holds for n >= 4 only; std::domain_error
// below that, and for n < 1 everywhere.
Rational mean_closed_form(int n);
Rational variance_closed_form(int n);
Rational second_factorial_moment_closed_form(int n);

}  // namespace ptab
