#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptab/bigint.hpp"
#include "ptab/exec.hpp"
#include "ptab/genfun.hpp"

namespace ptab {

inline constexpr int kMomentOrderCap = 10;

// w(w-1)...(w-k+1); 1 for k = 0.
Rational falling_factorial(const Rational& w, int k);

// Mean of the corner count under the z = y weighted measure on P_n,
// (n-1)(n^2+3yn+n-6) / (6 (y+n-1)_2). Zero for n = 0 and n = 1 (the
// numerator vanishes identically). std::domain_error when the falling
// factorial in the denominator is zero.
Rational mu(int n, const Rational& y);

// mu_{n-1}(y+1) - mu_n(y) in closed form; requires n >= 2.
Rational alpha(int n, const Rational& y);
// Same quantity taken directly as the difference of means; n >= 1.
Rational alpha_from_mu(int n, const Rational& y);
// mu_{n-2}(y+1) - mu_n(y), n >= 2.
Rational beta(int n, const Rational& y);
// mu_{n-2}(y) - mu_n(y), n >= 2.
Rational delta(int n, const Rational& y);

// alpha^2 - alpha + 2((y+1)(y+n-2) beta - y^2 delta) / (y+n-1)_2, n >= 2.
// The weighted variance is the sum of these increments along the
// diagonal (n, y), (n-1, y+1), ..., (2, y+n-2).
Rational variance_increment(int n, const Rational& y);

// sum_{j=0}^{n-2} variance_increment(n-j, j+1); Var(C_n) for n >= 2.
Rational variance_via_increments(int n);

// E[X^k] for k = 0..K from the factorial moments E (X)_j, j = 0..K, via
// Stirling numbers of the second kind.
std::vector<Rational> raw_from_factorial_moments(std::span<const Rational> factorial);
// E[(X - mean)^k] for k = 0..K from raw moments (raw[1] is the mean).
std::vector<Rational> central_from_raw_moments(std::span<const Rational> raw);

// m!/(2^{m/2} (m/2)!) for even m, 0 for odd m.
Rational gaussian_moment(int m);

// E[((C_n - mean)/sigma)^m] = coefficient * sqrt(radicand). The radicand
// is 1 for even m and the exact variance for odd m, so the value stays
// exact without irrational arithmetic.
struct StandardizedMoment {
  int order = 0;
  Rational coefficient;
  Rational radicand{1};
  Rational gaussian_target;

  mpf_class value() const;
  // sign(value) * value^2, exact.
  Rational signed_square() const;
  std::string decimal(int digits = 12) const;
};

// Standardized moments m = 1..m_max for one n, using the sweep's
// coefficients. Requires 2 <= n <= sweep.n_max(), m_max <= sweep.m_max().
std::vector<StandardizedMoment> standardized_moments(const CoefficientSweep& sweep, int n,
                                                     int m_max);
StandardizedMoment standardized_moment(int n, int m);

struct MomentReport {
  int n = 0;
  Rational mean;
  Rational variance;
  std::vector<StandardizedMoment> moments;  // orders 1..m_max
  // (moment(2n) - target) / (moment(n) - target), per order; empty when 2n
  // is not in the report or the denominator vanishes.
  std::vector<std::optional<mpf_class>> ratios;
};

// One report per entry of ns (in the given order). Throws LimitExceeded
// for m_max > kMomentOrderCap or any n > kCoefficientLengthCap, and
// std::invalid_argument for n < 2 or m_max < 1.
std::vector<MomentReport> clt_report(std::span<const int> ns, int m_max,
                                     Exec exec = Exec::parallel);

}  // namespace ptab
