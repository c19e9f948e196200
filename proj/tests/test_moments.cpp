#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ptab/enumerate.hpp"
#include "ptab/error.hpp"
#include "ptab/moments.hpp"

using namespace ptab;

namespace {

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Weighted mean sum_T c(T) y^{u(T)} / sum_T y^{u(T)} straight from the
// naive filter.
Rational naive_weighted_mean(int n, const Rational& y) {
  Rational num = 0;
  Rational den = 0;
  for (const auto& t : oracle::naive_permutation_tableaux(n)) {
    Rational w = 1;
    for (int i = 0; i < t.unrestricted; ++i) w *= y;
    num += w * t.corners;
    den += w;
  }
  return num / den;
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("mu at small sizes") {
  for (int y = 1; y <= 5; ++y) {
    const Rational yy = y;
    CHECK(mu(0, yy) == 0);
    CHECK(mu(1, yy) == 0);
    CHECK(mu(2, yy) == make_rational(1, y + 1));
  }
}

TEST_CASE("mu at y = 1 is the uniform mean") {
  for (int n = 1; n <= 200; ++n) CHECK(mu(n, Rational(1)) == mean_exact(n));
}

TEST_CASE("mu equals the naively weighted mean, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Rational& y : {Rational(1), Rational(2), Rational(5), make_rational(1, 3), make_rational(7, 2)}) {
      CAPTURE(n);
      CHECK(mu(n, y) == naive_weighted_mean(n, y));
    }
  }
}

TEST_CASE("alpha, beta and delta at n = 2") {
  for (const Rational& y : {Rational(1), Rational(3), make_rational(2, 5)}) {
    const Rational minus = -1 / (y + 1);
    CHECK(alpha(2, y) == minus);
    CHECK(beta(2, y) == minus);
    CHECK(delta(2, y) == minus);
  }
}

TEST_CASE("alpha closed form matches the difference of means") {
  for (int n = 2; n <= 60; ++n) {
    for (int y = 1; y <= 12; ++y) CHECK(alpha(n, Rational(y)) == alpha_from_mu(n, Rational(y)));
    CHECK(alpha(n, make_rational(1, 2)) == alpha_from_mu(n, make_rational(1, 2)));
  }
}

TEST_CASE("alpha, beta, delta are bounded by 2 for n + y >= 7") {
  for (int n = 2; n <= 120; ++n) {
    for (int y = 1; y <= 120; ++y) {
      if (n + y < 7) continue;
      const Rational yy = y;
      CHECK(abs_value(alpha(n, yy)) <= 2);
      CHECK(abs_value(beta(n, yy)) <= 2);
      CHECK(abs_value(delta(n, yy)) <= 2);
    }
  }
}

TEST_CASE("beta and delta are differences of means") {
  for (int n = 2; n <= 40; ++n) {
    for (int y = 1; y <= 6; ++y) {
      const Rational yy = y;
      CHECK(beta(n, yy) == mu(n - 2, yy + 1) - mu(n, yy));
      CHECK(delta(n, yy) == mu(n - 2, yy) - mu(n, yy));
    }
  }
}

TEST_CASE("variance increment at n = 2") {
  for (const Rational& y : {Rational(1), Rational(4), make_rational(3, 7)}) {
    const Rational a = 1 / (y + 1);
    CHECK(variance_increment(2, y) == a - a * a);
  }
  CHECK(variance_increment(2, Rational(1)) == make_rational(1, 4));
}

TEST_CASE("variance increments are bounded by 4 for n + y >= 7") {
  for (int n = 2; n <= 120; ++n) {
    for (int y = 1; y <= 120; ++y) {
      if (n + y < 7) continue;
      CHECK(abs_value(variance_increment(n, Rational(y))) <= 4);
    }
  }
}

TEST_CASE("variance as a sum of increments") {
  for (int n = 2; n <= 200; ++n) CHECK(variance_via_increments(n) == variance_exact(n));
  CHECK_THROWS_AS(variance_via_increments(1), std::domain_error);
}

TEST_CASE("factorial moments convert to raw moments, n <= 9") {
  const CoefficientSweep sweep(9, 4);
  for (int n = 1; n <= 9; ++n) {
    std::vector<Rational> factorial;
    for (int j = 0; j <= 4; ++j) factorial.push_back(sweep.factorial_moment(n, j));
    const auto raw = raw_from_factorial_moments(factorial);
    const auto d = corner_distribution(n, Family::permutation);
    for (int k = 0; k <= 4; ++k) CHECK(raw[k] == d.raw_moment(k));
  }
}

TEST_CASE("central moments from raw moments") {
  const std::vector<Rational> raw{1, 2, 5, 14};
  const auto c = central_from_raw_moments(raw);
  CHECK(c[0] == 1);
  CHECK(c[1] == 0);
  CHECK(c[2] == 1);
  CHECK(c[3] == 14 - 3 * 2 * 5 + 2 * 8);
}

TEST_CASE("gaussian moments") {
  CHECK(gaussian_moment(1) == 0);
  CHECK(gaussian_moment(2) == 1);
  CHECK(gaussian_moment(4) == 3);
  CHECK(gaussian_moment(6) == 15);
  CHECK(gaussian_moment(8) == 105);
  CHECK(falling_factorial(Rational(5), 2) == 20);
  CHECK(falling_factorial(Rational(5), 0) == 1);
}

TEST_CASE("standardized moments of orders 1 and 2") {
  for (int n = 2; n <= 100; ++n) {
    const auto m1 = standardized_moment(n, 1);
    const auto m2 = standardized_moment(n, 2);
    CHECK(m1.coefficient == 0);
    CHECK(m2.coefficient == 1);
    CHECK(m2.radicand == 1);
  }
}

TEST_CASE("n = 3 skewness is the two-point value -4/sqrt(5)") {
  // C_3 takes 0 once and 1 five times.
  const auto m3 = standardized_moment(3, 3);
  CHECK(m3.signed_square() == make_rational(-16, 5));
  CHECK(m3.value().get_d() == doctest::Approx(-4.0 / std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("standardized moments match the enumerated law, n <= 9") {
  for (int n = 2; n <= 9; ++n) {
    const auto d = corner_distribution(n, Family::permutation);
    const Rational mean = d.mean();
    const Rational var = d.raw_moment(2) - mean * mean;
    for (int m = 1; m <= 6; ++m) {
      Rational central = 0;
      for (const auto& [value, count] : d.counts) {
        Rational term = 1;
        for (int i = 0; i < m; ++i) term *= value - mean;
        central += term * count;
      }
      central /= d.total();
      // central^2 / var^m against the exact signed square.
      Rational var_power = 1;
      for (int i = 0; i < m; ++i) var_power *= var;
      Rational square = central * central / var_power;
      if (central < 0) square = -square;
      const auto sm = standardized_moment(n, m);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(sm.signed_square() == square);
    }
  }
}

TEST_CASE("sweep-based and one-off standardized moments agree") {
  const CoefficientSweep sweep(40, 8);
  for (int n : {2, 7, 23, 40}) {
    const auto all = standardized_moments(sweep, n, 8);
    for (int m = 1; m <= 8; ++m) {
      CHECK(all[m - 1].coefficient == standardized_moment(n, m).coefficient);
      CHECK(all[m - 1].radicand == standardized_moment(n, m).radicand);
    }
  }
}

TEST_CASE("moments approach the gaussian ones as n doubles") {
  const std::vector<int> ns{25, 50, 100, 200};
  const auto reports = clt_report(ns, 6);
  REQUIRE(reports.size() == 4);
  for (int m = 3; m <= 6; ++m) {
    double previous = INFINITY;
    for (const auto& r : reports) {
      const auto& sm = r.moments[m - 1];
      const double gap = std::abs(sm.value().get_d() - sm.gaussian_target.get_d());
      CHECK(gap < previous);
      previous = gap;
    }
  }
  // m = 4 behaves like 1/n: halving per doubling.
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    REQUIRE(reports[i].ratios[3].has_value());
    CHECK(reports[i].ratios[3]->get_d() == doctest::Approx(0.5).epsilon(0.1));
  }
  CHECK_FALSE(reports.back().ratios[3].has_value());
}

TEST_CASE("clt report arguments") {
  const std::vector<int> ok{10};
  CHECK_THROWS_AS(clt_report(ok, 11), LimitExceeded);
  CHECK_THROWS_AS(clt_report(ok, 0), std::invalid_argument);
  const std::vector<int> big{301};
  CHECK_THROWS_AS(clt_report(big, 2), LimitExceeded);
  const std::vector<int> small{1};
  CHECK_THROWS_AS(clt_report(small, 2), std::invalid_argument);
}

}
