#include "ptab/moments.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ptab/error.hpp"

namespace ptab {

Rational falling_factorial(const Rational& w, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k must be >= 0");
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= w - i;
  return r;
}

namespace {

Rational checked_falling_pair(int n, const Rational& y, const char* what) {
  Rational ff = falling_factorial(y + (n - 1), 2);
  if (ff == 0) {
    throw std::domain_error(std::string(what) + ": (y+n-1)_2 vanishes at n = " +
                            std::to_string(n) + ", y = " + y.get_str());
  }
  return ff;
}

void require_n(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw std::domain_error(std::string(what) + ": n must be >= " + std::to_string(min_n));
  }
}

// S(k, j), 0 <= j <= k <= K.
std::vector<std::vector<BigInt>> stirling_second_kind(int K) {
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(K) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(K) + 1, BigInt(0)));
  s[0][0] = 1;
  for (int k = 1; k <= K; ++k) {
    for (int j = 1; j <= k; ++j) s[k][j] = j * s[k - 1][j] + s[k - 1][j - 1];
  }
  return s;
}

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

bool equals_target(const StandardizedMoment& m) {
  if (m.radicand == 1) return m.coefficient == m.gaussian_target;
  return m.coefficient == 0 && m.gaussian_target == 0;
}

}  // namespace

Rational mu(int n, const Rational& y) {
  require_n(n, 0, "mu");
  if (n <= 1) return 0;
  const Rational ff = checked_falling_pair(n, y, "mu");
  const Rational nn = n;
  return (nn - 1) * (nn * nn + 3 * y * nn + nn - 6) / (6 * ff);
}

Rational alpha(int n, const Rational& y) {
  require_n(n, 2, "alpha");
  const Rational ff = checked_falling_pair(n, y, "alpha");
  const Rational nn = n;
  return -(nn + y * nn - y - 2) / ff;
}

Rational alpha_from_mu(int n, const Rational& y) {
  require_n(n, 1, "alpha_from_mu");
  return mu(n - 1, y + 1) - mu(n, y);
}

Rational beta(int n, const Rational& y) {
  require_n(n, 2, "beta");
  return mu(n - 2, y + 1) - mu(n, y);
}

Rational delta(int n, const Rational& y) {
  require_n(n, 2, "delta");
  return mu(n - 2, y) - mu(n, y);
}

Rational variance_increment(int n, const Rational& y) {
  require_n(n, 2, "variance_increment");
  const Rational ff = checked_falling_pair(n, y, "variance_increment");
  const Rational a = alpha(n, y);
  const Rational cross = (y + 1) * (y + (n - 2)) * beta(n, y) - y * y * delta(n, y);
  return a * a - a + 2 * cross / ff;
}

Rational variance_via_increments(int n) {
  require_n(n, 2, "variance_via_increments");
  Rational sum = 0;
  for (int j = 0; j <= n - 2; ++j) sum += variance_increment(n - j, Rational(j + 1));
  return sum;
}

std::vector<Rational> raw_from_factorial_moments(std::span<const Rational> factorial) {
  if (factorial.empty()) return {};
  const int K = static_cast<int>(factorial.size()) - 1;
  const auto s = stirling_second_kind(K);
  std::vector<Rational> raw(factorial.size());
  for (int k = 0; k <= K; ++k) {
    Rational sum = 0;
    for (int j = 0; j <= k; ++j) sum += Rational(s[k][j]) * factorial[j];
    raw[k] = sum;
  }
  return raw;
}

std::vector<Rational> central_from_raw_moments(std::span<const Rational> raw) {
  if (raw.empty()) return {};
  const Rational mean = raw.size() > 1 ? raw[1] : Rational(0);
  std::vector<Rational> central(raw.size());
  for (std::size_t m = 0; m < raw.size(); ++m) {
    Rational sum = 0;
    for (std::size_t k = 0; k <= m; ++k) {
      sum += Rational(binomial(m, k)) * raw[k] * power(-mean, static_cast<int>(m - k));
    }
    central[m] = sum;
  }
  return central;
}

Rational gaussian_moment(int m) {
  if (m < 0) throw std::invalid_argument("gaussian_moment: m must be >= 0");
  if (m % 2 == 1) return 0;
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(m / 2));
  den *= factorial(static_cast<unsigned long>(m / 2));
  return make_rational(factorial(static_cast<unsigned long>(m)), den);
}

mpf_class StandardizedMoment::value() const {
  mpf_class c(0, kDecimalPrecisionBits);
  c = coefficient;
  if (radicand == 1) return c;
  mpf_class r(0, kDecimalPrecisionBits);
  r = radicand;
  mpf_class root(0, kDecimalPrecisionBits);
  mpf_sqrt(root.get_mpf_t(), r.get_mpf_t());
  mpf_class out(0, kDecimalPrecisionBits);
  out = c * root;
  return out;
}

Rational StandardizedMoment::signed_square() const {
  Rational sq = coefficient * coefficient * radicand;
  return coefficient < 0 ? Rational(-sq) : sq;
}

std::string StandardizedMoment::decimal(int digits) const { return to_decimal(value(), digits); }

std::vector<StandardizedMoment> standardized_moments(const CoefficientSweep& sweep, int n,
                                                     int m_max) {
  if (n < 2) throw std::invalid_argument("standardized moments need n >= 2");
  if (m_max < 1) throw std::invalid_argument("standardized moments need m_max >= 1");
  const int orders = std::max(m_max, 2);
  if (n > sweep.n_max() || orders > sweep.m_max()) {
    throw std::out_of_range("standardized moments: sweep does not cover the request");
  }
  std::vector<Rational> factorial(static_cast<std::size_t>(orders) + 1);
  for (int j = 0; j <= orders; ++j) factorial[j] = sweep.factorial_moment(n, j);
  const auto raw = raw_from_factorial_moments(factorial);
  const auto central = central_from_raw_moments(raw);
  const Rational& var = central[2];
  if (var <= 0) throw InternalError("non-positive variance for n >= 2");

  std::vector<StandardizedMoment> out;
  out.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    StandardizedMoment sm;
    sm.order = m;
    sm.gaussian_target = gaussian_moment(m);
    if (m % 2 == 0) {
      sm.coefficient = central[m] / power(var, m / 2);
    } else {
      sm.coefficient = central[m] / power(var, (m + 1) / 2);
      sm.radicand = sm.coefficient == 0 ? Rational(1) : var;
    }
    out.push_back(std::move(sm));
  }
  return out;
}

StandardizedMoment standardized_moment(int n, int m) {
  if (m < 1) throw std::invalid_argument("standardized_moment: m must be >= 1");
  if (m > kMomentOrderCap) {
    throw LimitExceeded("standardized_moment: order " + std::to_string(m) + " exceeds the cap " +
                        std::to_string(kMomentOrderCap));
  }
  const CoefficientSweep sweep(n, std::max(m, 2), Exec::serial);
  return standardized_moments(sweep, n, m).back();
}

std::vector<MomentReport> clt_report(std::span<const int> ns, int m_max, Exec exec) {
  if (m_max < 1) throw std::invalid_argument("clt_report: max order must be >= 1");
  if (m_max > kMomentOrderCap) {
    throw LimitExceeded("clt_report: order " + std::to_string(m_max) + " exceeds the cap " +
                        std::to_string(kMomentOrderCap));
  }
  if (ns.empty()) throw std::invalid_argument("clt_report: no sizes requested");
  int n_max = 0;
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("clt_report: every n must be >= 2");
    n_max = std::max(n_max, n);
  }
  if (n_max > kCoefficientLengthCap) {
    throw LimitExceeded("clt_report: n = " + std::to_string(n_max) + " exceeds the cap " +
                        std::to_string(kCoefficientLengthCap));
  }

  const CoefficientSweep sweep(n_max, std::max(m_max, 2), exec);
  std::vector<MomentReport> reports(ns.size());
  auto build = [&](std::size_t i) {
    MomentReport& r = reports[i];
    r.n = ns[i];
    r.mean = sweep.mean(r.n);
    r.variance = sweep.variance(r.n);
    r.moments = standardized_moments(sweep, r.n, m_max);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < reports.size(); ++i) build(i);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) build(i);
  }

  std::map<int, const MomentReport*> by_n;
  for (const auto& r : reports) by_n.emplace(r.n, &r);
  for (auto& r : reports) {
    r.ratios.assign(r.moments.size(), std::nullopt);
    auto twice = by_n.find(2 * r.n);
    if (twice == by_n.end()) continue;
    for (std::size_t k = 0; k < r.moments.size(); ++k) {
      const StandardizedMoment& here = r.moments[k];
      if (equals_target(here)) continue;
      mpf_class target(0, kDecimalPrecisionBits);
      target = here.gaussian_target;
      mpf_class ratio(0, kDecimalPrecisionBits);
      ratio = (twice->second->moments[k].value() - target) / (here.value() - target);
      r.ratios[k] = ratio;
    }
  }
  return reports;
}

}  // namespace ptab
