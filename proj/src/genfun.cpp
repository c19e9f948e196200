#include "ptab/genfun.hpp"

#include <stdexcept>

#include "ptab/error.hpp"

namespace ptab {

namespace {

// c_{n,m}(z) for m = 0..max order of one level, with c_{n,m}(z+1) cached
// because both following levels need the shifted form.
struct Level {
  std::vector<UniPoly> c;
  std::vector<UniPoly> shifted;

  const UniPoly& at(int m) const {
    static const UniPoly zero;
    return m >= 0 && m < static_cast<int>(c.size()) ? c[m] : zero;
  }
  const UniPoly& shifted_at(int m) const {
    static const UniPoly zero;
    return m >= 0 && m < static_cast<int>(shifted.size()) ? shifted[m] : zero;
  }
};

Level make_level(std::vector<UniPoly> c) {
  Level level;
  level.shifted.reserve(c.size());
  for (const auto& p : c) level.shifted.push_back(p.shifted());
  level.c = std::move(c);
  return level;
}

// c_{n,m} = z c_{n-1,m}(z+1) + z(z+1) c_{n-2,m-1}(z+1) - z^2 c_{n-2,m-1}(z)
//         = z (c_{n-1,m}(z+1) + B) + z^2 (B - c_{n-2,m-1}(z)),  B = c_{n-2,m-1}(z+1).
// Orders within a level are independent; Exec::parallel spreads them over
// OpenMP threads.
Level next_level(const Level& prev2, const Level& prev1, int n, int m_max, Exec exec) {
  const int orders = std::min(m_max, n / 2) + 1;
  Level level;
  level.c.resize(static_cast<std::size_t>(orders));
  level.shifted.resize(static_cast<std::size_t>(orders));
  auto compute = [&](int m) {
    UniPoly p = prev1.shifted_at(m).times_z_power(1);
    if (m > 0) {
      const UniPoly& b = prev2.shifted_at(m - 1);
      p += b.times_z_power(1);
      p += (b - prev2.at(m - 1)).times_z_power(2);
    }
    level.shifted[m] = p.shifted();
    level.c[m] = std::move(p);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int m = 0; m < orders; ++m) compute(m);
  } else {
    for (int m = 0; m < orders; ++m) compute(m);
  }
  return level;
}

void check_coefficient_request(int n, int m) {
  if (n < 0) throw std::invalid_argument("coefficient recursion: n must be >= 0");
  if (n > kCoefficientLengthCap) {
    throw LimitExceeded("coefficient recursion: n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(kCoefficientLengthCap));
  }
  if (m > kCoefficientOrderCap) {
    throw LimitExceeded("coefficient recursion: order " + std::to_string(m) +
                        " exceeds the cap " + std::to_string(kCoefficientOrderCap));
  }
}

// Runs levels 0..n, calling visit(k, level) on each.
template <class Visit>
void run_levels(int n, int m_max, Exec exec, Visit visit) {
  Level prev2 = make_level({UniPoly{1}});
  visit(0, prev2);
  if (n == 0) return;
  Level prev1 = make_level({UniPoly{0, 1}});
  visit(1, prev1);
  for (int k = 2; k <= n; ++k) {
    Level cur = next_level(prev2, prev1, k, m_max, exec);
    visit(k, cur);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
}

BigInt sum_of_coeffs(const UniPoly& p) { return p(BigInt(1)); }

}  // namespace

BivariatePoly::BivariatePoly(int n, std::vector<UniPoly> terms) : n_(n), terms_(std::move(terms)) {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

const UniPoly& BivariatePoly::coeff(int m) const {
  static const UniPoly zero;
  return m >= 0 && m < static_cast<int>(terms_.size()) ? terms_[m] : zero;
}

std::vector<UniPoly> BivariatePoly::monomial_x_basis() const {
  std::vector<UniPoly> out(terms_.size());
  for (int m = 0; m < static_cast<int>(terms_.size()); ++m) {
    for (int k = 0; k <= m; ++k) {
      BigInt w = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k));
      if ((m - k) % 2 == 1) w = -w;
      out[k] += w * terms_[m];
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

BivariatePoly genfun(int n, Exec exec) {
  if (n < 0) throw std::invalid_argument("genfun: n must be >= 0");
  if (n > kGenfunFullCap) {
    throw LimitExceeded("genfun: n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(kGenfunFullCap));
  }
  std::vector<UniPoly> terms;
  run_levels(n, n / 2, exec, [&](int k, const Level& level) {
    if (k == n) terms = level.c;
  });
  return BivariatePoly(n, std::move(terms));
}

UniPoly coeff_cnm(int n, int m, Exec exec) {
  check_coefficient_request(n, m);
  if (m < 0 || m > n / 2) return {};
  UniPoly out;
  run_levels(n, m, exec, [&](int k, const Level& level) {
    if (k == n) out = level.at(m);
  });
  return out;
}

CoefficientSweep::CoefficientSweep(int n_max, int m_max, Exec exec) : n_max_(n_max), m_max_(m_max) {
  check_coefficient_request(n_max, m_max);
  if (m_max < 0) throw std::invalid_argument("coefficient sweep: m_max must be >= 0");
  at_one_.resize(static_cast<std::size_t>(n_max) + 1);
  run_levels(n_max, m_max, exec, [&](int k, const Level& level) {
    auto& row = at_one_[k];
    row.assign(static_cast<std::size_t>(m_max) + 1, BigInt(0));
    for (int m = 0; m <= m_max; ++m) row[m] = sum_of_coeffs(level.at(m));
  });
}

const BigInt& CoefficientSweep::at_one(int n, int m) const {
  if (n < 0 || n > n_max_ || m < 0 || m > m_max_) {
    throw std::out_of_range("coefficient sweep: (" + std::to_string(n) + ", " + std::to_string(m) +
                            ") outside the computed range");
  }
  return at_one_[n][m];
}

Rational CoefficientSweep::factorial_moment(int n, int j) const {
  const BigInt& c = at_one(n, j);
  return make_rational(factorial(static_cast<unsigned long>(j)) * c,
                       factorial(static_cast<unsigned long>(n)));
}

Rational CoefficientSweep::mean(int n) const { return factorial_moment(n, 1); }

Rational CoefficientSweep::variance(int n) const {
  const Rational mu = mean(n);
  return factorial_moment(n, 2) - mu * mu + mu;
}

Rational mean_exact(int n) {
  if (n < 1) throw std::invalid_argument("mean_exact: n must be >= 1");
  return CoefficientSweep(n, 1).mean(n);
}

Rational variance_exact(int n) {
  if (n < 1) throw std::invalid_argument("variance_exact: n must be >= 1");
  return CoefficientSweep(n, 2).variance(n);
}

Rational second_factorial_moment(int n) {
  if (n < 1) throw std::invalid_argument("second_factorial_moment: n must be >= 1");
  return CoefficientSweep(n, 2).factorial_moment(n, 2);
}

Rational mean_closed_form(int n) {
  if (n < 1) throw std::domain_error("mean_closed_form: n must be >= 1");
  if (n == 1) return 0;
  const long v = n;
  return make_rational(v * v + 4 * v - 6, 6 * v);
}

Rational variance_closed_form(int n) {
  if (n < 1) throw std::domain_error("variance_closed_form: n must be >= 1");
  switch (n) {
    case 1: return 0;
    case 2: return make_rational(1, 4);
    case 3: return make_rational(5, 36);
    default: break;
  }
  const BigInt v = n;
  const BigInt v2 = v * v;
  return make_rational(11 * v2 * v2 - 191 * v2 + 360 * v + 180, 180 * v2 * (v - 1));
}

Rational second_factorial_moment_closed_form(int n) {
  if (n < 4) throw std::domain_error("second_factorial_moment_closed_form: n must be >= 4");
  const BigInt v = n;
  const BigInt v2 = v * v;
  return make_rational(5 * v2 * v2 + 16 * v2 * v - 110 * v2 - 151 * v + 600, 180 * v * (v - 1));
}

}  // namespace ptab
