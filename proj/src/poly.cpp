#include "ptab/poly.hpp"

#include <omp.h>

#include <algorithm>

namespace ptab {

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::rising_factorial(int n) {
  std::vector<BigInt> c{1};
  for (int i = 0; i < n; ++i) {
    // multiply by (z + i)
    c.emplace_back(0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] + c[k] * i;
    c[0] *= i;
  }
  return UniPoly(std::move(c));
}

BigInt UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt UniPoly::operator()(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Rational UniPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Rational(*it);
  return acc;
}

UniPoly UniPoly::shifted(Exec exec) const {
  if (exec == Exec::parallel) return UniPoly(kernels::taylor_shift_convolution(coeffs_, exec));
  std::vector<BigInt> c = coeffs_;
  kernels::taylor_shift_reference(c);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::times_z_power(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  UniPoly out;
  out.coeffs_ = std::move(c);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const BigInt& c, const UniPoly& p) {
  std::vector<BigInt> out = p.coeffs_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace kernels {

void taylor_shift_reference(std::vector<BigInt>& a) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 2; ; --k) {
      a[k] += a[k + 1];
      if (k == i) break;
    }
  }
}

std::vector<BigInt> taylor_shift_convolution(std::span<const BigInt> a, Exec exec) {
  const auto n = static_cast<std::int64_t>(a.size());
  std::vector<BigInt> b(a.size());
  auto coefficient = [&](std::int64_t k) {
    BigInt sum = a[k];
    BigInt choose = 1;  // C(i, k), starting at i = k
    for (std::int64_t i = k + 1; i < n; ++i) {
      choose *= static_cast<unsigned long>(i);
      mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), static_cast<unsigned long>(i - k));
      sum += choose * a[i];
    }
    b[k] = std::move(sum);
  };
  if (exec == Exec::parallel && !omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < n; ++k) coefficient(k);
  } else {
    for (std::int64_t k = 0; k < n; ++k) coefficient(k);
  }
  return b;
}

}  // namespace kernels

}  // namespace ptab
