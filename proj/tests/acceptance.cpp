// One PASS/FAIL line per acceptance criterion. Exit status is 0 when every
// failing criterion is listed in kKnownFailures with its reason.

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ptab/enumerate.hpp"
#include "ptab/genfun.hpp"
#include "ptab/moments.hpp"
#include "ptab/pasep.hpp"
#include "ptab/sampler.hpp"
#include "ptab/tableau.hpp"

using namespace ptab;

namespace {

// Pinned thresholds.
constexpr double kCountingBudgetSeconds = 120.0;
constexpr double kCltBudgetSeconds = 600.0;
constexpr double kSkewScaleFactor = 2.0;       // max/min of |m3| sqrt(n)
constexpr double kKurtosisHalving = 0.5;       // expected ratio per doubling
constexpr double kKurtosisHalvingSlack = 0.25; // relative, so [0.375, 0.625]
constexpr double kChiSquareAlpha = 0.001;
constexpr std::uint64_t kChiSquareSamples = 100000;
constexpr std::uint64_t kMomentSamples = 100000;
constexpr double kStandardErrors = 4.0;

// Criterion 6 fails at n = 1: the only tree-like tableau of size 1 has one
// corner, while (1+4)/6 = 5/6. It holds for 2 <= n <= 7.
const std::map<int, std::string> kKnownFailures = {
    {6, "n = 1 has mean 1, not 5/6; the identity holds for 2 <= n <= 7"}};

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (!passed) detail += "; ";
    passed = false;
    detail += why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Rational q(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

Outcome counting() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 9; ++n) {
    BigInt count = 0;
    enumerate_permutation_tableaux(n, [&](const TableauNode&) { count += 1; });
    if (count != factorial(n)) o.fail("|P_" + std::to_string(n) + "| = " + count.get_str());
  }
  for (int n = 1; n <= 7; ++n) {
    BigInt count = 0;
    enumerate_tree_like_tableaux(n, [&](const TreeLikeTableau&) { count += 1; });
    if (count != factorial(n)) o.fail("|T_" + std::to_string(n) + "| = " + count.get_str());
  }
  const double t = seconds_since(start);
  if (t > kCountingBudgetSeconds) o.fail("took " + fmt(t) + " s");
  if (o.passed) o.detail = "n <= 9 and n <= 7 in " + fmt(t) + " s";
  return o;
}

Outcome genfun_oracle() {
  Outcome o;
  for (int n = 1; n <= 9; ++n) {
    const auto mono = genfun(n).monomial_x_basis();
    const auto brute = brute_force_genfun(n);
    for (std::size_t c = 0; c < std::max(mono.size(), brute.size()); ++c) {
      const UniPoly a = c < mono.size() ? mono[c] : UniPoly{};
      const UniPoly b = c < brute.size() ? UniPoly(brute[c]) : UniPoly{};
      if (a != b) o.fail("n = " + std::to_string(n) + ", x^" + std::to_string(c));
    }
  }
  if (o.passed) o.detail = "1 <= n <= 9, coefficientwise";
  return o;
}

Outcome rising_factorial() {
  Outcome o;
  for (int n = 1; n <= 60; ++n) {
    UniPoly expected{1};
    for (int k = 0; k < n; ++k) expected = expected * UniPoly{k, 1};
    if (genfun(n).at_x_one() != expected) o.fail("n = " + std::to_string(n));
  }
  if (o.passed) o.detail = "1 <= n <= 60";
  return o;
}

Outcome mean() {
  Outcome o;
  for (int n = 2; n <= 200; ++n) {
    if (mean_exact(n) != q(n * n + 4 * n - 6, 6 * n)) o.fail("n = " + std::to_string(n));
  }
  for (int n = 1; n <= 9; ++n) {
    if (corner_distribution(n, Family::permutation).mean() != mean_exact(n)) {
      o.fail("enumerated n = " + std::to_string(n));
    }
  }
  if (o.passed) o.detail = "2 <= n <= 200; enumeration for n <= 9";
  return o;
}

Outcome variance() {
  Outcome o;
  for (int n = 4; n <= 200; ++n) {
    const BigInt v = n;
    if (variance_exact(n) != q(11 * v * v * v * v - 191 * v * v + 360 * v + 180, 180 * v * v * (v - 1))) {
      o.fail("n = " + std::to_string(n));
    }
  }
  if (variance_exact(1) != 0) o.fail("n = 1");
  if (variance_exact(2) != q(1, 4)) o.fail("n = 2");
  if (variance_exact(3) != q(5, 36)) o.fail("n = 3");
  for (int n = 2; n <= 200; ++n) {
    if (variance_via_increments(n) != variance_exact(n)) o.fail("increments at n = " + std::to_string(n));
  }
  if (o.passed) o.detail = "4 <= n <= 200, n = 1..3, increments for 2 <= n <= 200";
  return o;
}

Outcome tree_like_mean() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    const Rational m = corner_distribution(n, Family::treelike).mean();
    if (m != q(n + 4, 6)) o.fail("n = " + std::to_string(n) + ": " + m.get_str() + " vs " + q(n + 4, 6).get_str());
  }
  if (o.passed) o.detail = "1 <= n <= 7";
  return o;
}

Outcome clt() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> ns{25, 50, 100, 200};
  const auto reports = clt_report(ns, 8);
  auto value = [&](std::size_t i, int m) { return reports[i].moments[m - 1].value().get_d(); };

  std::vector<double> scaled;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    scaled.push_back(std::abs(value(i, 3)) * std::sqrt(static_cast<double>(ns[i])));
    if (i > 0 && !(std::abs(value(i, 3)) < std::abs(value(i - 1, 3)))) o.fail("|m3| not decreasing");
    if (i > 0 && !(std::abs(value(i, 4) - 3) < std::abs(value(i - 1, 4) - 3))) o.fail("|m4-3| not decreasing");
    if (i > 0 && !(std::abs(value(i, 6) - 15) < std::abs(value(i - 1, 6) - 15))) o.fail("|m6-15| not decreasing");
    if (i > 0 && std::signbit(value(i, 6) - 15) != std::signbit(value(0, 6) - 15)) o.fail("m6 crosses 15");
  }
  const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
  if (*hi / *lo >= kSkewScaleFactor) o.fail("|m3| sqrt(n) spread " + fmt(*hi / *lo));

  std::string ratios;
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    const double r = (value(i + 1, 4) - 3) / (value(i, 4) - 3);
    ratios += (i ? "," : "") + fmt(r);
    if (std::abs(r - kKurtosisHalving) > kKurtosisHalvingSlack * kKurtosisHalving) {
      o.fail("m4 ratio " + fmt(r) + " at n = " + std::to_string(ns[i]));
    }
  }
  const double t = seconds_since(start);
  if (t > kCltBudgetSeconds) o.fail("took " + fmt(t) + " s");
  if (o.passed) {
    o.detail = "m3 sqrt(n) spread " + fmt(*hi / *lo) + ", m4 ratios " + ratios + ", m6 " +
               fmt(value(0, 6)) + " -> " + fmt(value(3, 6)) + ", " + fmt(t) + " s";
  }
  return o;
}

Outcome sampler() {
  Outcome o;
  std::map<std::pair<std::vector<int>, std::vector<std::vector<std::uint8_t>>>, double> cells;
  for (const auto& t : all_permutation_tableaux(5)) cells[{t.shape.row_lengths, t.filling}] = 0;
  const TableauSampler five(5);
  SamplerRng rng = sampler_stream(20240601, 0);
  for (std::uint64_t i = 0; i < kChiSquareSamples; ++i) {
    const auto t = five.sample(rng);
    cells[{t.shape.row_lengths, t.filling}] += 1;
  }
  const double expected = static_cast<double>(kChiSquareSamples) / 120.0;
  double x = 0;
  for (const auto& [key, count] : cells) x += (count - expected) * (count - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(cells.size() - 1));
  const double critical = boost::math::quantile(boost::math::complement(dist, kChiSquareAlpha));
  if (cells.size() != 120) o.fail("P_5 has " + std::to_string(cells.size()) + " cells");
  if (!(x < critical)) o.fail("chi2 " + fmt(x) + " >= " + fmt(critical));

  const auto stats = sample_corner_stats(100, kMomentSamples, 42);
  const double mu = mean_exact(100).get_d();
  const double var = variance_exact(100).get_d();
  const double n = static_cast<double>(kMomentSamples);
  // Standard error of the sample variance uses the exact fourth central moment.
  const double m4 = standardized_moment(100, 4).value().get_d() * var * var;
  const double se_mean = std::sqrt(var / n);
  const double se_var = std::sqrt((m4 - var * var * (n - 3) / (n - 1)) / n);
  const double z_mean = (stats.mean - mu) / se_mean;
  const double z_var = (stats.variance - var) / se_var;
  if (std::abs(z_mean) > kStandardErrors) o.fail("mean z = " + fmt(z_mean));
  if (std::abs(z_var) > kStandardErrors) o.fail("variance z = " + fmt(z_var));
  if (o.passed) {
    o.detail = "chi2 " + fmt(x) + " < " + fmt(critical) + "; n = 100 mean z " + fmt(z_mean) +
               ", variance z " + fmt(z_var);
  }
  return o;
}

Outcome pasep() {
  Outcome o;
  TreeLikeTableau example;
  example.shape = Shape{{7, 7, 5, 5, 2, 2, 1}, 14};
  example.points = {{1, 1}, {1, 2}, {1, 4}, {1, 7}, {2, 2}, {2, 6}, {3, 2},
                {4, 1}, {4, 3}, {4, 5}, {5, 2}, {6, 1}, {7, 1}};
  const std::string state = to_pasep_state(example).str();
  if (state != "o*oo***oo**o") o.fail("state " + state);
  if (current_activity(example) != 7 || moves(to_pasep_state(example)).total() != 7) o.fail("activity");
  long checked = 0;
  for (int n = 1; n <= 7; ++n) {
    enumerate_tree_like_tableaux(n, [&](const TreeLikeTableau& t) {
      ++checked;
      if (moves(to_pasep_state(t)).total() != 2 * corners(t) - 1) o.fail("n = " + std::to_string(n));
    });
  }
  if (o.passed) o.detail = "example state o*oo***oo**o, activity 7; " + std::to_string(checked) + " tableaux";
  return o;
}

std::string run(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = ::pclose(pipe);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string cli = PTAB_CLI_PATH;
  int s1 = 0;
  int s2 = 0;
  const std::string v1 = run("'" + cli + "' verify", s1);
  const std::string v2 = run("'" + cli + "' verify", s2);
  if (v1.empty() || v1 != v2 || s1 != s2) o.fail("verify output differs between runs");
  for (const char* id : {"1 ", "2 ", "3 ", "4 ", "5 ", "6 ", "9 "}) {
    if (v1.find(std::string("PASS ") + id) == std::string::npos &&
        v1.find(std::string("FAIL ") + id) == std::string::npos) {
      o.fail(std::string("verify does not rerun ") + id);
    }
  }
  const std::string sample = "'" + cli + "' sample --n 60 --count 20000 --seed 123 --format json";
  const std::string a = run(sample, s1);
  const std::string b = run("'" + cli + "' --threads 1 sample --n 60 --count 20000 --seed 123 --format json", s2);
  if (a.empty() || s1 != 0 || a != b) o.fail("sample output differs between runs");
  if (o.passed) o.detail = "verify and sample byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, counting},  {2, genfun_oracle}, {3, rising_factorial}, {4, mean},    {5, variance},
      {6, tree_like_mean}, {7, clt},      {8, sampler},          {9, pasep},   {10, determinism}};
  std::set<int> failed;
  for (const auto& [id, check] : criteria) {
    const Outcome o = check();
    if (!o.passed) failed.insert(id);
    std::printf("%s %d %s\n", o.passed ? "PASS" : "FAIL", id, o.detail.c_str());
    std::fflush(stdout);
  }
  bool unexpected = false;
  for (int id : failed) {
    const auto known = kKnownFailures.find(id);
    if (known == kKnownFailures.end()) {
      unexpected = true;
    } else {
      std::printf("known failure %d: %s\n", id, known->second.c_str());
    }
  }
  std::printf("%zu of %zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  return unexpected ? 1 : 0;
}
