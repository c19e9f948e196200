#include "ptab/verify.hpp"

#include <sstream>

#include "ptab/enumerate.hpp"
#include "ptab/genfun.hpp"
#include "ptab/moments.hpp"
#include "ptab/pasep.hpp"
#include "ptab/poly.hpp"

namespace ptab {

namespace {

constexpr int kPermutationMax = 9;
constexpr int kTreeLikeMax = 7;
constexpr int kRisingMax = 60;
constexpr int kClosedFormMax = 200;

// The size-13 tableau with four corners used as the running example.
TreeLikeTableau example_tableau() {
  TreeLikeTableau t;
  t.shape = Shape{{7, 7, 5, 5, 2, 2, 1}, 14};
  t.points = {{1, 1}, {1, 2}, {1, 4}, {1, 7}, {2, 2}, {2, 6}, {3, 2},
              {4, 1}, {4, 3}, {4, 5}, {5, 2}, {6, 1}, {7, 1}};
  return t;
}

class Check {
 public:
  explicit Check(VerifyCheck& c) : c_(c) { c_.passed = true; }
  void fail(const std::string& what) {
    if (!c_.detail.empty()) c_.detail += "; ";
    c_.detail += what;
    c_.passed = false;
  }

 private:
  VerifyCheck& c_;
};

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string VerifyReport::str() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << ' ' << c.description;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  return out.str();
}

VerifyReport run_verify(Exec exec) {
  VerifyReport report;
  auto add = [&](std::string id, std::string description) -> VerifyCheck& {
    report.checks.push_back({std::move(id), std::move(description), true, {}});
    return report.checks.back();
  };

  std::vector<std::vector<std::vector<BigInt>>> joint(kPermutationMax + 1);
  for (int n = 1; n <= kPermutationMax; ++n) joint[n] = brute_force_genfun(n, exec);

  struct TreeLikeData {
    BigInt count = 0;
    BigInt corner_sum = 0;
    int activity_mismatches = 0;
  };
  std::vector<TreeLikeData> tree(kTreeLikeMax + 1);
  for (int n = 1; n <= kTreeLikeMax; ++n) {
    TreeLikeData& d = tree[n];
    enumerate_tree_like_tableaux(n, [&](const TreeLikeTableau& t) {
      const int c = corners(t);
      d.count += 1;
      d.corner_sum += c;
      if (moves(to_pasep_state(t)).total() != 2 * c - 1) ++d.activity_mismatches;
    });
  }

  {
    VerifyCheck& vc = add("1", "|P_n| = n! for n <= 9 and |T_n| = n! for n <= 7");
    Check check(vc);
    for (int n = 1; n <= kPermutationMax; ++n) {
      BigInt total = 0;
      for (const auto& row : joint[n]) {
        for (const auto& v : row) total += v;
      }
      if (total != factorial(n)) check.fail("P_" + std::to_string(n) + " has " + total.get_str());
    }
    for (int n = 1; n <= kTreeLikeMax; ++n) {
      if (tree[n].count != factorial(n)) {
        check.fail("T_" + std::to_string(n) + " has " + tree[n].count.get_str());
      }
    }
  }

  {
    VerifyCheck& vc = add("2", "C_n(x,z) equals the enumerated polynomial for n <= 9");
    Check check(vc);
    for (int n = 1; n <= kPermutationMax; ++n) {
      const auto mono = genfun(n, exec).monomial_x_basis();
      const auto& counts = joint[n];
      const std::size_t width = std::max(mono.size(), counts.size());
      for (std::size_t c = 0; c < width; ++c) {
        const UniPoly recursion = c < mono.size() ? mono[c] : UniPoly{};
        const UniPoly brute = c < counts.size() ? UniPoly(counts[c]) : UniPoly{};
        if (recursion != brute) {
          check.fail("n = " + std::to_string(n) + ", x^" + std::to_string(c));
        }
      }
    }
  }

  {
    VerifyCheck& vc = add("3", "C_n(1,z) = z(z+1)...(z+n-1) for n <= 60");
    Check check(vc);
    for (int n = 1; n <= kRisingMax; ++n) {
      if (genfun(n, exec).at_x_one() != UniPoly::rising_factorial(n)) {
        check.fail("n = " + std::to_string(n));
      }
    }
  }

  const CoefficientSweep sweep(kClosedFormMax, 2, exec);

  {
    VerifyCheck& vc = add("4", "E C_n = (n^2+4n-6)/(6n) for 2 <= n <= 200, enumerated mean for n <= 9");
    Check check(vc);
    for (int n = 2; n <= kClosedFormMax; ++n) {
      if (sweep.mean(n) != mean_closed_form(n)) check.fail("recursion, n = " + std::to_string(n));
    }
    for (int n = 1; n <= kPermutationMax; ++n) {
      BigInt corner_sum = 0;
      for (std::size_t c = 0; c < joint[n].size(); ++c) {
        for (const auto& v : joint[n][c]) corner_sum += v * static_cast<unsigned long>(c);
      }
      if (make_rational(corner_sum, factorial(n)) != sweep.mean(n)) {
        check.fail("enumeration, n = " + std::to_string(n));
      }
    }
  }

  {
    VerifyCheck& vc = add("5", "Var C_n closed form for n <= 200 and as a sum of increments");
    Check check(vc);
    for (int n = 1; n <= kClosedFormMax; ++n) {
      const Rational v = sweep.variance(n);
      if (v != variance_closed_form(n)) check.fail("closed form, n = " + std::to_string(n));
      if (n >= 2 && variance_via_increments(n) != v) {
        check.fail("increments, n = " + std::to_string(n));
      }
    }
  }

  {
    VerifyCheck& vc = add("6", "mean corners over T_n = (n+4)/6 for n <= 7");
    Check check(vc);
    for (int n = 1; n <= kTreeLikeMax; ++n) {
      const Rational mean = make_rational(tree[n].corner_sum, tree[n].count);
      const Rational target = make_rational(n + 4, 6);
      if (mean != target) {
        check.fail("n = " + std::to_string(n) + ": " + to_string(mean) + " vs " + to_string(target));
      }
    }
  }

  {
    VerifyCheck& vc = add("9", "PASEP state of the size-13 example, activity 2c-1 for n <= 7");
    Check check(vc);
    const TreeLikeTableau t = example_tableau();
    const PasepState state = to_pasep_state(t);
    if (state.str() != "o*oo***oo**o") check.fail("state " + state.str());
    if (moves(state).total() != 7 || current_activity(t) != 7) check.fail("activity");
    for (int n = 1; n <= kTreeLikeMax; ++n) {
      if (tree[n].activity_mismatches != 0) check.fail("n = " + std::to_string(n));
    }
  }

  return report;
}

}  // namespace ptab
