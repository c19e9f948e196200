#include "ptab/report.hpp"

#include <cstdio>
#include <sstream>

#include "ptab/pasep.hpp"

namespace ptab::report {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string num(const Rational& q) { return q.get_num().get_str(); }
std::string den(const Rational& q) { return q.get_den().get_str(); }

std::string rational_field(const Rational& q, bool exact) {
  return exact ? to_string(q) : to_decimal(q);
}

}  // namespace

std::string distribution_csv(const DistributionTable& table) {
  std::ostringstream out;
  out << "value,count\n";
  for (const auto& [value, count] : table.counts) out << value << ',' << count.get_str() << '\n';
  return out.str();
}

nlohmann::json distribution_json(const DistributionTable& table) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [value, count] : table.counts) {
    counts.push_back({{"value", value}, {"count", count.get_str()}});
  }
  return {{"n", table.n},
          {"family", to_string(table.family)},
          {"stat", to_string(table.stat)},
          {"total", table.total().get_str()},
          {"counts", std::move(counts)}};
}

std::string genfun_summary_csv(const CoefficientSweep& sweep, std::span<const int> ns) {
  std::ostringstream out;
  out << "n,mean_num,mean_den,variance_num,variance_den\n";
  for (int n : ns) {
    const Rational mean = sweep.mean(n);
    const Rational var = sweep.variance(n);
    out << n << ',' << num(mean) << ',' << den(mean) << ',' << num(var) << ',' << den(var) << '\n';
  }
  return out.str();
}

nlohmann::json genfun_summary_json(const CoefficientSweep& sweep, std::span<const int> ns) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n : ns) {
    const Rational mean = sweep.mean(n);
    const Rational var = sweep.variance(n);
    rows.push_back({{"n", n},
                    {"mean_num", num(mean)},
                    {"mean_den", den(mean)},
                    {"variance_num", num(var)},
                    {"variance_den", den(var)}});
  }
  return rows;
}

nlohmann::json genfun_dump_json(const BivariatePoly& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (int m = 0; m <= poly.max_order(); ++m) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : poly.coeff(m).coeffs()) coeffs.push_back(c.get_str());
    terms.push_back(nlohmann::json::array({m, std::move(coeffs)}));
  }
  return {{"n", poly.n()}, {"terms", std::move(terms)}};
}

std::string genfun_dump_csv(const BivariatePoly& poly) {
  std::ostringstream out;
  out << "m,z_coefficients\n";
  for (int m = 0; m <= poly.max_order(); ++m) {
    out << m << ',';
    const auto& coeffs = poly.coeff(m).coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k > 0) out << ' ';
      out << coeffs[k].get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::string moments_csv(std::span<const MomentReport> reports, bool exact) {
  std::ostringstream out;
  out << "n,m,moment_num,moment_den,moment_radicand,moment_decimal,gaussian_target,ratio,mean,"
         "variance\n";
  for (const auto& r : reports) {
    for (std::size_t k = 0; k < r.moments.size(); ++k) {
      const StandardizedMoment& sm = r.moments[k];
      out << r.n << ',' << sm.order << ',' << num(sm.coefficient) << ',' << den(sm.coefficient)
          << ',' << to_string(sm.radicand) << ',' << sm.decimal() << ','
          << to_string(sm.gaussian_target) << ',';
      if (k < r.ratios.size() && r.ratios[k]) out << to_decimal(*r.ratios[k]);
      out << ',' << rational_field(r.mean, exact) << ',' << rational_field(r.variance, exact)
          << '\n';
    }
  }
  return out.str();
}

nlohmann::json moments_json(std::span<const MomentReport> reports, bool exact) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json moments = nlohmann::json::array();
    for (std::size_t k = 0; k < r.moments.size(); ++k) {
      const StandardizedMoment& sm = r.moments[k];
      nlohmann::json ratio = nullptr;
      if (k < r.ratios.size() && r.ratios[k]) ratio = to_decimal(*r.ratios[k]);
      moments.push_back({{"m", sm.order},
                         {"moment_num", num(sm.coefficient)},
                         {"moment_den", den(sm.coefficient)},
                         {"moment_radicand", to_string(sm.radicand)},
                         {"moment_decimal", sm.decimal()},
                         {"gaussian_target", to_string(sm.gaussian_target)},
                         {"ratio", std::move(ratio)}});
    }
    out.push_back({{"n", r.n},
                   {"mean", rational_field(r.mean, exact)},
                   {"variance", rational_field(r.variance, exact)},
                   {"moments", std::move(moments)}});
  }
  return out;
}

nlohmann::json sample_stats_json(const SampleStats& stats) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [c, count] : stats.histogram) histogram[std::to_string(c)] = count;
  return {{"n", stats.n},
          {"count", stats.count},
          {"seed", stats.seed},
          {"rng", kSamplerRngName},
          {"stream_version", kSamplerStreamVersion},
          {"mean", fmt(stats.mean)},
          {"variance", fmt(stats.variance)},
          {"skewness", fmt(stats.skewness)},
          {"kurtosis", fmt(stats.kurtosis)},
          {"histogram", std::move(histogram)}};
}

std::string sample_stats_csv(const SampleStats& stats) {
  std::ostringstream out;
  out << "n,count,seed,mean,variance,skewness,kurtosis\n";
  out << stats.n << ',' << stats.count << ',' << stats.seed << ',' << fmt(stats.mean) << ','
      << fmt(stats.variance) << ',' << fmt(stats.skewness) << ',' << fmt(stats.kurtosis) << '\n';
  return out.str();
}

nlohmann::json pasep_json(const TreeLikeTableau& t) {
  const PasepState state = to_pasep_state(t);
  const MoveSet m = moves(state);
  return {{"state", state.str()},
          {"moves",
           {{"right_jumps", m.right_jumps},
            {"left_jumps", m.left_jumps},
            {"can_enter", m.can_enter},
            {"can_exit", m.can_exit},
            {"total", m.total()}}},
          {"corners", corners(t)},
          {"activity", current_activity(t)}};
}

}  // namespace ptab::report
