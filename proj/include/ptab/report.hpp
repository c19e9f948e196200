#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptab/enumerate.hpp"
#include "ptab/genfun.hpp"
#include "ptab/moments.hpp"
#include "ptab/sampler.hpp"
#include "ptab/tableau.hpp"

// Text and JSON emitters behind the command-line tool. Big integers are
// always written as decimal strings in JSON.
namespace ptab::report {

std::string distribution_csv(const DistributionTable& table);
nlohmann::json distribution_json(const DistributionTable& table);

// Columns: n,mean_num,mean_den,variance_num,variance_den.
std::string genfun_summary_csv(const CoefficientSweep& sweep, std::span<const int> ns);
nlohmann::json genfun_summary_json(const CoefficientSweep& sweep, std::span<const int> ns);

// List of (m, [z-coefficients]) pairs.
nlohmann::json genfun_dump_json(const BivariatePoly& poly);
// Columns: m,z_coefficients (space separated, ascending degree).
std::string genfun_dump_csv(const BivariatePoly& poly);

// Columns: n,m,moment_num,moment_den,moment_radicand,moment_decimal,
// gaussian_target,ratio,mean,variance. mean and variance are 12-digit
// decimals, or num/den strings when `exact` is set.
std::string moments_csv(std::span<const MomentReport> reports, bool exact);
nlohmann::json moments_json(std::span<const MomentReport> reports, bool exact);

nlohmann::json sample_stats_json(const SampleStats& stats);
std::string sample_stats_csv(const SampleStats& stats);

// {"state": "o*oo...", "moves": {...}, "corners": c, "activity": 2c-1}
nlohmann::json pasep_json(const TreeLikeTableau& t);

}  // namespace ptab::report
