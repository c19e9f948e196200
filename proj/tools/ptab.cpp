#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ptab/enumerate.hpp"
#include "ptab/error.hpp"
#include "ptab/exec.hpp"
#include "ptab/genfun.hpp"
#include "ptab/moments.hpp"
#include "ptab/pasep.hpp"
#include "ptab/report.hpp"
#include "ptab/sampler.hpp"
#include "ptab/tableau_json.hpp"
#include "ptab/verify.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUser = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int parse_int(std::string_view text) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

// "7", "50,100,200" or "1..20".
std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(std::string_view(text).substr(0, dots));
    const int hi = parse_int(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw UsageError("empty range " + text);
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw UsageError("no sizes given");
  return out;
}

int single_size(const std::string& text) {
  const auto sizes = parse_sizes(text);
  if (sizes.size() != 1) throw UsageError("this subcommand takes a single --n");
  return sizes.front();
}

struct Output {
  std::string path;
  std::string format = "csv";

  bool json() const { return format == "json"; }

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open " + path + " for writing");
    out << text;
  }
  void write(const nlohmann::json& j) const { write(j.dump(2) + "\n"); }
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Output file (default stdout)");
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string violations_text(const std::vector<ptab::Violation>& violations) {
  std::string text;
  for (const auto& v : violations) text += "\n  " + ptab::describe(v);
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corner statistics of permutation and tree-like tableaux"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");
  int threads = 0;
  app.add_option("--threads", threads, "Maximum OpenMP worker threads (0: runtime default)");

  Output out;

  std::string n_text;
  std::string family = "permutation";
  std::string stat = "corners";
  bool list = false;
  auto* enum_cmd = app.add_subcommand("enum", "Exhaustive corner or unrestricted-row distribution");
  enum_cmd->add_option("--n", n_text, "Tableau size")->required();
  enum_cmd->add_option("--family", family)
      ->check(CLI::IsMember({"permutation", "treelike"}))
      ->capture_default_str();
  enum_cmd->add_option("--stat", stat)
      ->check(CLI::IsMember({"corners", "unrestricted"}))
      ->capture_default_str();
  enum_cmd->add_flag("--list", list, "Emit every tableau as a JSON line instead");
  add_output(enum_cmd, out);

  bool dump = false;
  auto* genfun_cmd = app.add_subcommand("genfun", "Exact mean and variance, or a dump of C_n(x,z)");
  genfun_cmd->add_option("--n", n_text, "Size, list a,b,c or range a..b")->required();
  genfun_cmd->add_flag("--dump", dump, "Print c_{n,m}(z) for every m (single n)");
  add_output(genfun_cmd, out);

  int max_order = 4;
  bool exact = false;
  auto* moments_cmd = app.add_subcommand("moments", "Exact standardized moments and CLT ratios");
  moments_cmd->add_option("--n", n_text, "Size, list a,b,c or range a..b")->required();
  moments_cmd->add_option("--max-order", max_order)->capture_default_str();
  moments_cmd->add_flag("--exact", exact, "Mean and variance as num/den");
  add_output(moments_cmd, out);

  std::uint64_t count = 100000;
  std::uint64_t seed = 42;
  std::string cache_dir;
  std::string route = "per-row";
  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo corner statistics");
  sample_cmd->add_option("--n", n_text, "Tableau size")->required();
  sample_cmd->add_option("--count", count)->capture_default_str();
  sample_cmd->add_option("--seed", seed)->capture_default_str();
  sample_cmd->add_option("--cache-dir", cache_dir, "Completion table cache")
      ->envname("SAMPLER_CACHE_DIR");
  sample_cmd->add_option("--route", route, "Extension-step sampling route")
      ->check(CLI::IsMember({"per-row", "inverse-transform"}))
      ->capture_default_str();
  add_output(sample_cmd, out);

  std::string in_path;
  auto* pasep_cmd = app.add_subcommand("pasep", "PASEP state and moves of a tree-like tableau");
  pasep_cmd->add_option("--in", in_path, "Tableau JSON file")->required();
  add_output(pasep_cmd, out);

  auto* verify_cmd = app.add_subcommand("verify", "Run the exact oracle suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUser;
  }

  try {
    ptab::set_max_threads(threads);

    if (*enum_cmd) {
      const int n = single_size(n_text);
      const auto fam = family == "treelike" ? ptab::Family::treelike : ptab::Family::permutation;
      if (list) {
        std::string text;
        if (fam == ptab::Family::permutation) {
          ptab::enumerate_permutation_tableaux(n, [&](const ptab::TableauNode& node) {
            text += ptab::to_json(node.tableau).dump() + "\n";
          });
        } else {
          ptab::enumerate_tree_like_tableaux(n, [&](const ptab::TreeLikeTableau& t) {
            text += ptab::to_json(t).dump() + "\n";
          });
        }
        out.write(text);
      } else {
        const auto s =
            stat == "unrestricted" ? ptab::Statistic::unrestricted_rows : ptab::Statistic::corners;
        const auto table = ptab::distribution(n, fam, s);
        if (out.json()) {
          out.write(ptab::report::distribution_json(table));
        } else {
          out.write(ptab::report::distribution_csv(table));
        }
      }
    } else if (*genfun_cmd) {
      const auto ns = parse_sizes(n_text);
      if (dump) {
        const auto poly = ptab::genfun(single_size(n_text));
        if (out.json()) {
          out.write(ptab::report::genfun_dump_json(poly));
        } else {
          out.write(ptab::report::genfun_dump_csv(poly));
        }
      } else {
        int n_max = 0;
        for (int n : ns) {
          if (n < 1) throw UsageError("every n must be >= 1");
          n_max = std::max(n_max, n);
        }
        const ptab::CoefficientSweep sweep(n_max, 2);
        if (out.json()) {
          out.write(ptab::report::genfun_summary_json(sweep, ns));
        } else {
          out.write(ptab::report::genfun_summary_csv(sweep, ns));
        }
      }
    } else if (*moments_cmd) {
      const auto ns = parse_sizes(n_text);
      const auto reports = ptab::clt_report(ns, max_order);
      if (out.json()) {
        out.write(ptab::report::moments_json(reports, exact));
      } else {
        out.write(ptab::report::moments_csv(reports, exact));
      }
    } else if (*sample_cmd) {
      const int n = single_size(n_text);
      if (!cache_dir.empty()) ptab::load_or_build_completion_table(n, cache_dir);
      const auto stats = ptab::sample_corner_stats(
          n, count, seed, ptab::Exec::parallel,
          route == "inverse-transform" ? ptab::SamplerRoute::inverse_transform
                                       : ptab::SamplerRoute::per_row);
      if (out.json()) {
        out.write(ptab::report::sample_stats_json(stats));
      } else {
        out.write(ptab::report::sample_stats_csv(stats));
      }
    } else if (*pasep_cmd) {
      const auto t = ptab::tree_like_tableau_from_json(read_json_file(in_path));
      if (auto v = ptab::validate_tree_like_tableau(t); !v.empty()) {
        throw UsageError("not a tree-like tableau:" + violations_text(v));
      }
      const auto j = ptab::report::pasep_json(t);
      if (out.json()) {
        out.write(j);
      } else {
        const auto& m = j.at("moves");
        std::ostringstream csv;
        csv << "state,corners,activity,right_jumps,left_jumps,can_enter,can_exit\n"
            << j.at("state").get<std::string>() << ',' << j.at("corners") << ','
            << j.at("activity") << ',' << m.at("right_jumps").size() << ','
            << m.at("left_jumps").size() << ',' << m.at("can_enter") << ',' << m.at("can_exit")
            << '\n';
        out.write(csv.str());
      }
    } else if (*verify_cmd) {
      const auto report = ptab::run_verify();
      std::cout << report.str();
      return report.passed() ? 0 : kExitInternal;
    }
  } catch (const ptab::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const ptab::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
