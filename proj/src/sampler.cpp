#include "ptab/sampler.hpp"

#include <fstream>
#include <stdexcept>

#include "ptab/enumerate.hpp"
#include "ptab/error.hpp"

namespace ptab {

namespace {

std::uint64_t uniform_below_u64(std::uint64_t bound, SamplerRng& rng) {
  if (bound == 1) return 0;
  const std::uint64_t max = bound - 1;
  const int bits = 64 - __builtin_clzll(max);
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

struct Draw {
  bool south = true;
  int k = 0;  // unrestricted rows after a WEST step
  int j = 0;
  std::vector<int> extra;

  ExtensionChoice choice() && {
    return south ? ExtensionChoice::south() : ExtensionChoice::west(j, std::move(extra));
  }
};

// With s = n - l, the completion weights are s^{u+1} (SOUTH) and
// C(u, k-1) s^k (WEST to k rows) up to the common factor (s-1)!, out of
// s (s+1)^u. Giving every unrestricted row an independent value in [0, s]
// realizes this law: no zero means SOUTH; otherwise the first zero carries
// the topmost 1, later nonzero rows get the extra 1s, and later zero rows
// become restricted. Given k the non-zero rows form a uniform (k-1)-subset,
// which is in bijection with the (j, extra_ones) pairs.
Draw draw_per_row(std::uint64_t s, int u, SamplerRng& rng) {
  Draw step;
  int zeros = 0;
  for (int i = 1; i <= u; ++i) {
    const bool zero = uniform_below_u64(s + 1, rng) == 0;
    if (zero) {
      ++zeros;
      if (step.j == 0) step.j = i;
    } else if (step.j != 0) {
      step.extra.push_back(i);
    }
  }
  if (zeros == 0) return step;
  step.south = false;
  step.k = u - zeros + 1;
  return step;
}

// Literal inverse transform: one big integer below f(l, u), walked over the
// cumulative weights f(l+1, u+1) and C(u, k-1) f(l+1, k); then j with weight
// C(u-j, k-j) and a uniform subset by selection sampling.
Draw draw_inverse_transform(const CompletionTable& table, int length, int u, SamplerRng& rng) {
  Draw step;
  BigInt r = uniform_below(table.at(length, u), rng);
  BigInt w = table.at(length + 1, u + 1);
  if (r < w) return step;
  r -= w;

  step.south = false;
  step.k = 0;
  for (int k = 1; k <= u; ++k) {
    w = binomial(static_cast<unsigned long>(u), static_cast<unsigned long>(k - 1)) *
        table.at(length + 1, k);
    if (r < w) {
      step.k = k;
      break;
    }
    r -= w;
  }
  if (step.k == 0) throw InternalError("sampler: completion weights do not sum to f(l, u)");

  const int k = step.k;
  BigInt rj = uniform_below(binomial(static_cast<unsigned long>(u), static_cast<unsigned long>(k - 1)), rng);
  for (int j = 1; j <= k; ++j) {
    const BigInt c = binomial(static_cast<unsigned long>(u - j), static_cast<unsigned long>(k - j));
    if (rj < c) {
      step.j = j;
      break;
    }
    rj -= c;
  }
  if (step.j == 0) throw InternalError("sampler: topmost weights do not sum to C(u, k-1)");

  int needed = k - step.j;
  for (int p = step.j + 1; p <= u && needed > 0; ++p) {
    const int remaining = u - p + 1;
    if (uniform_below_u64(static_cast<std::uint64_t>(remaining), rng) <
        static_cast<std::uint64_t>(needed)) {
      step.extra.push_back(p);
      --needed;
    }
  }
  return step;
}

Draw next_step(const CompletionTable& table, int length, int u, SamplerRng& rng,
               SamplerRoute route) {
  if (route == SamplerRoute::inverse_transform) {
    return draw_inverse_transform(table, length, u, rng);
  }
  return draw_per_row(static_cast<std::uint64_t>(table.length() - length), u, rng);
}

void check_length(int n) {
  if (n < 1) throw std::invalid_argument("sampler: n must be >= 1");
  if (n > kSamplerLengthCap) {
    throw LimitExceeded("sampler: n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(kSamplerLengthCap));
  }
}

}  // namespace

SamplerRng sampler_stream(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return SamplerRng(seq);
}

BigInt uniform_below(const BigInt& bound, SamplerRng& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound.fits_ulong_p()) return BigInt(uniform_below_u64(bound.get_ui(), rng));
  const BigInt max = bound - 1;
  const std::size_t bits = mpz_sizeinbase(max.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  std::vector<std::uint64_t> buf(words);
  BigInt v;
  for (;;) {
    for (auto& w : buf) w = rng();
    buf.back() &= top_mask;
    mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (v < bound) return v;
  }
}

CompletionTable::CompletionTable(int n) : n_(n) {
  check_length(n);
  factorials_.reserve(static_cast<std::size_t>(n) + 1);
  factorials_.emplace_back(1);
  for (int i = 1; i <= n; ++i) factorials_.push_back(factorials_.back() * i);
}

BigInt CompletionTable::at(int prefix_length, int unrestricted) const {
  if (prefix_length < 1 || prefix_length > n_ || unrestricted < 1 || unrestricted > prefix_length) {
    throw std::out_of_range("completion table: (" + std::to_string(prefix_length) + ", " +
                            std::to_string(unrestricted) + ") outside the table");
  }
  const int s = n_ - prefix_length;
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(s + 1),
                static_cast<unsigned long>(unrestricted));
  return factorials_[s] * p;
}

nlohmann::json CompletionTable::to_json() const {
  if (n_ > kCompletionCacheCap) {
    throw LimitExceeded("completion table: n = " + std::to_string(n_) +
                        " is above the cache cap " + std::to_string(kCompletionCacheCap));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int l = 1; l <= n_; ++l) {
    nlohmann::json row = nlohmann::json::array();
    for (int u = 1; u <= l; ++u) row.push_back(at(l, u).get_str());
    rows.push_back(std::move(row));
  }
  return {{"n", n_}, {"rows", std::move(rows)}};
}

CompletionTable CompletionTable::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer() || !j.contains("rows") ||
      !j.at("rows").is_array()) {
    throw std::invalid_argument("completion table JSON needs \"n\" and \"rows\"");
  }
  CompletionTable table(j.at("n").get<int>());
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != table.n_) {
    throw std::invalid_argument("completion table JSON: wrong number of rows");
  }
  for (int l = 1; l <= table.n_; ++l) {
    const auto& row = rows[static_cast<std::size_t>(l - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != l) {
      throw std::invalid_argument("completion table JSON: row " + std::to_string(l) +
                                  " has the wrong size");
    }
    for (int u = 1; u <= l; ++u) {
      const auto& cell = row[static_cast<std::size_t>(u - 1)];
      BigInt v;
      if (!cell.is_string() || v.set_str(cell.get<std::string>(), 10) != 0 || v != table.at(l, u)) {
        throw std::invalid_argument("completion table JSON: bad entry at (" + std::to_string(l) +
                                    ", " + std::to_string(u) + ")");
      }
    }
  }
  return table;
}

CompletionTable load_or_build_completion_table(int n, const std::filesystem::path& dir) {
  const auto file = dir / ("completion_n" + std::to_string(n) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("unreadable completion cache " + file.string() + ": " + e.what());
    }
    CompletionTable table = CompletionTable::from_json(j);
    if (table.length() != n) {
      throw std::invalid_argument("completion cache " + file.string() + " is for another n");
    }
    return table;
  }
  CompletionTable table(n);
  if (n <= kCompletionCacheCap) {
    std::filesystem::create_directories(dir);
    std::ofstream out(file);
    out << table.to_json().dump() << '\n';
  }
  return table;
}

TableauSampler::TableauSampler(int n) : table_(n) {}

PermutationTableau TableauSampler::sample(SamplerRng& rng, SamplerRoute route) const {
  const int n = table_.length();
  TableauNode node = unit_node();
  for (int length = 1; length < n; ++length) {
    Draw step = next_step(table_, length, node.u(), rng, route);
    const int k = step.k;
    const bool south = step.south;
    node = extend(node, std::move(step).choice());
    if (!south && node.u() != k) {
      throw InternalError("sampler: WEST step produced the wrong unrestricted count");
    }
  }
  return std::move(node.tableau);
}

int TableauSampler::sample_corners(SamplerRng& rng, SamplerRoute route) const {
  const int n = table_.length();
  int u = 1;
  bool last_south = true;
  int c = 0;
  for (int length = 1; length < n; ++length) {
    const Draw step = next_step(table_, length, u, rng, route);
    if (step.south) {
      ++u;
    } else {
      if (last_south) ++c;
      u = step.k;
    }
    last_south = step.south;
  }
  return c;
}

SampleStats sample_corner_stats(int n, std::uint64_t count, std::uint64_t seed, Exec exec,
                                SamplerRoute route) {
  if (count < 1) throw std::invalid_argument("sample_corner_stats: count must be >= 1");
  const TableauSampler sampler(n);
  std::vector<int> corners(count);
  const std::uint64_t blocks = (count + kSamplerBlockSize - 1) / kSamplerBlockSize;
  auto run_block = [&](std::uint64_t b) {
    SamplerRng rng = sampler_stream(seed, b);
    const std::uint64_t end = std::min(count, (b + 1) * kSamplerBlockSize);
    for (std::uint64_t i = b * kSamplerBlockSize; i < end; ++i) corners[i] = sampler.sample_corners(rng, route);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      run_block(static_cast<std::uint64_t>(b));
    }
  } else {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  }

  SampleStats stats;
  stats.n = n;
  stats.count = count;
  stats.seed = seed;
  BigInt power_sums[5];
  for (int c : corners) {
    ++stats.histogram[c];
    BigInt p = 1;
    for (auto& s : power_sums) {
      s += p;
      p *= c;
    }
  }
  const Rational N(power_sums[0]);
  const Rational mean = Rational(power_sums[1]) / N;
  const Rational raw2 = Rational(power_sums[2]) / N;
  const Rational raw3 = Rational(power_sums[3]) / N;
  const Rational raw4 = Rational(power_sums[4]) / N;
  const Rational m2 = raw2 - mean * mean;
  const Rational m3 = raw3 - 3 * mean * raw2 + 2 * mean * mean * mean;
  const Rational m4 = raw4 - 4 * mean * raw3 + 6 * mean * mean * raw2 - 3 * mean * mean * mean * mean;
  stats.mean = mean.get_d();
  if (count > 1) {
    const Rational unbiased = m2 * N / (N - 1);
    stats.variance = unbiased.get_d();
  }
  if (m2 > 0) {
    stats.skewness = m3.get_d() / std::pow(m2.get_d(), 1.5);
    const Rational kurt = m4 / (m2 * m2);
    stats.kurtosis = kurt.get_d();
  }
  return stats;
}

}  // namespace ptab
