#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <vector>

#include <json.hpp>

#include "ptab/bigint.hpp"
#include "ptab/exec.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

inline constexpr int kSamplerLengthCap = 5000;
// Largest n whose full completion table is written to the cache.
inline constexpr int kCompletionCacheCap = 200;

// Pinned generator; goldens depend on it.
using SamplerRng = std::mt19937_64;
inline constexpr const char* kSamplerRngName = "mt19937_64";
inline constexpr int kSamplerStreamVersion = 1;
// Samples are drawn in fixed-size blocks; block b uses its own engine seeded
// from seed_seq{seed_lo, seed_hi, b_lo, b_hi}. The output therefore does not
// depend on the number of worker threads.
inline constexpr std::uint64_t kSamplerBlockSize = 4096;

SamplerRng sampler_stream(std::uint64_t seed, std::uint64_t block);

// Uniform integer in [0, bound), bound > 0. Draws ceil(bits/64) words per
// attempt, least significant first, masks the top word and rejects values
// >= bound.
BigInt uniform_below(const BigInt& bound, SamplerRng& rng);

// f(l, u): number of tableaux of length n extending a length-l tableau
// that has u unrestricted rows. Every extension step turns a weight z^u
// into z(z+1)^u, so f(l, u) = (n-l)! (n-l+1)^u; entries are evaluated on
// demand rather than stored.
class CompletionTable {
 public:
  // Throws std::invalid_argument for n < 1, LimitExceeded above the cap.
  explicit CompletionTable(int n);

  int length() const { return n_; }
  // 1 <= l <= n, 1 <= u <= l.
  BigInt at(int prefix_length, int unrestricted) const;

  // {"n": n, "rows": [[f(l,1), ..., f(l,l)] for l = 1..n]} with decimal
  // strings. LimitExceeded above kCompletionCacheCap.
  nlohmann::json to_json() const;
  // Parses and checks every entry; std::invalid_argument on mismatch.
  static CompletionTable from_json(const nlohmann::json& j);

 private:
  int n_;
  std::vector<BigInt> factorials_;
};

// Reads <dir>/completion_n<n>.json when present (validated), otherwise
// builds the table and writes it there when n <= kCompletionCacheCap.
CompletionTable load_or_build_completion_table(int n, const std::filesystem::path& dir);

// Two exact routes for one extension step from length l with u
// unrestricted rows. inverse_transform draws one big integer below f(l, u)
// and walks the cumulative completion weights. per_row gives each
// unrestricted row an independent uniform value in [0, n-l]; the rows that
// draw 0 decide SOUTH versus WEST, the topmost 1 and the extra 1s, which
// factorizes the same law without big integers.
enum class SamplerRoute { per_row, inverse_transform };

// Exactly uniform sampler over P_n, growing from the length-1 tableau.
class TableauSampler {
 public:
  explicit TableauSampler(int n);

  int length() const { return table_.length(); }
  const CompletionTable& table() const { return table_; }

  PermutationTableau sample(SamplerRng& rng, SamplerRoute route = SamplerRoute::per_row) const;
  // Corner count of the tableau sample() would return for the same engine
  // state, without materializing the filling.
  int sample_corners(SamplerRng& rng, SamplerRoute route = SamplerRoute::per_row) const;

 private:
  CompletionTable table_;
};

struct SampleStats {
  int n = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double variance = 0;  // unbiased (count - 1)
  double skewness = 0;  // population central moments, standardized
  double kurtosis = 0;
  std::map<int, std::uint64_t> histogram;
};

SampleStats sample_corner_stats(int n, std::uint64_t count, std::uint64_t seed,
                                Exec exec = Exec::parallel,
                                SamplerRoute route = SamplerRoute::per_row);

}  // namespace ptab
