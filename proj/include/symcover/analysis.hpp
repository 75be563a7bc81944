#pragma once

// Whole-parameter-set analyses: scans over cycle types, cyclic coverings and
// almost difference sets, and verification of explicit coverings.

#include "symcover/params.hpp"
#include "symcover/rules.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace symcover {

/// (v, k, lambda) with v = (k(k-1)-2)/lambda + 1, when that is integral and
/// the result is a valid parameter set.
std::optional<ParameterSet> params_for(long k, long lambda);

/// Every valid parameter set with lambda in [1, lambda_max] and k < k_bound,
/// ordered by lambda then k.
std::vector<ParameterSet> params_in_range(long lambda_max, long k_bound);

/// Every valid parameter set with v < v_bound, ordered by lambda then k.
std::vector<ParameterSet> params_below(long v_bound);

/// Worker threads for scans: SYMCOVER_WORKERS if set and positive, else the
/// hardware concurrency.
unsigned worker_count();

/// How a cycle type was settled in a scan. Determinant failures (square test
/// or parity conditions) take precedence over the invariant.
enum class Outcome { RuledByBRC, RuledByHM, Open };
Outcome classify(const Verdict& verdict);

struct ScanTotals {
  std::uint64_t total = 0;
  std::uint64_t brc = 0;
  std::uint64_t hm = 0;
  std::uint64_t open = 0;

  void add(Outcome outcome);
  ScanTotals& operator+=(const ScanTotals& other);
  bool operator==(const ScanTotals&) const = default;
};

struct ScanOptions {
  std::uint64_t prime_bound = 1000;
  /// Sample this many distinct types instead of enumerating; needs seed.
  std::optional<std::size_t> sample_count;
  std::optional<std::uint64_t> seed;
  bool keep_verdicts = true;
  /// 0 picks worker_count().
  unsigned workers = 0;
  /// Progress file; an interrupted scan with the same settings resumes from
  /// it. Verdicts are not kept for checkpointed scans.
  std::optional<std::filesystem::path> checkpoint;
};

struct ScanReport {
  ParameterSet params;
  std::uint64_t prime_bound = 0;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
  ScanTotals totals;
  /// In enumeration (or sample) order.
  std::vector<Verdict> verdicts;
};

/// run_all over every v-feasible cycle type, or a seeded sample of them.
ScanReport scan(const ParameterSet& params, const ScanOptions& options = {});

/// Uniform cycle types [d^{v/d}] for each divisor d >= 2 of v, by d.
std::vector<CycleType> uniform_types(long v);

/// scan restricted to uniform cycle types, the only excesses a cyclic
/// covering can have.
ScanReport cyclic_scan(const ParameterSet& params, std::uint64_t prime_bound = 1000);
/// True when every uniform type is ruled out.
bool no_cyclic_covering(const ScanReport& report);

/// Parameters (v, (v-3)/2, (v-7)/4) of a cyclic covering equivalent to an
/// almost difference set; nullopt unless v = 3 mod 4 and v >= 11.
std::optional<ParameterSet> ads_params(long v);

struct AdsReport {
  /// v for which no cyclic covering exists.
  std::vector<long> ruled_out;
  /// Composite v for which only the Hamilton cycle [v] survives.
  std::vector<long> hamilton_only;
};

/// Runs cyclic_scan on ads_params(v) for every v < v_bound with v = 3 mod 4.
AdsReport ads_scan(long v_bound, std::uint64_t prime_bound = 1000);

struct CoveringInstance {
  ParameterSet params;
  std::vector<std::vector<int>> blocks;
};

/// Plain text: a header line "v k lambda", then one block per line as
/// space-separated 0-based points. Blank lines and '#' comments are skipped.
/// Throws InvalidParameters on malformed input.
CoveringInstance read_covering(std::istream& in);
CoveringInstance read_covering(const std::filesystem::path& path);

/// The cycles of the excess multigraph, each as its vertices in walking
/// order, sorted by length.
std::vector<std::vector<int>> excess_cycles(const CoveringInstance& instance);

/// Checks the covering and returns its excess cycle type. Also checks that
/// A A^T equals build_X once points are relabelled along the excess cycles.
/// Throws InvalidParameters for malformed blocks, NotACovering when a point
/// or pair is under-covered, ExcessNotTwoRegular otherwise.
CycleType verify_covering(const CoveringInstance& instance);

/// Proportion of the parity-surviving cycle types of a sample (or of all
/// types) that the p | k - lambda theorem rules out at p.
struct PDividesAResult {
  ParameterSet params;
  std::uint64_t prime = 0;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t examined = 0;
  std::uint64_t survivors = 0;
  std::uint64_t ruled = 0;
  /// ruled / survivors, 0 when nothing survives.
  double proportion() const;
};

PDividesAResult p_divides_a_proportion(const ParameterSet& params, std::uint64_t p,
                                       std::optional<std::size_t> sample_count = std::nullopt,
                                       std::uint64_t seed = 0);

}  // namespace symcover
