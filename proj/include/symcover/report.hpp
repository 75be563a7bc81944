#pragma once

// Regenerates the published tables and renders reports as aligned text, CSV
// or JSON. JSON layouts are documented in docs/json_schema.md.

#include "symcover/analysis.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace symcover {

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& name);

/// A rendered-ready table: string cells for text/CSV plus a JSON document.
struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Serialized JSON document for Format::Json.
  std::string json;
};

std::string render(const Report& report, Format format);

std::string verdict_json(const Verdict& verdict);
std::string scan_json(const ScanReport& report);

Report verdict_report(const Verdict& verdict);
/// Totals, plus one row per kept verdict when per_type is set.
Report scan_report(const ScanReport& report, bool per_type);
Report ads_report(const AdsReport& ads, long v_bound, std::uint64_t prime_bound);

struct TableOptions {
  /// Adds the large rows (Table 1: k = 8, 9; ADS lists: v < 800).
  bool extended = false;
  /// Directory for scan checkpoints of extended rows.
  std::optional<std::filesystem::path> checkpoint_dir;
  /// Seed for Table 3 samples.
  std::uint64_t seed = 20240;
};

// Table 1: lambda = 1, 4 <= k <= 7 (k <= 9 extended), all types, p < 10^3.
struct Table1Row {
  ParameterSet params;
  ScanTotals totals;
};
std::vector<Table1Row> table1(const TableOptions& options = {});

// Table 2: v < 200 with the invariant ruling out every uniform cycle type,
// p < 10^3. `ads` marks the almost difference set family.
struct Table2Row {
  ParameterSet params;
  bool ads = false;
};
/// Every uniform type carries an HM certificate.
bool invariant_rules_out_all(const ScanReport& cyclic);
std::vector<Table2Row> table2(std::uint64_t prime_bound = 1000);

// Table 3: lambda in {1, 2}, lambda + 2 < k < 30, each p = 3 mod 4 with odd
// valuation in k - lambda. All types when there are at most 1000, otherwise
// a sample of 1000 distinct types.
std::vector<PDividesAResult> table3(const TableOptions& options = {});
constexpr std::size_t kTable3Sample = 1000;

// Tables 4-6: witness primes per (params, type).
struct WitnessRow {
  ParameterSet params;
  CycleType ct;
  std::vector<std::uint64_t> witnesses;
  /// Witnesses also delivered by a closed-form theorem.
  std::vector<std::uint64_t> closed_form;
};
/// [v] for lambda <= 5, lambda + 2 < k < 30, parity-allowed, p < 10^4.
std::vector<WitnessRow> table4(std::uint64_t prime_bound = 10000);
/// [n^t], t >= 2, same range as table4.
std::vector<WitnessRow> table5(std::uint64_t prime_bound = 10000);
/// [2^t2, 3^t3], t2, t3 >= 1, lambda = 1, 4 <= k <= 10, p < 10. The
/// invariant is evaluated whether or not |X| is a square.
std::vector<WitnessRow> table6(std::uint64_t prime_bound = 10);

/// Table ids 1-6; id 7 is the almost difference set lists.
Report reproduce_table(int id, const TableOptions& options = {});

}  // namespace symcover
