// symcover: nonexistence checks for symmetric coverings with 2-regular excess.

#include "symcover/analysis.hpp"
#include "symcover/cycletypes.hpp"
#include "symcover/errors.hpp"
#include "symcover/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace symcover;

namespace {

constexpr int kInvalid = 2;

ParameterSet require_params(long k, long lambda) {
  const auto params = params_for(k, lambda);
  if (!params) {
    throw InvalidParameters("no valid parameter set for k = " + std::to_string(k) +
                            ", lambda = " + std::to_string(lambda));
  }
  return *params;
}

void add_params(CLI::App* cmd, long& k, long& lambda) {
  cmd->add_option("--k", k, "block size")->required();
  cmd->add_option("--lambda", lambda, "pair coverage")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonexistence checks for symmetric (v,k,lambda)-coverings with 2-regular excess"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::uint64_t prime_bound = 1000;
  bool extended = false;
  app.add_option("--format", format_name, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  long k = 0;
  long lambda = 0;

  auto* analyze = app.add_subcommand("analyze", "run every rule on one cycle type, or on all of them");
  add_params(analyze, k, lambda);
  std::string cycle_type;
  analyze->add_option("--cycle-type", cycle_type, "e.g. 2,3,6 or 2^4,3");
  analyze->add_option("--prime-bound", prime_bound, "scan primes below this")->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "totals over all (or sampled) cycle types");
  add_params(scan_cmd, k, lambda);
  scan_cmd->add_option("--prime-bound", prime_bound)->capture_default_str();
  std::optional<std::size_t> sample_count;
  std::optional<std::uint64_t> seed;
  std::string checkpoint;
  scan_cmd->add_option("--sample", sample_count, "number of distinct cycle types to sample");
  scan_cmd->add_option("--seed", seed, "required with --sample");
  scan_cmd->add_option("--checkpoint", checkpoint, "progress file for resumable scans");
  scan_cmd->add_flag("--extended", extended, "allow scans with more than 10^5 cycle types");

  auto* cyclic = app.add_subcommand("cyclic", "uniform cycle types, the possible excesses of cyclic coverings");
  add_params(cyclic, k, lambda);
  cyclic->add_option("--prime-bound", prime_bound)->capture_default_str();

  auto* ads = app.add_subcommand("ads", "cyclic (v, (v-3)/2, (v-7)/4) coverings for v = 3 mod 4");
  long v_max = 400;
  ads->add_option("--v-max", v_max, "exclusive bound on v")->capture_default_str();
  ads->add_option("--prime-bound", prime_bound)->capture_default_str();
  ads->add_flag("--extended", extended, "allow v-max above 400");

  auto* verify = app.add_subcommand("verify", "check an explicit covering and report its excess");
  std::string file;
  verify->add_option("--file", file, "header 'v k lambda', then one block per line")->required();
  verify->add_option("--prime-bound", prime_bound)->capture_default_str();

  auto* table = app.add_subcommand("table", "regenerate a results table (1-6; 7 = ADS lists)");
  int table_id = 0;
  std::uint64_t table_seed = TableOptions{}.seed;
  std::string checkpoint_dir;
  table->add_option("--id", table_id)->required()->check(CLI::Range(1, 7));
  table->add_option("--seed", table_seed, "seed for sampled rows")->capture_default_str();
  table->add_option("--checkpoint-dir", checkpoint_dir, "checkpoints for extended rows");
  table->add_flag("--extended", extended, "include the large rows (Table 1 k = 8, 9; ADS v < 800)");

  auto* sample = app.add_subcommand("sample", "draw distinct v-feasible cycle types uniformly");
  long sample_v = 0;
  std::size_t count = 0;
  std::uint64_t sample_seed = 0;
  sample->add_option("--v", sample_v)->required();
  sample->add_option("--count", count)->required();
  sample->add_option("--seed", sample_seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    const Format format = parse_format(format_name);

    if (*analyze) {
      const ParameterSet params = require_params(k, lambda);
      if (!cycle_type.empty()) {
        const CycleType ct = parse_cycle_type(cycle_type);
        ct.check_feasible(params);
        std::cout << render(verdict_report(run_all(params, ct, prime_bound)), format);
      } else {
        ScanOptions options;
        options.prime_bound = prime_bound;
        std::cout << render(scan_report(scan(params, options), true), format);
      }
    } else if (*scan_cmd) {
      const ParameterSet params = require_params(k, lambda);
      ScanOptions options;
      options.prime_bound = prime_bound;
      options.sample_count = sample_count;
      options.seed = seed;
      options.keep_verdicts = format == Format::Json;
      if (!checkpoint.empty()) options.checkpoint = checkpoint;
      if (!sample_count && !extended && count_feasible(params.v()) > 100000) {
        throw InvalidParameters("more than 10^5 cycle types; pass --extended (and optionally --checkpoint)");
      }
      std::cout << render(scan_report(scan(params, options), format == Format::Json), format);
    } else if (*cyclic) {
      const ParameterSet params = require_params(k, lambda);
      std::cout << render(scan_report(cyclic_scan(params, prime_bound), true), format);
    } else if (*ads) {
      if (v_max > 400 && !extended) throw InvalidParameters("--v-max above 400 needs --extended");
      std::cout << render(ads_report(ads_scan(v_max, prime_bound), v_max, prime_bound), format);
    } else if (*verify) {
      const CoveringInstance instance = read_covering(std::filesystem::path(file));
      const CycleType ct = verify_covering(instance);
      const Verdict verdict = run_all(instance.params, ct, prime_bound);
      Report r = verdict_report(verdict);
      r.title = instance.params.to_string() + " covering verified, excess " + ct.to_list_string() +
                (verdict.status == Status::RuledOut ? "; WARNING: a rule fires on it" : "; no rule fires");
      std::cout << render(r, format);
      if (verdict.status == Status::RuledOut) return 1;
    } else if (*table) {
      TableOptions options;
      options.extended = extended;
      options.seed = table_seed;
      if (!checkpoint_dir.empty()) options.checkpoint_dir = checkpoint_dir;
      std::cout << render(reproduce_table(table_id, options), format);
    } else if (*sample) {
      if (sample_v < 2) throw InvalidParameters("--v must be at least 2");
      Report r{"", {"cycle type"}, {}, "["};
      bool first = true;
      for (const auto& ct : sample_feasible(sample_v, count, sample_seed)) {
        r.rows.push_back({ct.to_list_string()});
        r.json += (first ? "" : ",") + ct.to_list_string();
        first = false;
      }
      r.json += "]";
      std::cout << render(r, format);
    }
  } catch (const InvalidParameters& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kInvalid;
  } catch (const NotACovering& e) {
    std::cerr << "not a covering: " << e.what() << '\n';
    return 1;
  } catch (const ExcessNotTwoRegular& e) {
    std::cerr << "excess is not 2-regular: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
