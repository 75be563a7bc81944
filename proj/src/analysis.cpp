#include "symcover/analysis.hpp"

#include "symcover/cycletypes.hpp"
#include "symcover/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>

namespace symcover {

std::optional<ParameterSet> params_for(long k, long lambda) {
  if (lambda < 1 || k <= lambda + 2) return std::nullopt;
  const long numerator = k * (k - 1) - 2;
  if (numerator % lambda != 0) return std::nullopt;
  const long v = numerator / lambda + 1;
  if (v <= k) return std::nullopt;
  return ParameterSet(v, k, lambda);
}

std::vector<ParameterSet> params_in_range(long lambda_max, long k_bound) {
  std::vector<ParameterSet> out;
  for (long lambda = 1; lambda <= lambda_max; ++lambda)
    for (long k = lambda + 3; k < k_bound; ++k)
      if (auto p = params_for(k, lambda)) out.push_back(*p);
  return out;
}

std::vector<ParameterSet> params_below(long v_bound) {
  std::vector<ParameterSet> out;
  // v - 1 >= k(k-1)/lambda - ... forces lambda < k < v, so both are below v_bound.
  for (long lambda = 1; lambda < v_bound; ++lambda)
    for (long k = lambda + 3; k < v_bound; ++k)
      if (auto p = params_for(k, lambda); p && p->v() < v_bound) out.push_back(*p);
  return out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("SYMCOVER_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

Outcome classify(const Verdict& verdict) {
  if (verdict.ruled_by(RuleId::SquareTest) || verdict.ruled_by(RuleId::BRC)) return Outcome::RuledByBRC;
  if (verdict.status == Status::RuledOut) return Outcome::RuledByHM;
  return Outcome::Open;
}

void ScanTotals::add(Outcome outcome) {
  ++total;
  switch (outcome) {
    case Outcome::RuledByBRC: ++brc; break;
    case Outcome::RuledByHM: ++hm; break;
    case Outcome::Open: ++open; break;
  }
}

ScanTotals& ScanTotals::operator+=(const ScanTotals& other) {
  total += other.total;
  brc += other.brc;
  hm += other.hm;
  open += other.open;
  return *this;
}

namespace {

constexpr std::size_t kCheckpointBatch = 50000;

struct Checkpoint {
  std::string key;
  std::size_t next = 0;
  ScanTotals totals;
};

std::string checkpoint_key(const ParameterSet& params, const ScanOptions& options) {
  std::ostringstream key;
  key << params.v() << ' ' << params.k() << ' ' << params.lambda() << ' ' << options.prime_bound;
  if (options.sample_count) key << " sample " << *options.sample_count << ' ' << options.seed.value_or(0);
  return key.str();
}

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path, const std::string& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Checkpoint cp;
  std::getline(in, cp.key);
  if (cp.key != key) return std::nullopt;
  if (!(in >> cp.next >> cp.totals.total >> cp.totals.brc >> cp.totals.hm >> cp.totals.open)) return std::nullopt;
  return cp;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << cp.key << '\n'
        << cp.next << ' ' << cp.totals.total << ' ' << cp.totals.brc << ' ' << cp.totals.hm << ' ' << cp.totals.open
        << '\n';
  }
  std::filesystem::rename(tmp, path);
}

// Evaluates types[begin, end) on `workers` threads; verdicts land by index.
void evaluate_range(const ParameterSet& params, const std::vector<CycleType>& types, std::size_t begin,
                    std::size_t end, std::uint64_t bound, const HasseScanner& scanner, unsigned workers,
                    std::vector<Verdict>* verdicts, ScanTotals& totals) {
  const std::size_t n = end - begin;
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n / 256, 1)));
  std::vector<ScanTotals> partial(workers);
  std::atomic<std::size_t> cursor{begin};
  constexpr std::size_t kChunk = 256;
  auto work = [&](unsigned id) {
    for (;;) {
      const std::size_t start = cursor.fetch_add(kChunk);
      if (start >= end) return;
      const std::size_t stop = std::min(end, start + kChunk);
      for (std::size_t i = start; i < stop; ++i) {
        Verdict v = run_all(params, types[i], bound, &scanner);
        partial[id].add(classify(v));
        if (verdicts) (*verdicts)[i] = std::move(v);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  for (const auto& p : partial) totals += p;
}

ScanReport scan_types(const ParameterSet& params, const std::vector<CycleType>& types, const ScanOptions& options) {
  ScanReport report{params, options.prime_bound, options.sample_count.has_value(), options.seed, {}, {}};
  if (types.empty()) return report;
  int largest = 0;
  for (const auto& ct : types) largest = std::max(largest, ct.largest());
  const HasseScanner scanner(params, options.prime_bound, static_cast<std::size_t>(largest));
  const unsigned workers = options.workers == 0 ? worker_count() : options.workers;

  if (!options.checkpoint) {
    std::vector<Verdict> verdicts;
    if (options.keep_verdicts) verdicts.resize(types.size(), Verdict{params, types.front(), Status::ExistsUnknown, {}, 0.0});
    evaluate_range(params, types, 0, types.size(), options.prime_bound, scanner, workers,
                   options.keep_verdicts ? &verdicts : nullptr, report.totals);
    report.verdicts = std::move(verdicts);
    return report;
  }

  const std::string key = checkpoint_key(params, options);
  Checkpoint cp = load_checkpoint(*options.checkpoint, key).value_or(Checkpoint{key, 0, {}});
  while (cp.next < types.size()) {
    const std::size_t stop = std::min(types.size(), cp.next + kCheckpointBatch);
    evaluate_range(params, types, cp.next, stop, options.prime_bound, scanner, workers, nullptr, cp.totals);
    cp.next = stop;
    save_checkpoint(*options.checkpoint, cp);
  }
  report.totals = cp.totals;
  return report;
}

}  // namespace

ScanReport scan(const ParameterSet& params, const ScanOptions& options) {
  std::vector<CycleType> types;
  if (options.sample_count) {
    if (!options.seed) throw InvalidParameters("sampled scans need a seed");
    types = sample_feasible(params.v(), *options.sample_count, *options.seed);
  } else {
    types = enumerate_feasible(params.v());
  }
  return scan_types(params, types, options);
}

std::vector<CycleType> uniform_types(long v) {
  std::vector<CycleType> out;
  for (long d = 2; d <= v; ++d)
    if (v % d == 0) out.emplace_back(std::vector<int>(static_cast<std::size_t>(v / d), static_cast<int>(d)));
  return out;
}

ScanReport cyclic_scan(const ParameterSet& params, std::uint64_t prime_bound) {
  ScanOptions options;
  options.prime_bound = prime_bound;
  options.workers = 1;
  return scan_types(params, uniform_types(params.v()), options);
}

bool no_cyclic_covering(const ScanReport& report) { return report.totals.open == 0; }

std::optional<ParameterSet> ads_params(long v) {
  if (v < 11 || v % 4 != 3) return std::nullopt;
  return ParameterSet(v, (v - 3) / 2, (v - 7) / 4);
}

AdsReport ads_scan(long v_bound, std::uint64_t prime_bound) {
  AdsReport out;
  for (long v = 11; v < v_bound; v += 4) {
    const ScanReport report = cyclic_scan(*ads_params(v), prime_bound);
    if (no_cyclic_covering(report)) {
      out.ruled_out.push_back(v);
      continue;
    }
    if (is_prime(static_cast<std::uint64_t>(v))) continue;
    const bool only_hamilton = report.totals.open == 1 && report.verdicts.back().status == Status::ExistsUnknown;
    if (only_hamilton) out.hamilton_only.push_back(v);
  }
  return out;
}

CoveringInstance read_covering(std::istream& in) {
  std::string line;
  std::optional<ParameterSet> params;
  std::vector<std::vector<int>> blocks;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw InvalidParameters("covering file: not an integer: " + token);
      values.push_back(value);
    }
    if (values.empty()) continue;
    if (!params) {
      if (values.size() != 3) throw InvalidParameters("covering file: header must be 'v k lambda'");
      params.emplace(values[0], values[1], values[2]);
      continue;
    }
    blocks.emplace_back(values.begin(), values.end());
  }
  if (!params) throw InvalidParameters("covering file: missing header");
  return {*params, std::move(blocks)};
}

CoveringInstance read_covering(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot open " + path.string());
  return read_covering(in);
}

namespace {

using CountMatrix = std::vector<std::vector<long>>;

// r(x, y): number of blocks containing both x and y (r(x, x) = replication).
CountMatrix pair_counts(const CoveringInstance& instance) {
  const long v = instance.params.v();
  const long k = instance.params.k();
  if (static_cast<long>(instance.blocks.size()) != v) {
    throw InvalidParameters("expected " + std::to_string(v) + " blocks, got " + std::to_string(instance.blocks.size()));
  }
  CountMatrix r(static_cast<std::size_t>(v), std::vector<long>(static_cast<std::size_t>(v), 0));
  for (const auto& block : instance.blocks) {
    if (static_cast<long>(block.size()) != k) throw InvalidParameters("block of size " + std::to_string(block.size()));
    const std::set<int> distinct(block.begin(), block.end());
    if (distinct.size() != block.size()) throw InvalidParameters("block repeats a point");
    for (int x : block)
      if (x < 0 || x >= v) throw InvalidParameters("point " + std::to_string(x) + " out of range");
    for (int x : block)
      for (int y : block) ++r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  return r;
}

}  // namespace

std::vector<std::vector<int>> excess_cycles(const CoveringInstance& instance) {
  const CountMatrix r = pair_counts(instance);
  const long v = instance.params.v();
  const long k = instance.params.k();
  const long lambda = instance.params.lambda();
  const auto at = [&](int x, int y) { return r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };

  for (int x = 0; x < v; ++x) {
    if (at(x, x) != k) throw NotACovering("point " + std::to_string(x) + " lies in " + std::to_string(at(x, x)) + " blocks");
    long degree = 0;
    for (int y = 0; y < v; ++y) {
      if (y == x) continue;
      if (at(x, y) < lambda) {
        throw NotACovering("pair {" + std::to_string(x) + "," + std::to_string(y) + "} covered " +
                           std::to_string(at(x, y)) + " times");
      }
      degree += at(x, y) - lambda;
    }
    if (degree != 2) throw ExcessNotTwoRegular("point " + std::to_string(x) + " has excess degree " + std::to_string(degree));
  }

  std::vector<bool> seen(static_cast<std::size_t>(v), false);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < v; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle{start};
    seen[static_cast<std::size_t>(start)] = true;
    int prev = -1;
    int cur = start;
    for (;;) {
      int next = -1;
      for (int y = 0; y < v && next < 0; ++y) {
        if (y == cur || at(cur, y) == lambda) continue;
        if (at(cur, y) - lambda == 2 || y != prev) next = y;
      }
      if (next == start || next < 0) break;
      if (seen[static_cast<std::size_t>(next)]) throw ExcessNotTwoRegular("excess walk revisits a point");
      seen[static_cast<std::size_t>(next)] = true;
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return cycles;
}

CycleType verify_covering(const CoveringInstance& instance) {
  const auto cycles = excess_cycles(instance);
  std::vector<int> parts;
  std::vector<int> order;
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) throw ExcessNotTwoRegular("excess has a loop");
    parts.push_back(static_cast<int>(cycle.size()));
    order.insert(order.end(), cycle.begin(), cycle.end());
  }
  const CycleType ct(parts);
  const IntMatrix x = build_X(instance.params, ct);
  const CountMatrix r = pair_counts(instance);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (x(i, j) != r[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])]) {
        throw ExcessNotTwoRegular("A A^T does not match X under the cycle ordering");
      }
  return ct;
}

double PDividesAResult::proportion() const {
  return survivors == 0 ? 0.0 : static_cast<double>(ruled) / static_cast<double>(survivors);
}

PDividesAResult p_divides_a_proportion(const ParameterSet& params, std::uint64_t p,
                                       std::optional<std::size_t> sample_count, std::uint64_t seed) {
  PDividesAResult out{params, p, sample_count.has_value(), std::nullopt};
  if (sample_count) out.seed = seed;
  const std::vector<CycleType> types =
      sample_count ? sample_feasible(params.v(), *sample_count, seed) : enumerate_feasible(params.v());
  for (const auto& ct : types) {
    ++out.examined;
    if (!brc_allows(params.v(), params.k(), params.lambda(), ct.t())) continue;
    ++out.survivors;
    const ClosedFormCheck check = thm_p_divides_a_at(params, ct, p);
    if (check.guard && check.fires) ++out.ruled;
  }
  return out;
}

}  // namespace symcover
