#include "symcover/analysis.hpp"
#include "symcover/cycletypes.hpp"
#include "symcover/errors.hpp"
#include "symcover/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace symcover;

namespace {

const std::filesystem::path kData = SYMCOVER_DATA_DIR;

CoveringInstance from_text(const std::string& text) {
  std::istringstream in(text);
  return read_covering(in);
}

std::vector<CycleType> survivors(const ScanReport& report) {
  std::vector<CycleType> out;
  for (const auto& v : report.verdicts)
    if (v.status == Status::ExistsUnknown) out.push_back(v.ct);
  return out;
}

}  // namespace

TEST_CASE("params_for") {
  CHECK(params_for(4, 1) == ParameterSet(11, 4, 1));
  CHECK(params_for(7, 2) == ParameterSet(21, 7, 2));
  CHECK_FALSE(params_for(5, 3));
  CHECK_FALSE(params_for(3, 1));
  CHECK_FALSE(params_for(6, 0));
  const auto sets = params_below(30);
  CHECK(std::find(sets.begin(), sets.end(), ParameterSet(23, 10, 4)) != sets.end());
  for (const auto& p : params_in_range(5, 30)) CHECK(p.v() == (p.k() * (p.k() - 1) - 2) / p.lambda() + 1);
}

TEST_CASE("scan totals for small rows") {
  ScanOptions options;
  auto r = scan(ParameterSet(11, 4, 1), options);
  CHECK(r.totals == ScanTotals{14, 7, 4, 3});
  CHECK(survivors(r).size() == 3);
  r = scan(ParameterSet(19, 5, 1), options);
  CHECK(r.totals == ScanTotals{105, 52, 43, 10});
}

TEST_CASE("scan totals do not depend on the number of workers") {
  const ParameterSet params(29, 6, 1);
  ScanOptions one;
  one.workers = 1;
  ScanOptions many;
  many.workers = 7;
  const auto a = scan(params, one);
  const auto b = scan(params, many);
  CHECK(a.totals == b.totals);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) CHECK(a.verdicts[i].ct == b.verdicts[i].ct);
}

TEST_CASE("sampled scans are reproducible and need a seed") {
  ScanOptions options;
  options.sample_count = 100;
  options.seed = 3;
  const auto a = scan(ParameterSet(41, 7, 1), options);
  const auto b = scan(ParameterSet(41, 7, 1), options);
  CHECK(a.totals == b.totals);
  CHECK(a.totals.total == 100);
  CHECK(a.sampled);
  options.seed.reset();
  CHECK_THROWS_AS(scan(ParameterSet(41, 7, 1), options), InvalidParameters);
}

TEST_CASE("checkpointed scans resume") {
  const auto dir = std::filesystem::temp_directory_path() / "symcover_ckpt_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ScanOptions options;
  options.checkpoint = dir / "scan.ckpt";
  const auto first = scan(ParameterSet(29, 6, 1), options);
  CHECK(first.totals == ScanTotals{847, 423, 393, 31});
  CHECK(first.verdicts.empty());
  // A finished checkpoint replays without rescanning.
  const auto again = scan(ParameterSet(29, 6, 1), options);
  CHECK(again.totals == first.totals);
  // A stale checkpoint for other parameters is ignored.
  const auto other = scan(ParameterSet(19, 5, 1), options);
  CHECK(other.totals == ScanTotals{105, 52, 43, 10});
  std::filesystem::remove_all(dir);
}

TEST_CASE("uniform types") {
  const auto u = uniform_types(12);
  REQUIRE(u.size() == 5);
  CHECK(u.front().to_list_string() == "[2,2,2,2,2,2]");
  CHECK(u.back() == CycleType({12}));
  CHECK(uniform_types(13).size() == 1);
}

TEST_CASE("cyclic_scan") {
  auto r = cyclic_scan(ParameterSet(23, 10, 4));
  CHECK(no_cyclic_covering(r));
  r = cyclic_scan(ParameterSet(51, 24, 11));
  CHECK(survivors(r) == std::vector<CycleType>{CycleType({51})});
  r = cyclic_scan(ParameterSet(75, 36, 17));
  CHECK(survivors(r) == std::vector<CycleType>{parse_cycle_type("25^3")});
}

TEST_CASE("ads_params") {
  CHECK(ads_params(23) == ParameterSet(23, 10, 4));
  CHECK_FALSE(ads_params(21));
  CHECK_FALSE(ads_params(7));
}

TEST_CASE("ads_scan below 250") {
  const AdsReport ads = ads_scan(250);
  CHECK(ads.ruled_out == std::vector<long>{23, 27, 63, 95, 123, 135, 171, 199, 207, 215, 231, 243});
  const std::vector<long> hamilton(ads.hamilton_only.begin(), ads.hamilton_only.end());
  for (long v : {15L, 51L, 87L, 111L, 143L, 159L}) CHECK(std::find(hamilton.begin(), hamilton.end(), v) != hamilton.end());
  CHECK(std::find(hamilton.begin(), hamilton.end(), 19L) == hamilton.end());
}

TEST_CASE("verify_covering on the example coverings") {
  const auto example = read_covering(kData / "covering_11_4_1_236.txt");
  CHECK(example.params == ParameterSet(11, 4, 1));
  CHECK(verify_covering(example) == CycleType({2, 3, 6}));
  const auto cyclic = read_covering(kData / "covering_11_4_1_cyclic.txt");
  CHECK(verify_covering(cyclic) == CycleType({11}));
  for (const auto& inst : {example, cyclic}) {
    const CycleType ct = verify_covering(inst);
    CHECK(run_all(inst.params, ct, 1000).status == Status::ExistsUnknown);
  }
}

TEST_CASE("verify_covering on a (lambda+4, lambda+2, lambda) family member") {
  // Complements of the edges of a hexagon: adjacent pairs are covered 3 times.
  auto inst = from_text("6 4 2\n2 3 4 5\n0 3 4 5\n0 1 4 5\n0 1 2 5\n0 1 2 3\n1 2 3 4\n");
  CHECK(verify_covering(inst) == CycleType({6}));
  // Complements of two triangles.
  inst = from_text("6 4 2\n2 3 4 5\n0 3 4 5\n1 3 4 5\n0 1 2 5\n0 1 2 3\n0 1 2 4\n");
  CHECK(verify_covering(inst) == CycleType({3, 3}));
}

TEST_CASE("verify_covering rejects bad input") {
  CHECK_THROWS_AS(verify_covering(from_text("11 4 1\n0 1 2\n")), InvalidParameters);
  CHECK_THROWS_AS(from_text("x y z\n"), InvalidParameters);
  auto inst = read_covering(kData / "covering_11_4_1_cyclic.txt");
  inst.blocks.pop_back();
  CHECK_THROWS_AS(verify_covering(inst), InvalidParameters);
  inst = read_covering(kData / "covering_11_4_1_cyclic.txt");
  inst.blocks[0] = {0, 0, 1, 2};
  CHECK_THROWS_AS(verify_covering(inst), InvalidParameters);
  inst = read_covering(kData / "covering_11_4_1_cyclic.txt");
  inst.blocks[0] = {0, 1, 2, 11};
  CHECK_THROWS_AS(verify_covering(inst), InvalidParameters);
  inst = read_covering(kData / "covering_11_4_1_cyclic.txt");
  inst.blocks[0] = {0, 1, 2, 6};
  CHECK_THROWS_AS(verify_covering(inst), NotACovering);
}

TEST_CASE("p | k - lambda proportions") {
  auto r = p_divides_a_proportion(ParameterSet(11, 4, 1), 3);
  CHECK(r.survivors == 7);
  CHECK(r.ruled == 1);
  CHECK(r.proportion() == doctest::Approx(1.0 / 7));
  r = p_divides_a_proportion(ParameterSet(28, 8, 2), 3);
  CHECK(r.proportion() == doctest::Approx(0.312).epsilon(0.002));
}

TEST_CASE("report rendering") {
  const auto v = run_all(ParameterSet(11, 4, 1), CycleType({2, 2, 7}), 1000);
  const std::string json = verdict_json(v);
  CHECK(json.find("\"ruled_out\"") != std::string::npos);
  CHECK(json.find("\"HM\"") != std::string::npos);
  const Report r = verdict_report(v);
  CHECK_FALSE(render(r, Format::Text).empty());
  CHECK(render(r, Format::Csv).find(',') != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), InvalidParameters);
}
