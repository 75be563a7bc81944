#include "symcover/report.hpp"

#include "symcover/cycletypes.hpp"
#include "symcover/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace symcover {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidParameters("unknown format '" + name + "' (text, csv, json)");
}

namespace {

std::string join(const std::vector<std::uint64_t>& values, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json params_json(const ParameterSet& p) { return {{"v", p.v()}, {"k", p.k()}, {"lambda", p.lambda()}}; }

json certificate_json(const Certificate& c) {
  json out = {{"rule", std::string(rule_name(c.rule))}};
  out["prime"] = c.prime ? json(*c.prime) : json(nullptr);
  out["sign"] = c.sign ? json(c.sign->value()) : json(nullptr);
  if (is_closed_form(c.rule)) out["corroborated"] = c.corroborated;
  return out;
}

json verdict_object(const Verdict& v) {
  json certs = json::array();
  for (const auto& c : v.certificates) certs.push_back(certificate_json(c));
  return {{"params", params_json(v.params)},
          {"cycle_type", v.ct.parts()},
          {"status", v.status == Status::RuledOut ? "ruled_out" : "exists_unknown"},
          {"certificates", certs},
          {"elapsed_seconds", v.elapsed_seconds}};
}

json totals_json(const ScanTotals& t) {
  return {{"total", t.total}, {"brc", t.brc}, {"hm", t.hm}, {"open", t.open}};
}

json scan_object(const ScanReport& r) {
  json out = {{"params", params_json(r.params)},
              {"prime_bound", r.prime_bound},
              {"sampled", r.sampled},
              {"seed", r.seed ? json(*r.seed) : json(nullptr)},
              {"totals", totals_json(r.totals)}};
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_object(v));
  out["verdicts"] = verdicts;
  return out;
}

std::string outcome_name(const Verdict& v) {
  switch (classify(v)) {
    case Outcome::RuledByBRC: return "BRC";
    case Outcome::RuledByHM: return "HM";
    case Outcome::Open: return "open";
  }
  return "?";
}

std::string certificates_text(const Verdict& v) {
  std::string out;
  for (const auto& c : v.certificates) {
    if (!out.empty()) out += ' ';
    out += rule_name(c.rule);
    if (c.prime) out += "@" + std::to_string(*c.prime);
    if (!c.corroborated) out += "(!)";
  }
  return out;
}

std::string fixed(double x, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// Closed-form witnesses for a type, evaluated without the square-determinant
// precondition.
std::vector<std::uint64_t> closed_form_primes(const ParameterSet& params, const CycleType& ct) {
  std::set<std::uint64_t> primes;
  auto take = [&](const std::optional<Verdict>& v) {
    if (!v) return;
    for (const auto& c : v->certificates)
      if (c.prime) primes.insert(*c.prime);
  };
  take(thm_p_divides_a(params, ct));
  if (ct.is_uniform() && params.v() % 2 == 1) {
    const long n = ct.parts().front();
    const long t = static_cast<long>(ct.t());
    if (t == 1) take(thm_hamilton(params));
    take(thm_uniform_nondiv(params, n, t));
    take(thm_uniform_div(params, n, t));
  }
  if (ct.largest() <= 3) {
    const long t2 = std::count(ct.parts().begin(), ct.parts().end(), 2);
    const long t3 = static_cast<long>(ct.t()) - t2;
    take(thm_23_p5(params, t2, t3));
    take(lemma_23_p2(params, t2, t3));
  }
  return {primes.begin(), primes.end()};
}

std::vector<std::uint64_t> primes_of(const std::vector<Certificate>& certs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : certs)
    if (c.prime) out.push_back(*c.prime);
  return out;
}

WitnessRow witness_row(const ParameterSet& params, const CycleType& ct, const HasseScanner& scanner) {
  const auto witnesses = primes_of(scanner.witnesses(ct));
  std::vector<std::uint64_t> closed;
  for (std::uint64_t p : closed_form_primes(params, ct))
    if (std::find(witnesses.begin(), witnesses.end(), p) != witnesses.end()) closed.push_back(p);
  return {params, ct, witnesses, closed};
}

Report witness_report(const std::string& title, const std::vector<WitnessRow>& rows) {
  Report r{title, {"v", "k", "lambda", "cycle type", "p", "closed form"}, {}, {}};
  json records = json::array();
  for (const auto& row : rows) {
    r.rows.push_back({std::to_string(row.params.v()), std::to_string(row.params.k()),
                      std::to_string(row.params.lambda()), row.ct.to_string(), join(row.witnesses),
                      join(row.closed_form)});
    records.push_back({{"params", params_json(row.params)},
                       {"cycle_type", row.ct.parts()},
                       {"witnesses", row.witnesses},
                       {"closed_form", row.closed_form}});
  }
  r.json = json{{"title", title}, {"rows", records}}.dump(2);
  return r;
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.json + "\n";
  std::ostringstream out;
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << csv_cell(report.columns[i]);
    out << '\n';
    for (const auto& row : report.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width(report.columns.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = report.columns[i].size();
  for (const auto& row : report.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << '\n';
  };
  if (!report.title.empty()) out << report.title << "\n\n";
  line(report.columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : report.rows) line(row);
  return out.str();
}

std::string verdict_json(const Verdict& verdict) { return verdict_object(verdict).dump(2); }
std::string scan_json(const ScanReport& report) { return scan_object(report).dump(2); }

Report verdict_report(const Verdict& v) {
  Report r{v.params.to_string() + " " + v.ct.to_list_string(), {"rule", "prime", "C_p", "corroborated"}, {}, {}};
  for (const auto& c : v.certificates) {
    r.rows.push_back({std::string(rule_name(c.rule)), c.prime ? std::to_string(*c.prime) : "-",
                      c.sign ? std::to_string(c.sign->value()) : "-",
                      is_closed_form(c.rule) ? (c.corroborated ? "yes" : "NO") : "-"});
  }
  r.title += v.status == Status::RuledOut ? ": ruled out" : ": not ruled out";
  r.json = verdict_json(v);
  return r;
}

Report scan_report(const ScanReport& s, bool per_type) {
  Report r;
  r.title = s.params.to_string() + ", p < " + std::to_string(s.prime_bound) +
            (s.sampled ? ", sample of " + std::to_string(s.totals.total) + " (seed " + std::to_string(*s.seed) + ")" : "");
  if (per_type) {
    r.columns = {"cycle type", "outcome", "certificates"};
    for (const auto& v : s.verdicts) r.rows.push_back({v.ct.to_list_string(), outcome_name(v), certificates_text(v)});
  } else {
    r.columns = {"cycle types", "ruled out by BRC", "ruled out by HM", "open"};
    r.rows.push_back({std::to_string(s.totals.total), std::to_string(s.totals.brc), std::to_string(s.totals.hm),
                      std::to_string(s.totals.open)});
  }
  json doc = scan_object(s);
  if (!per_type) doc.erase("verdicts");
  r.json = doc.dump(2);
  return r;
}

Report ads_report(const AdsReport& ads, long v_bound, std::uint64_t prime_bound) {
  Report r{"(v, (v-3)/2, (v-7)/4) cyclic coverings, v < " + std::to_string(v_bound) + ", p < " +
               std::to_string(prime_bound),
           {"list", "v"},
           {},
           {}};
  auto longs = [](const std::vector<long>& xs) {
    std::vector<std::uint64_t> out(xs.begin(), xs.end());
    return out;
  };
  r.rows.push_back({"no cyclic covering", join(longs(ads.ruled_out))});
  r.rows.push_back({"Hamilton cycle only", join(longs(ads.hamilton_only))});
  r.json = json{{"v_bound", v_bound},
                {"prime_bound", prime_bound},
                {"ruled_out", ads.ruled_out},
                {"hamilton_only", ads.hamilton_only}}
               .dump(2);
  return r;
}

std::vector<Table1Row> table1(const TableOptions& options) {
  std::vector<Table1Row> rows;
  const long k_max = options.extended ? 9 : 7;
  for (long k = 4; k <= k_max; ++k) {
    const ParameterSet params = *params_for(k, 1);
    ScanOptions scan_options;
    scan_options.prime_bound = 1000;
    scan_options.keep_verdicts = false;
    if (options.checkpoint_dir && k >= 8) {
      std::filesystem::create_directories(*options.checkpoint_dir);
      scan_options.checkpoint = *options.checkpoint_dir / ("table1_k" + std::to_string(k) + ".ckpt");
    }
    rows.push_back({params, scan(params, scan_options).totals});
  }
  return rows;
}

bool invariant_rules_out_all(const ScanReport& cyclic) {
  return !cyclic.verdicts.empty() &&
         std::all_of(cyclic.verdicts.begin(), cyclic.verdicts.end(),
                     [](const Verdict& v) { return v.ruled_by(RuleId::HM); });
}

std::vector<Table2Row> table2(std::uint64_t prime_bound) {
  std::vector<Table2Row> rows;
  for (const auto& params : params_below(200)) {
    if (!invariant_rules_out_all(cyclic_scan(params, prime_bound))) continue;
    const auto ads = ads_params(params.v());
    rows.push_back({params, ads && *ads == params});
  }
  return rows;
}

std::vector<PDividesAResult> table3(const TableOptions& options) {
  std::vector<PDividesAResult> rows;
  for (long lambda = 1; lambda <= 2; ++lambda) {
    for (long k = lambda + 3; k < 30; ++k) {
      const auto params = params_for(k, lambda);
      if (!params) continue;
      for (std::uint64_t p : prime_factors(params->a())) {
        if (p % 4 != 3 || params->lambda() % static_cast<long>(p) == 0) continue;
        if (p_factorize(BigInt(params->a()), p).valuation % 2 == 0) continue;
        const bool small = count_feasible(params->v()) <= BigInt(static_cast<unsigned long>(kTable3Sample));
        rows.push_back(small ? p_divides_a_proportion(*params, p)
                             : p_divides_a_proportion(*params, p, kTable3Sample, options.seed));
      }
    }
  }
  return rows;
}

std::vector<WitnessRow> table4(std::uint64_t prime_bound) {
  std::vector<WitnessRow> rows;
  for (const auto& params : params_in_range(5, 30)) {
    if (!brc_allows(params.v(), params.k(), params.lambda(), 1)) continue;
    const HasseScanner scanner(params, prime_bound);
    WitnessRow row = witness_row(params, CycleType({static_cast<int>(params.v())}), scanner);
    if (!row.witnesses.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<WitnessRow> table5(std::uint64_t prime_bound) {
  std::vector<WitnessRow> rows;
  for (const auto& params : params_in_range(5, 30)) {
    const HasseScanner scanner(params, prime_bound);
    for (const auto& ct : uniform_types(params.v())) {
      if (ct.t() < 2 || !brc_allows(params.v(), params.k(), params.lambda(), ct.t())) continue;
      WitnessRow row = witness_row(params, ct, scanner);
      if (!row.witnesses.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<WitnessRow> table6(std::uint64_t prime_bound) {
  std::vector<WitnessRow> rows;
  for (long k = 4; k <= 10; ++k) {
    const ParameterSet params = *params_for(k, 1);
    const HasseScanner scanner(params, prime_bound, 3);
    const long v = params.v();
    for (long t3 = 1; 3 * t3 + 2 <= v; ++t3) {
      if ((v - 3 * t3) % 2 != 0) continue;
      std::vector<int> parts(static_cast<std::size_t>((v - 3 * t3) / 2), 2);
      parts.insert(parts.end(), static_cast<std::size_t>(t3), 3);
      WitnessRow row = witness_row(params, CycleType(std::move(parts)), scanner);
      if (!row.witnesses.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

Report reproduce_table(int id, const TableOptions& options) {
  switch (id) {
    case 1: {
      Report r{"Table 1: lambda = 1, all cycle types, p < 1000",
               {"(v,k,lambda)", "cycle types", "ruled out by BRC", "ruled out by HM", "open"},
               {},
               {}};
      json records = json::array();
      for (const auto& row : table1(options)) {
        const auto& t = row.totals;
        r.rows.push_back({row.params.to_string(), std::to_string(t.total), std::to_string(t.brc),
                          std::to_string(t.hm), std::to_string(t.open)});
        records.push_back({{"params", params_json(row.params)}, {"totals", totals_json(t)}});
      }
      r.json = json{{"title", r.title}, {"rows", records}}.dump(2);
      return r;
    }
    case 2: {
      Report r{"Table 2: no cyclic covering by the invariant, v < 200, p < 1000", {"v", "k", "lambda", "ads"}, {}, {}};
      json records = json::array();
      for (const auto& row : table2()) {
        r.rows.push_back({std::to_string(row.params.v()), std::to_string(row.params.k()),
                          std::to_string(row.params.lambda()), row.ads ? "*" : ""});
        records.push_back({{"params", params_json(row.params)}, {"ads", row.ads}});
      }
      r.json = json{{"title", r.title}, {"rows", records}}.dump(2);
      return r;
    }
    case 3: {
      Report r{"Table 3: share of parity survivors ruled out with p | k - lambda (seed " +
                   std::to_string(options.seed) + ")",
               {"v", "k", "lambda", "p", "proportion", "examined", "mode"},
               {},
               {}};
      json records = json::array();
      for (const auto& row : table3(options)) {
        r.rows.push_back({std::to_string(row.params.v()), std::to_string(row.params.k()),
                          std::to_string(row.params.lambda()), std::to_string(row.prime), fixed(row.proportion(), 4),
                          std::to_string(row.examined), row.sampled ? "sampled" : "all"});
        records.push_back({{"params", params_json(row.params)},
                           {"prime", row.prime},
                           {"sampled", row.sampled},
                           {"seed", row.seed ? json(*row.seed) : json(nullptr)},
                           {"examined", row.examined},
                           {"survivors", row.survivors},
                           {"ruled", row.ruled},
                           {"proportion", row.proportion()}});
      }
      r.json = json{{"title", r.title}, {"rows", records}}.dump(2);
      return r;
    }
    case 4: return witness_report("Table 4: Hamilton cycle excess, p < 10000", table4());
    case 5: return witness_report("Table 5: uniform excess [n^t], t >= 2, p < 10000", table5());
    case 6: return witness_report("Table 6: excess [2^t2, 3^t3], lambda = 1, p < 10", table6());
    case 7: {
      const long bound = options.extended ? 800 : 400;
      return ads_report(ads_scan(bound), bound, 1000);
    }
    default: throw InvalidParameters("table id must be 1-7");
  }
}

}  // namespace symcover
