#include "symcover/analysis.hpp"
#include "symcover/cycletypes.hpp"
#include "symcover/errors.hpp"
#include "symcover/gseq.hpp"
#include "symcover/invariant.hpp"
#include "symcover/report.hpp"
#include "symcover/rules.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace symcover;

namespace {

// Python ints cross the boundary as decimal strings.
BigInt to_big(const py::int_& x) { return BigInt(py::str(x).cast<std::string>()); }
py::int_ from_big(const BigInt& x) { return py::int_(py::str(x.get_str())); }

Place place_of(std::optional<std::uint64_t> p) { return p ? Place::finite(*p) : Place::infinity(); }

ParameterSet params_of(long v, long k, long lambda) { return ParameterSet(v, k, lambda); }

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_symcover, m) {
  m.doc() = "Nonexistence checks for symmetric coverings with 2-regular excess";

  auto invalid = py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);
  py::register_exception<DegenerateMatrix>(m, "DegenerateMatrix", PyExc_ArithmeticError);
  py::register_exception<NonSquareDeterminant>(m, "NonSquareDeterminant", PyExc_ArithmeticError);
  py::register_exception<NotACovering>(m, "NotACovering", PyExc_ValueError);
  py::register_exception<ExcessNotTwoRegular>(m, "ExcessNotTwoRegular", PyExc_ValueError);
  (void)invalid;

  m.def("is_prime", [](const py::int_& n) { return is_prime(to_big(n)); });
  m.def("legendre", [](const py::int_& a, std::uint64_t p) { return legendre(to_big(a), p).value(); });
  m.def(
      "hilbert", [](const py::int_& a, const py::int_& b, std::optional<std::uint64_t> p) {
        return hilbert(to_big(a), to_big(b), place_of(p)).value();
      },
      py::arg("a"), py::arg("b"), py::arg("p") = py::none(), "(a, b)_p; p=None is the real place.");

  m.def("g_values", [](long a, std::size_t n) {
    const GSequence g = g_values(a, n);
    py::list out;
    for (std::size_t i = 1; i <= n; ++i) out.append(from_big(g[i]));
    return out;
  }, "[g_1(a), ..., g_n(a)]");
  m.def("det_B", [](long a, std::size_t n) { return from_big(det_B(a, n)); });

  m.def("params_for", [](long k, long lambda) -> std::optional<std::tuple<long, long, long>> {
    const auto p = params_for(k, lambda);
    if (!p) return std::nullopt;
    return std::make_tuple(p->v(), p->k(), p->lambda());
  });

  m.def("count_feasible", [](long v) { return from_big(count_feasible(v)); });
  m.def("enumerate_feasible", [](long v) {
    std::vector<std::vector<int>> out;
    for_each_feasible(v, [&](const CycleType& ct) { out.push_back(ct.parts()); });
    return out;
  });
  m.def("sample_feasible", [](long v, std::size_t count, std::uint64_t seed) {
    std::vector<std::vector<int>> out;
    for (const auto& ct : sample_feasible(v, count, seed)) out.push_back(ct.parts());
    return out;
  });
  m.def("parse_cycle_type", [](const std::string& text) { return parse_cycle_type(text).parts(); });

  m.def(
      "cp_x", [](long v, long k, long lambda, std::vector<int> parts, std::optional<std::uint64_t> p) {
        return cp_X(params_of(v, k, lambda), CycleType(std::move(parts)), place_of(p), true).value();
      },
      py::arg("v"), py::arg("k"), py::arg("lam"), py::arg("cycle_type"), py::arg("p") = py::none());
  m.def("det_x", [](long v, long k, long lambda, std::vector<int> parts) {
    return from_big(det_X(params_of(v, k, lambda), CycleType(std::move(parts))));
  });

  m.def(
      "analyze", [](long v, long k, long lambda, std::vector<int> parts, std::uint64_t prime_bound) {
        const ParameterSet params = params_of(v, k, lambda);
        const CycleType ct(std::move(parts));
        ct.check_feasible(params);
        std::string text;
        {
          py::gil_scoped_release release;
          text = verdict_json(run_all(params, ct, prime_bound));
        }
        return json_loads(text);
      },
      py::arg("v"), py::arg("k"), py::arg("lam"), py::arg("cycle_type"), py::arg("prime_bound") = 1000);

  m.def(
      "scan", [](long v, long k, long lambda, std::uint64_t prime_bound, std::optional<std::size_t> sample,
                 std::optional<std::uint64_t> seed, bool keep_verdicts) {
        ScanOptions options;
        options.prime_bound = prime_bound;
        options.sample_count = sample;
        options.seed = seed;
        options.keep_verdicts = keep_verdicts;
        std::string text;
        {
          py::gil_scoped_release release;
          text = scan_json(scan(params_of(v, k, lambda), options));
        }
        return json_loads(text);
      },
      py::arg("v"), py::arg("k"), py::arg("lam"), py::arg("prime_bound") = 1000, py::arg("sample") = py::none(),
      py::arg("seed") = py::none(), py::arg("keep_verdicts") = false);

  m.def(
      "cyclic_scan", [](long v, long k, long lambda, std::uint64_t prime_bound) {
        return json_loads(scan_json(cyclic_scan(params_of(v, k, lambda), prime_bound)));
      },
      py::arg("v"), py::arg("k"), py::arg("lam"), py::arg("prime_bound") = 1000);

  m.def(
      "ads_scan", [](long v_bound, std::uint64_t prime_bound) {
        AdsReport r;
        {
          py::gil_scoped_release release;
          r = ads_scan(v_bound, prime_bound);
        }
        return py::make_tuple(r.ruled_out, r.hamilton_only);
      },
      py::arg("v_bound"), py::arg("prime_bound") = 1000, "(ruled_out, hamilton_only)");

  m.def("verify_covering", [](const std::string& text) {
    std::istringstream in(text);
    return verify_covering(read_covering(in)).parts();
  }, "Covering text (header 'v k lambda', one block per line) -> excess cycle type.");
  m.def("verify_covering_file", [](const std::filesystem::path& path) {
    return verify_covering(read_covering(path)).parts();
  });

  m.def(
      "reproduce_table", [](int id, const std::string& format, bool extended, std::uint64_t seed) {
        TableOptions options;
        options.extended = extended;
        options.seed = seed;
        std::string text;
        {
          py::gil_scoped_release release;
          text = render(reproduce_table(id, options), parse_format(format));
        }
        return text;
      },
      py::arg("table_id"), py::arg("format") = "text", py::arg("extended") = false, py::arg("seed") = 20240);
}
