#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hookdiff/cores.hpp"
#include "hookdiff/partition.hpp"
#include "hookdiff/qseries.hpp"
#include "hookdiff/verifier.hpp"
#include "hookdiff/walks.hpp"

namespace py = pybind11;
using namespace hookdiff;

namespace {

// Partitions cross the boundary as plain lists of parts.
Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::object big(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list triples(const QTSeries& s) {
  py::list out;
  for (const SeriesTerm& term : s.triples()) out.append(py::make_tuple(term.q, term.t, big(term.coeff)));
  return out;
}

py::dict report_dict(const VerificationReport& r, bool with_series) {
  const auto json = py::module_::import("json");
  return json.attr("loads")(report_to_json(r, with_series, true, -1)).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact hook-difference statistics, cores and q-series identities.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("parse", [](const std::string& text) { return parse_partition(text).parts(); }, py::arg("text"));
  m.def("conjugate", [](const std::vector<int>& p) { return conjugate(to_partition(p)).parts(); }, py::arg("partition"));
  m.def(
      "h_stat", [](const std::vector<int>& p, int alpha, int beta) { return h_stat(to_partition(p), {alpha, beta}); },
      py::arg("partition"), py::arg("alpha") = 1, py::arg("beta") = 1);
  m.def(
      "largest_repeated", [](const std::vector<int>& p, int mm) { return largest_repeated(to_partition(p), mm); },
      py::arg("partition"), py::arg("m"));
  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts());
    return out;
  }, py::arg("n"));

  m.def("m_core", [](const std::vector<int>& p, int mm) { return m_core(to_partition(p), mm).parts(); },
        py::arg("partition"), py::arg("m"));
  m.def(
      "quotient",
      [](const std::vector<int>& p, int mm) {
        const QuotientShift qs = quotient_and_shift(to_partition(p), mm);
        std::vector<std::vector<int>> q;
        for (const auto& part : qs.quotient) q.push_back(part.parts());
        return py::make_tuple(q, qs.shift);
      },
      py::arg("partition"), py::arg("m"));
  m.def(
      "compose",
      [](const std::vector<int>& core, const std::vector<std::vector<int>>& quotient, int mm) {
        std::vector<Partition> q;
        for (const auto& part : quotient) q.push_back(to_partition(part));
        return compose(to_partition(core), q, mm).parts();
      },
      py::arg("core"), py::arg("quotient"), py::arg("m"));
  m.def(
      "departure_words",
      [](const std::vector<int>& p, int mm) { return departure_words(to_partition(p), mm).words; },
      py::arg("partition"), py::arg("m"));
  m.def(
      "rebuild",
      [](const std::vector<std::string>& words, int mm) { return rebuild(DepartureWords{words}, mm).parts(); },
      py::arg("words"), py::arg("m"));

  m.def("carlitz_catalan", [](int n) {
    const Poly c = carlitz_catalan(n);
    py::list out;
    for (const BigInt& v : c.coeffs()) out.append(big(v));
    return out;
  }, py::arg("n"));
  m.def(
      "rhs_series",
      [](const std::string& id, const std::map<std::string, long long>& params, int qmax) {
        return triples(rhs_series(id, SeriesParams(params.begin(), params.end()), qmax));
      },
      py::arg("id"), py::arg("params") = std::map<std::string, long long>{}, py::arg("qmax"));

  m.def("identities", [] {
    std::vector<std::string> out;
    for (const auto& info : identity_registry()) out.push_back(info.id);
    return out;
  });
  m.def(
      "verify",
      [](const std::string& id, int qmax, const std::map<std::string, std::string>& params, bool with_series,
         int threads) {
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify(id, qmax, Params(params.begin(), params.end()), threads);
        }
        return report_dict(r, with_series);
      },
      py::arg("id"), py::arg("qmax"), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("with_series") = false, py::arg("threads") = 1);
  m.def(
      "conjecture",
      [](const std::string& name, int nmax, const std::map<std::string, std::string>& params, int threads) {
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = conjecture_scan(name, Params(params.begin(), params.end()), nmax, threads);
        }
        return report_dict(r, false);
      },
      py::arg("name"), py::arg("nmax"), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("threads") = 1);
}
