#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "reflekt/egf.hpp"
#include "reflekt/errors.hpp"
#include "reflekt/factor.hpp"
#include "reflekt/group.hpp"
#include "reflekt/verify.hpp"

namespace py = pybind11;
namespace fs = std::filesystem;
using namespace reflekt;

namespace {

py::int_ to_py(const Integer& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

Rational from_py(const py::handle& value) {
  Rational q;
  if (q.set_str(py::str(value).cast<std::string>(), 10) != 0) throw ParseError("not a rational number: " + py::str(value).cast<std::string>());
  q.canonicalize();
  return q;
}

fs::path group_dir(const std::optional<fs::path>& dir) { return dir ? *dir : default_group_dir(); }

py::tuple key(const Multiset& l) {
  py::tuple t(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) t[i] = l[i];
  return t;
}

py::dict series_dict(const TruncatedEGF& egf) {
  py::dict out;
  for (const auto& [exps, c] : egf.terms()) out[key(exps)] = fraction(c);
  return out;
}

py::list orbits(const OrbitNumerology& num) {
  py::list out;
  for (std::size_t i = 0; i < num.p(); ++i) {
    const auto& o = num.orbits[i];
    py::dict d;
    d["label"] = i + 1;
    d["reflections"] = o.reflections;
    d["hyperplanes"] = o.hyperplanes;
    d["multiplicity"] = o.multiplicity ? py::object(py::int_(o.multiplicity)) : py::object(py::none());
    out.append(d);
  }
  return out;
}

// Orbit labels are 1-based on the Python side.
FactorPattern pattern_from(const std::vector<std::size_t>& labels, std::size_t p) {
  FactorPattern f;
  for (std::size_t label : labels) {
    if (label < 1 || label > p) throw DomainError("orbit label " + std::to_string(label) + " outside 1.." + std::to_string(p));
    f.labels.push_back(label - 1);
  }
  return f;
}

}  // namespace

PYBIND11_MODULE(_reflekt, m) {
  m.doc() = "Exact counts of reflection factorizations in complex reflection groups";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  auto data_error = py::register_exception<DataError>(m, "DataError", error.ptr());
  py::register_exception<EnumerationError>(m, "EnumerationError", data_error.ptr());
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", error.ptr());

  m.def("canonical_spec", [](const std::string& text) { return parse_group_spec(text).canonical(); });
  m.def("default_group_dir", [] { return default_group_dir(); });

  py::class_<ReflectionGroup>(m, "Group")
      .def(py::init([](const std::string& spec, std::optional<fs::path> dir, double budget) {
             py::gil_scoped_release release;
             return build_group(parse_group_spec(spec), group_dir(dir), budget);
           }),
           py::arg("spec"), py::arg("data_dir") = py::none(), py::arg("budget") = 1e8)
      .def_property_readonly("name", &ReflectionGroup::name)
      .def_property_readonly("rank", &ReflectionGroup::rank)
      .def_property_readonly("order", &ReflectionGroup::order)
      .def_property_readonly("reflections", [](const ReflectionGroup& g) { return g.numerology().reflections; })
      .def_property_readonly("hyperplanes", [](const ReflectionGroup& g) { return g.numerology().hyperplanes; })
      .def_property_readonly("coxeter_number", [](const ReflectionGroup& g) { return g.numerology().coxeter_number; })
      .def_property_readonly("orbits", [](const ReflectionGroup& g) { return orbits(g.numerology()); })
      .def_property_readonly("row",
                             [](const ReflectionGroup& g) -> std::optional<std::string> {
                               if (!g.numerology().multiplicities_known()) return std::nullopt;
                               return render_row(row_from_numerology(g.numerology()));
                             })
      .def(
          "count",
          [](const ReflectionGroup& g, const std::vector<std::size_t>& labels) {
            return to_py(count_dp(g, pattern_from(labels, g.numerology().p())));
          },
          py::arg("labels"), "Factorizations of the Coxeter element whose i-th factor lies in the given orbit.")
      .def(
          "counts",
          [](const ReflectionGroup& g, std::size_t max_degree) {
            FactorCountTable table;
            {
              py::gil_scoped_release release;
              table = count_all_patterns(g, max_degree);
            }
            py::dict out;
            for (const auto& [l, v] : table.entries()) out[key(l)] = to_py(v);
            return out;
          },
          py::arg("max_degree"))
      .def(
          "counts_by_length",
          [](const ReflectionGroup& g, std::size_t max_length) {
            py::list out;
            for (const auto& v : count_by_length(g, max_length)) out.append(to_py(v));
            return out;
          },
          py::arg("max_length"))
      .def(
          "series",
          [](const ReflectionGroup& g, std::size_t degree) {
            if (!g.numerology().multiplicities_known()) throw DomainError("orbit multiplicities n_i are not yet known");
            return series_dict(product_egf(g.numerology(), degree));
          },
          py::arg("degree"), "Product-formula coefficients keyed by exponent tuples.")
      .def(
          "verify_json",
          [](ReflectionGroup& g, std::optional<std::size_t> degree, std::optional<fs::path> chartable) {
            VerifyOptions options;
            options.degree = degree;
            options.chartable = chartable;
            py::gil_scoped_release release;
            return verify_group(g, options).to_json();
          },
          py::arg("degree") = py::none(), py::arg("chartable") = py::none())
      .def("hurwitz", [](const ReflectionGroup& g) {
        const HurwitzSummary s = hurwitz_summary(g);
        py::dict d;
        d["factorizations"] = s.factorizations;
        d["closure_size"] = s.closure_size;
        d["transitive"] = s.transitive;
        d["multiplicities_constant"] = s.multiplicities_constant;
        d["multiplicities"] = s.multiplicities;
        return d;
      })
      .def("__repr__", [](const ReflectionGroup& g) { return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def(
      "table",
      [](std::optional<fs::path> dir) {
        std::vector<TableLine> lines;
        {
          py::gil_scoped_release release;
          lines = reproduce_table(group_dir(dir));
        }
        py::list out;
        for (const auto& l : lines) {
          py::dict d;
          d["row"] = l.family;
          d["group"] = l.instance;
          d["symbolic"] = l.symbolic;
          d["expected"] = l.expected;
          d["computed"] = l.computed;
          d["match"] = l.match;
          out.append(d);
        }
        return out;
      },
      py::arg("data_dir") = py::none());

  m.def(
      "recover_json", [](const std::string& text) {
        py::list out;
        for (const auto& q : recover_multiset(TruncatedEGF::from_json(text))) out.append(fraction(q));
        return out;
      },
      py::arg("text"));

  m.def(
      "recover", [](const std::vector<py::object>& coefficients) {
        if (coefficients.empty()) throw DomainError("no coefficients given");
        TruncatedEGF series(1, coefficients.size() - 1);
        for (std::size_t k = 0; k < coefficients.size(); ++k) series.set_coefficient({k}, from_py(coefficients[k]));
        py::list out;
        for (const auto& q : recover_multiset(series)) out.append(fraction(q));
        return out;
      },
      py::arg("coefficients"), "Power-series coefficients c_0..c_D of prod (e^{a_i x} - 1).");

  m.def(
      "exp_minus_one_product",
      [](const std::vector<py::object>& a, std::size_t degree) {
        std::vector<Rational> values;
        for (const auto& x : a) values.push_back(from_py(x));
        const auto series = exp_minus_one_product(values, degree);
        py::list out;
        for (std::size_t k = 0; k <= degree; ++k) out.append(fraction(series.coefficient({k})));
        return out;
      },
      py::arg("a"), py::arg("degree"));
}
