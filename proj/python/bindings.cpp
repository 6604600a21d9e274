#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ringlab/classify.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/theorems.hpp"

namespace py = pybind11;
using namespace ringlab;

namespace {

// pybind11 holders must own a mutable type, so the const ring is wrapped.
struct PyRing {
  RingPtr ring;
};

std::vector<std::string> literals(const FiniteRing& r, const ElementSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Elem e) { out.push_back(r.literal(e)); });
  return out;
}

py::dict verdict_dict(const FiniteRing& r, const Verdict& v) {
  py::dict d;
  d["outcome"] = std::string(to_string(v.outcome));
  d["witness"] = v.witness ? py::cast(r.literal(*v.witness)) : py::none();
  std::vector<std::string> ce;
  for (Elem e : v.counterexample) ce.push_back(r.literal(e));
  d["counterexample"] = ce;
  d["reason"] = v.reason;
  return d;
}

std::string records_json(const std::vector<ReportRecord>& recs) {
  std::ostringstream os;
  write_json_lines(os, recs);
  return os.str();
}

// The built-in corpus unless a file is named.
CorpusSpec load(const std::optional<std::string>& path) {
  return path ? load_corpus(*path) : default_corpus();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ideal classification over finite and arithmetic rings";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyRing>(m, "Ring")
      .def_property_readonly("size", [](const PyRing& p) { return p.ring->size(); })
      .def_property_readonly("recipe", [](const PyRing& p) { return p.ring->recipe(); })
      .def_property_readonly("reduced", [](const PyRing& p) { return p.ring->is_reduced(); })
      .def("units", [](const PyRing& p) { return literals(*p.ring, p.ring->units()); })
      .def("zero_divisors", [](const PyRing& p) { return literals(*p.ring, p.ring->zero_divisors()); })
      .def("__repr__", [](const PyRing& p) { return "Ring(" + p.ring->recipe() + ")"; });

  m.def("parse_ring", [](const std::string& s) { return PyRing{dsl::parse_ring(s)}; }, py::arg("expr"));

  m.def(
      "ideals",
      [](const PyRing& p) {
        std::vector<std::string> out;
        for (const auto& a : all_ideals(p.ring)) out.push_back(a.text());
        return out;
      },
      py::arg("ring"));

  m.def(
      "classify",
      [](const PyRing& p, const std::string& ideal, const std::string& mcs) {
        const RingPtr& r = p.ring;
        const Ideal a = dsl::parse_ideal(r, ideal);
        const MulClosedSet s = dsl::parse_mcs(r, mcs);
        py::dict d;
        d["ideal"] = a.text();
        d["prime"] = a.is_proper() && is_prime(a);
        d["r"] = verdict_dict(*r, is_r_ideal(a));
        d["pr"] = verdict_dict(*r, is_pr_ideal(a));
        d["S-r"] = verdict_dict(*r, is_S_r_ideal(a, s));
        d["S-prime"] = verdict_dict(*r, is_S_prime(a, s));
        return d;
      },
      py::arg("ring"), py::arg("ideal"), py::arg("mcs") = "");

  m.def(
      "theorem_ids",
      [] {
        std::vector<std::string> out;
        for (const auto& t : theorem_registry()) out.push_back(t.id);
        return out;
      });

  m.def(
      "verify",
      [](const std::vector<std::string>& ids, const std::optional<std::string>& corpus, unsigned jobs) {
        RunOptions opt;
        opt.jobs = jobs;
        py::gil_scoped_release release;
        return records_json(verify(ids, load(corpus), opt));
      },
      py::arg("theorems") = std::vector<std::string>{}, py::arg("corpus") = std::nullopt, py::arg("jobs") = 1);

  m.def(
      "hunt",
      [](const std::string& id, const std::vector<std::string>& drop, const std::optional<std::string>& corpus) {
        py::gil_scoped_release release;
        return records_json(counterexample_search(id, load(corpus), drop));
      },
      py::arg("theorem"), py::arg("drop"), py::arg("corpus") = std::nullopt);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int rc = cli::run(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"));
}
