// Python bindings for the doublekit core: session execution, the property
// suites, and direct access to the doubling construction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "doublekit/double_context.hpp"
#include "doublekit/double_functor.hpp"
#include "doublekit/session.hpp"
#include "doublekit/verifier.hpp"

namespace py = pybind11;
using namespace doublekit;

namespace {

py::tuple run_session_py(const std::string& text,
                         const std::string& include_dir) {
  SessionResult r = run_session_text(text, include_dir);
  return py::make_tuple(r.output, r.error, r.exit_code);
}

py::dict verify_py(const std::string& id, unsigned trials, uint64_t seed) {
  PropertyReport report = run_property(id, trials, seed);
  py::list failures;
  for (const PropertyFailure& f : report.failures) {
    py::dict d;
    d["trial"] = f.trial;
    d["seed"] = f.seed;
    d["replay"] = f.replay;
    failures.append(d);
  }
  py::dict notes;
  for (const auto& [label, count] : report.notes) notes[py::str(label)] = count;
  py::dict out;
  out["id"] = report.id;
  out["trials"] = report.trials;
  out["failures"] = failures;
  out["notes"] = notes;
  out["passed"] = report.pass();
  out["summary"] = report.summary_line();
  return out;
}

py::list catalog_py() {
  py::list entries;
  for (const PropertyEntry& e : property_catalog()) {
    py::dict d;
    d["id"] = e.id;
    d["kind"] = e.kind;
    d["summary"] = e.summary;
    entries.append(d);
  }
  return entries;
}

// Doubles the submodule spanned by `gens` (tuples in session syntax) inside
// the free module over Q[vars], returning the structural generator strings.
std::vector<std::string> double_module_gens(
    const std::vector<std::string>& vars,
    const std::vector<std::string>& gens) {
  PolyRing ring(vars);
  std::vector<ModuleElement> elements;
  std::size_t rank = 1;
  for (const std::string& g : gens) {
    ModuleElement e = ModuleElement::parse(ring, g);
    rank = e.rank();
    elements.push_back(std::move(e));
  }
  Submodule m(ring, rank, elements);
  DoubledModule doubled(DoubleContext(ring), m);
  return doubled.structural_generator_strings();
}

}  // namespace

PYBIND11_MODULE(_doublekit, m) {
  m.doc() = "Doubled-module computations over multivariate rational "
            "polynomial rings";

  m.def("run_session", &run_session_py, py::arg("text"),
        py::arg("include_dir") = "",
        "Execute session text; returns (output, error, exit_code).");
  m.def("run_session_file",
        [](const std::string& path) {
          SessionResult r = run_session_file(path);
          return py::make_tuple(r.output, r.error, r.exit_code);
        },
        py::arg("path"),
        "Execute a session file; returns (output, error, exit_code).");
  m.def("verify", &verify_py, py::arg("id"), py::arg("trials") = 20,
        py::arg("seed") = 0,
        "Run one randomized property suite; returns a report dict.");
  m.def("catalog", &catalog_py,
        "All cataloged property ids with kind and summary.");
  m.def("double_module_gens", &double_module_gens, py::arg("vars"),
        py::arg("gens"),
        "Structural generators of the double of the module spanned by "
        "`gens` inside the free module over Q[vars].");
}
