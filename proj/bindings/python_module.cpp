// Python module exposing the main operations.  Results cross the boundary as
// JSON strings (parsed into dicts by the thin helpers in sphorb/__init__.py
// semantics of the callers); exactness is preserved because rationals are
// emitted as integer strings, never floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "sphorb/conformance.hpp"
#include "sphorb/errors.hpp"
#include "sphorb/hasse.hpp"
#include "sphorb/hilbert.hpp"
#include "sphorb/json_io.hpp"
#include "sphorb/ktypes.hpp"

namespace py = pybind11;
using namespace sphorb;

namespace {

SymmetricPair pair_from(const std::string& family, long n, long p, long q) {
  PairParams prm;
  prm.family = family_from_slug(family);
  prm.n = static_cast<int>(n);
  prm.p = static_cast<int>(p);
  prm.q = static_cast<int>(q);
  return make_pair(prm);
}

SOSequence select_sequence(const SymmetricPair& pair,
                           const std::string& branch) {
  const std::vector<SOSequence> seqs = maximal_sequences(pair);
  if (branch.empty()) return seqs[0];
  for (const SOSequence& s : seqs)
    if (s.label == branch) return s;
  for (const SOSequence& s : seqs)
    if (s.label.rfind(branch, 0) == 0) return s;
  std::string known;
  for (const SOSequence& s : seqs) known += (known.empty() ? "" : ", ") + s.label;
  throw ParamError("unknown branch '" + branch + "' (have: " + known + ")");
}

std::string pair_info(const std::string& family, long n, long p, long q) {
  return pair_json(pair_from(family, n, p, q)).dump();
}

std::string sequences(const std::string& family, long n, long p, long q) {
  const SymmetricPair pair = pair_from(family, n, p, q);
  nlohmann::json arr = nlohmann::json::array();
  for (const SOSequence& s : maximal_sequences(pair))
    arr.push_back(sequence_json(pair, s));
  return arr.dump();
}

std::string signature(const std::string& family, long n, long p, long q,
                      const std::string& branch) {
  const SymmetricPair pair = pair_from(family, n, p, q);
  return signature_string(restrict_roots(pair, select_sequence(pair, branch)));
}

std::string restricted(const std::string& family, long n, long p, long q,
                       const std::string& branch) {
  const SymmetricPair pair = pair_from(family, n, p, q);
  return restricted_json(restrict_roots(pair, select_sequence(pair, branch)))
      .dump();
}

std::string geometry(const std::string& family, long n, long p, long q,
                     long i, const std::string& branch) {
  const SymmetricPair pair = pair_from(family, n, p, q);
  const SOSequence seq = select_sequence(pair, branch);
  return geometry_json(orbit_geometry(pair, seq, i)).dump();
}

std::string hilbert(const std::string& family, long n, long p, long q, long i,
                    long t, const std::string& branch) {
  const SymmetricPair pair = pair_from(family, n, p, q);
  const SOSequence seq = select_sequence(pair, branch);
  // Decimal string: the values outgrow machine integers quickly and the
  // library never rounds.
  return to_string(hilbert_value(pair, seq, i, t));
}

std::string hasse_dot(const std::string& family, long n, long p, long q) {
  return emit_dot(hasse_graph(pair_from(family, n, p, q)));
}

std::string hasse(const std::string& family, long n, long p, long q) {
  return hasse_json(hasse_graph(pair_from(family, n, p, q))).dump();
}

std::string conformance(bool full_grid, const std::string& family, long n,
                        long p, long q) {
  std::vector<PairParams> grid;
  if (full_grid) {
    grid = default_grid();
  } else {
    grid.push_back(pair_from(family, n, p, q).params());
  }
  return report_json(run_grid(grid)).dump();
}

}  // namespace

PYBIND11_MODULE(_sphorb, m) {
  m.doc() = "spherical nilpotent K-orbit calculator (C++ core)";

  py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError",
                                           PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<ContractError>(m, "ContractError",
                                        PyExc_RuntimeError);

  m.def("pair_info", &pair_info, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0,
        "JSON description of a symmetric pair");
  m.def("sequences", &sequences, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0,
        "JSON array of the maximal strongly orthogonal sequences");
  m.def("signature", &signature, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0, py::arg("branch") = "",
        "restricted root signature string, e.g. (a_2)^2(b_2)^1");
  m.def("restricted", &restricted, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0, py::arg("branch") = "",
        "JSON description of the restricted root system");
  m.def("geometry", &geometry, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0, py::arg("i") = 1,
        py::arg("branch") = "",
        "JSON report: dimension and degree of the i-th orbit closure");
  m.def("hilbert_value", &hilbert, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0, py::arg("i") = 1,
        py::arg("t") = 0, py::arg("branch") = "",
        "value of the Hilbert function at filtration level t");
  m.def("hasse_dot", &hasse_dot, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0,
        "closure-order diagram in DOT format");
  m.def("hasse", &hasse, py::arg("family"), py::arg("n") = 0,
        py::arg("p") = 0, py::arg("q") = 0,
        "closure-order diagram as JSON");
  m.def("conformance", &conformance, py::arg("full_grid") = true,
        py::arg("family") = "", py::arg("n") = 0, py::arg("p") = 0,
        py::arg("q") = 0,
        "published-table conformance report as JSON");
}
