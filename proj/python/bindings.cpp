#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trimult/errors.hpp"
#include "trimult/residues.hpp"
#include "trimult/rules.hpp"
#include "trimult/serialize.hpp"
#include "trimult/sieve.hpp"
#include "trimult/solver.hpp"

namespace py = pybind11;
using namespace trimult;

namespace {

py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict solution(const Solution& s) {
  py::dict d;
  d["n"] = s.n;
  d["t"] = to_py(s.t);
  d["xi"] = to_py(s.xi);
  d["T_t"] = to_py(s.T_t);
  d["T_xi"] = to_py(s.T_xi);
  return d;
}

py::list solutions(const std::vector<Solution>& v) {
  py::list out;
  for (const auto& s : v) out.append(solution(s));
  return out;
}

// JSON documents cross the boundary as text; big integers stay decimal strings.
std::string dumps(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "trimult core bindings";

  // Translators run newest first: ValidationError maps to ValueError before
  // the generic Error handler sees it.
  const auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<SolverError>(m, "SolverError", error);
  py::register_exception<BrokenPairing>(m, "BrokenPairing", error);
  py::register_exception<DivergenceError>(m, "DivergenceError", error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "spec_json", [](std::uint64_t k) { return dumps(to_json(make_spec(Multiplier(k)))); }, py::arg("k"));
  m.def(
      "sequence",
      [](std::uint64_t k, std::size_t count) { return solutions(sequence(make_spec(Multiplier(k)), count)); },
      py::arg("k"), py::arg("count"));
  m.def(
      "verify_solution",
      [](std::uint64_t k, const py::int_& t, const py::int_& xi) {
        return verify_solution(Multiplier(k), Nat(py::str(t).cast<std::string>()),
                               Nat(py::str(xi).cast<std::string>()));
      },
      py::arg("k"), py::arg("t"), py::arg("xi"));
  m.def(
      "observed_residues",
      [](std::uint64_t k) { return observed_residues(make_spec(Multiplier(k))).mu; }, py::arg("k"));
  m.def(
      "candidate_residues", [](std::uint64_t k) { return candidate_residues(Multiplier(k)); }, py::arg("k"));
  m.def(
      "classify_json",
      [](std::uint64_t k, unsigned n_max) { return dumps(to_json(predict_residues(Multiplier(k), n_max))); },
      py::arg("k"), py::arg("n_max") = 12);
  m.def(
      "combination_m",
      [](unsigned n, unsigned nu) -> py::object {
        const auto c = combination_m(n, nu);
        if (!c) return py::none();
        return py::make_tuple(c->m, c->form == Form::minus ? "minus" : "plain");
      },
      py::arg("n"), py::arg("nu"));
  m.def(
      "naive_search",
      [](std::uint64_t k, std::uint64_t limit) {
        const auto r = [&] {
          py::gil_scoped_release release;
          return naive_search(Multiplier(k), limit);
        }();
        return py::make_tuple(solutions(r.solutions), r.candidates);
      },
      py::arg("k"), py::arg("limit"));
  m.def(
      "sieve_search",
      [](std::uint64_t k, std::uint64_t limit) {
        const Multiplier mk(k);
        const ResidueSet rs = observed_residues(make_spec(mk));
        const auto r = [&] {
          py::gil_scoped_release release;
          return sieve_search(mk, limit, rs);
        }();
        return py::make_tuple(solutions(r.solutions), r.candidates);
      },
      py::arg("k"), py::arg("limit"));
  m.def(
      "bench_json",
      [](std::uint64_t k, std::uint64_t limit, unsigned reps) {
        const BenchReport rep = [&] {
          py::gil_scoped_release release;
          return bench(Multiplier(k), limit, reps);
        }();
        return dumps(to_json(rep));
      },
      py::arg("k"), py::arg("limit"), py::arg("reps") = 3);
}
