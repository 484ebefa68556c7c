#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamwit/oracle.hpp"
#include "hamwit/sets.hpp"
#include "hamwit/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace hamwit;

namespace {

py::int_ to_py_int(const mpz_class& value) {
  PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

SetSpec spec_from_text(const std::string& text, const GraphParams& p) {
  SetSpec spec = parse_set_spec(text);
  validate_spec(spec, p);
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Witness sets with maximum induced degree 1 in Hamming graphs H(n,k)";
  m.attr("__version__") = "0.1.0";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<VerificationError>(m, "VerificationFailed", error);

  py::class_<GraphParams>(m, "GraphParams")
      .def(py::init([](int n, long long k) {
             if (k < 2 || k > 0x7fffffff) {
               throw Error(ErrorCode::InvalidParams, "k must be in [2, 2^31)");
             }
             GraphParams p{n, static_cast<Coord>(k)};
             p.validate();
             return p;
           }),
           "n"_a, "k"_a)
      .def_readonly("n", &GraphParams::n)
      .def_readonly("k", &GraphParams::k)
      .def("vertex_count", &GraphParams::vertex_count)
      .def("__repr__", [](const GraphParams& p) {
        return "GraphParams(n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) + ")";
      });

  // hamming core
  m.def("coord_sum", &coord_sum, "v"_a, "params"_a);
  m.def("last_nonzero", &last_nonzero, "v"_a);
  m.def("are_adjacent", &are_adjacent, "v"_a, "w"_a, "params"_a);
  m.def("neighbors", &neighbors, "v"_a, "params"_a);
  m.def("rank_of", &rank_of, "v"_a, "params"_a);
  m.def("unrank", &unrank, "rank"_a, "params"_a);
  m.def("vertex_to_string", &vertex_to_string, "v"_a, "params"_a);
  m.def("vertex_from_string", &vertex_from_string, "text"_a, "params"_a);

  // construction
  m.def("in_x", &in_x, "v"_a, "s"_a, "params"_a);
  m.def("in_y", &in_y, "v"_a, "s"_a, "t"_a, "params"_a);
  m.def("in_z", &in_z, "v"_a, "s"_a, "t"_a, "c"_a, "params"_a);
  m.def("in_w", &in_w, "v"_a, "params"_a);
  m.def(
      "in_set",
      [](const Vertex& v, const std::string& spec, const GraphParams& p) {
        return in_set(v, spec_from_text(spec, p), p);
      },
      "v"_a, "spec"_a, "params"_a);
  m.def("partner", &partner, "v"_a, "t1"_a, "t2"_a, "params"_a);

  m.def("size_alpha", [](const GraphParams& p) { return to_py_int(size_alpha(p)); }, "params"_a);
  m.def(
      "size_x", [](Coord s, const GraphParams& p) { return to_py_int(size_x(s, p)); }, "s"_a,
      "params"_a);
  m.def(
      "size_y",
      [](Coord s, Coord t, const GraphParams& p) { return to_py_int(size_y(s, t, p)); }, "s"_a,
      "t"_a, "params"_a);
  m.def(
      "size_z",
      [](Coord s, Coord t, int c, const GraphParams& p) { return to_py_int(size_z(s, t, c, p)); },
      "s"_a, "t"_a, "c"_a, "params"_a);
  m.def("size_w", [](const GraphParams& p) { return to_py_int(size_w(p)); }, "params"_a);

  py::class_<SetEnumerator>(m, "SetEnumerator")
      .def(py::init([](const std::string& spec, const GraphParams& p) {
             return SetEnumerator(spec_from_text(spec, p), p);
           }),
           "spec"_a, "params"_a)
      .def("__iter__", [](SetEnumerator& self) -> SetEnumerator& { return self; })
      .def("__next__", [](SetEnumerator& self) {
        const Vertex* v = self.next();
        if (v == nullptr) throw py::stop_iteration();
        return *v;
      });
  m.def(
      "enumerate_set",
      [](const std::string& spec, const GraphParams& p) {
        return SetEnumerator(spec_from_text(spec, p), p);
      },
      "spec"_a, "params"_a);
  m.def(
      "count_members",
      [](const std::string& spec, const GraphParams& p) {
        return count_members(spec_from_text(spec, p), p);
      },
      "spec"_a, "params"_a);

  // verifier
  py::class_<InducedSubgraphReport>(m, "InducedSubgraphReport")
      .def_readonly("params", &InducedSubgraphReport::params)
      .def_property_readonly(
          "spec", [](const InducedSubgraphReport& r) { return spec_to_string(r.spec); })
      .def_readonly("vertex_count", &InducedSubgraphReport::vertex_count)
      .def_readonly("edge_count", &InducedSubgraphReport::edge_count)
      .def_readonly("max_degree", &InducedSubgraphReport::max_degree)
      .def_readonly("degree_histogram", &InducedSubgraphReport::degree_histogram)
      .def("consistent", &InducedSubgraphReport::consistent)
      .def("__repr__", [](const InducedSubgraphReport& r) {
        return "InducedSubgraphReport(spec=" + spec_to_string(r.spec) +
               ", vertex_count=" + std::to_string(r.vertex_count) +
               ", edge_count=" + std::to_string(r.edge_count) +
               ", max_degree=" + std::to_string(r.max_degree) + ")";
      });

  py::class_<MatchingCertificate>(m, "MatchingCertificate")
      .def_readonly("pairs", &MatchingCertificate::pairs)
      .def_readonly("isolated", &MatchingCertificate::isolated);

  py::enum_<AdjacencyCase>(m, "AdjacencyCase")
      .value("GT", AdjacencyCase::GT)
      .value("LT", AdjacencyCase::LT)
      .value("EQ", AdjacencyCase::EQ);

  m.def("verify_w", &verify_w, "params"_a, "workers"_a = 1);
  m.def(
      "induced_degree",
      [](const Vertex& v, const std::string& spec, const GraphParams& p) {
        const SetSpec parsed = spec_from_text(spec, p);
        return induced_degree(
            v, [&](const Vertex& w) { return in_set(w, parsed, p); }, p);
      },
      "v"_a, "spec"_a, "params"_a);
  m.def("classify_adjacency", &classify_adjacency, "v"_a, "w"_a, "params"_a);
  m.def(
      "check_independence",
      [](const std::string& spec, const GraphParams& p, std::uint64_t budget) {
        Budget b(budget);
        return check_independence(spec_from_text(spec, p), p, b);
      },
      "spec"_a, "params"_a, "budget"_a = Budget::kDefaultProbes);
  m.def(
      "check_no_cross_edges",
      [](Coord s1, Coord t1, Coord s2, Coord t2, const GraphParams& p, std::uint64_t budget) {
        Budget b(budget);
        return check_no_cross_edges(s1, t1, s2, t2, p, b);
      },
      "s1"_a, "t1"_a, "s2"_a, "t2"_a, "params"_a, "budget"_a = Budget::kDefaultProbes);
  m.def(
      "check_unique_partner",
      [](Coord s1, Coord t1, Coord s2, Coord t2, const GraphParams& p, std::uint64_t budget) {
        Budget b(budget);
        return check_unique_partner(s1, t1, s2, t2, p, b);
      },
      "s1"_a, "t1"_a, "s2"_a, "t2"_a, "params"_a, "budget"_a = Budget::kDefaultProbes);

  py::class_<LemmaSweepResult>(m, "LemmaSweepResult")
      .def_readonly("quadruples_total", &LemmaSweepResult::quadruples_total)
      .def_readonly("quadruples_checked", &LemmaSweepResult::quadruples_checked)
      .def_readonly("probes", &LemmaSweepResult::probes)
      .def_readonly("passed", &LemmaSweepResult::passed)
      .def_readonly("counterexample", &LemmaSweepResult::counterexample);

  py::class_<ClassifySweepResult>(m, "ClassifySweepResult")
      .def_readonly("pairs_checked", &ClassifySweepResult::pairs_checked)
      .def_readonly("case_gt", &ClassifySweepResult::case_gt)
      .def_readonly("case_lt", &ClassifySweepResult::case_lt)
      .def_readonly("case_eq", &ClassifySweepResult::case_eq)
      .def_readonly("passed", &ClassifySweepResult::passed)
      .def_readonly("counterexample", &ClassifySweepResult::counterexample);

  py::class_<IndependenceSweepResult>(m, "IndependenceSweepResult")
      .def_readonly("sets_checked", &IndependenceSweepResult::sets_checked)
      .def_readonly("passed", &IndependenceSweepResult::passed)
      .def_readonly("counterexample", &IndependenceSweepResult::counterexample);

  m.def(
      "sweep_no_cross_edges",
      [](const GraphParams& p, std::uint64_t budget) {
        Budget b(budget);
        return sweep_no_cross_edges(p, b);
      },
      "params"_a, "budget"_a = Budget::kDefaultProbes);
  m.def(
      "sweep_unique_partner",
      [](const GraphParams& p, std::uint64_t budget) {
        Budget b(budget);
        return sweep_unique_partner(p, b);
      },
      "params"_a, "budget"_a = Budget::kDefaultProbes);
  m.def(
      "sweep_classify",
      [](const GraphParams& p, std::uint64_t budget) {
        Budget b(budget);
        return sweep_classify(p, b);
      },
      "params"_a, "budget"_a = Budget::kDefaultProbes);
  m.def(
      "sweep_independence",
      [](const GraphParams& p, std::uint64_t budget) {
        Budget b(budget);
        return sweep_independence(p, b);
      },
      "params"_a, "budget"_a = Budget::kDefaultProbes);

  // oracle
  m.def(
      "oracle_mis",
      [](const GraphParams& p, std::uint32_t cap) {
        const DenseGraph g = build_dense(p, cap);
        return exact_mis(g);
      },
      "params"_a, "cap"_a = kDenseCap);
  m.def(
      "oracle_f",
      [](const GraphParams& p, std::uint64_t budget, std::optional<unsigned> upper_bound_hint,
         std::uint32_t cap) {
        const DenseGraph g = build_dense(p, cap);
        const std::uint32_t alpha = exact_mis(g);
        return exact_f(g, alpha, budget, upper_bound_hint);
      },
      "params"_a, "budget"_a = kDefaultSubsetBudget, "upper_bound_hint"_a = std::nullopt,
      "cap"_a = kDenseCap);
}
