#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supermult/multiplier.hpp"
#include "supermult/oracle.hpp"
#include "supermult/presentation.hpp"
#include "supermult/verify.hpp"
#include "supermult/witt.hpp"

namespace py = pybind11;
using namespace supermult;

namespace {

witt::MultiDegree make_alpha(const std::vector<long long>& entries) {
  return witt::MultiDegree{entries};
}

Scalar scalar_from_py(const py::handle& value) {
  if (py::isinstance<py::int_>(value)) return Scalar(value.cast<long>());
  return parse_scalar(value.cast<std::string>());
}

superalg::StructLSA build_algebra(
    const std::vector<std::pair<std::string, int>>& basis,
    const std::vector<std::tuple<int, int, std::vector<std::pair<int, py::object>>>>& brackets) {
  std::vector<superalg::BasisElement> elements;
  for (const auto& [name, parity] : basis) elements.push_back({name, parity});
  std::vector<superalg::BracketEntry> entries;
  for (const auto& [i, j, coeffs] : brackets) {
    superalg::BracketEntry e{i, j, {}};
    for (const auto& [k, c] : coeffs) e.coeffs.emplace_back(k, scalar_from_py(c));
    entries.push_back(std::move(e));
  }
  return superalg::StructLSA(std::move(elements), std::move(entries));
}

py::dict oracle_run_dict(const oracle::OracleRun& run) {
  py::dict out;
  out["dims"] = run.dims;
  out["truncation_degree"] = run.truncation_degree;
  out["universe_size"] = run.universe_size;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nilpotent multipliers, capability certificates and free Lie superalgebra "
            "invariants of finite-dimensional nilpotent Lie superalgebras";

  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<SuperDim>(m, "SuperDim")
      .def(py::init<long long, long long>(), py::arg("even") = 0, py::arg("odd") = 0)
      .def_readonly("even", &SuperDim::even)
      .def_readonly("odd", &SuperDim::odd)
      .def("total", &SuperDim::total)
      .def("as_tuple",
           [](const SuperDim& d) { return py::make_tuple(d.even, d.odd); })
      .def("__eq__",
           [](const SuperDim& d, const py::object& other) {
             if (py::isinstance<SuperDim>(other)) return d == other.cast<SuperDim>();
             if (py::isinstance<py::tuple>(other) || py::isinstance<py::list>(other)) {
               auto pair = other.cast<std::pair<long long, long long>>();
               return d.even == pair.first && d.odd == pair.second;
             }
             return false;
           })
      .def("__repr__", &SuperDim::str);

  // counting
  m.def("moebius", &witt::moebius, py::arg("k"));
  m.def(
      "witt_rank",
      [](const std::vector<long long>& alpha) { return witt::witt_rank(make_alpha(alpha)); },
      py::arg("alpha"));
  m.def(
      "super_witt_rank",
      [](int even, int odd, const std::vector<long long>& alpha) {
        return witt::super_witt_rank(witt::ParitySignature{even, odd}, make_alpha(alpha));
      },
      py::arg("even"), py::arg("odd"), py::arg("alpha"));
  m.def(
      "graded_dims",
      [](int even, int odd, long long r) {
        auto d = witt::graded_dims(witt::ParitySignature{even, odd}, r);
        py::dict out;
        out["dim"] = d.dim;
        out["dim_plus"] = d.dim_plus;
        out["dim_minus"] = d.dim_minus;
        out["sdim"] = d.sdim;
        return out;
      },
      py::arg("even"), py::arg("odd"), py::arg("r"));
  m.def(
      "layer_dim",
      [](int even, int odd, long long n) {
        return witt::layer_dim(witt::ParitySignature{even, odd}, n);
      },
      py::arg("even"), py::arg("odd"), py::arg("n"));

  // free Lie superalgebra enumeration
  m.def(
      "enumerate_regular",
      [](int even, int odd, int length) {
        auto alphabet = freelie::GradedAlphabet::canonical(even, odd);
        std::vector<std::string> out;
        for (const auto& mono : freelie::enumerate_regular(alphabet, length)) {
          out.push_back(mono.str(alphabet));
        }
        return out;
      },
      py::arg("even"), py::arg("odd"), py::arg("length"));
  m.def(
      "enumerate_s_regular",
      [](int even, int odd, int length) {
        auto alphabet = freelie::GradedAlphabet::canonical(even, odd);
        std::vector<std::string> out;
        for (const auto& mono : freelie::enumerate_s_regular(alphabet, length)) {
          out.push_back(mono.str(alphabet));
        }
        return out;
      },
      py::arg("even"), py::arg("odd"), py::arg("length"));

  // structure-constant algebras
  py::class_<superalg::StructLSA>(m, "StructLSA")
      .def(py::init(&build_algebra), py::arg("basis"), py::arg("brackets"))
      .def_static("abelian", &superalg::StructLSA::abelian, py::arg("even"), py::arg("odd"))
      .def_static("heisenberg_even", &superalg::StructLSA::heisenberg_even, py::arg("m"),
                  py::arg("n"))
      .def_static("heisenberg_odd", &superalg::StructLSA::heisenberg_odd, py::arg("m"))
      .def_static("direct_sum", &superalg::StructLSA::direct_sum, py::arg("a"), py::arg("b"))
      .def("dims", &superalg::StructLSA::dims)
      .def("validate", &superalg::StructLSA::validate)
      .def("validate_report",
           [](const superalg::StructLSA& a) -> py::object {
             auto report = a.validate_report();
             if (!report) return py::none();
             return py::cast(*report);
           })
      .def("nilpotency_class",
           [](const superalg::StructLSA& a) { return superalg::nilpotency_class(a); })
      .def("derived_dims",
           [](const superalg::StructLSA& a) { return superalg::derived_subalgebra(a).dims; })
      .def("lower_central_dims",
           [](const superalg::StructLSA& a, int k) { return superalg::lower_central(a, k).dims; })
      .def("upper_central_dims",
           [](const superalg::StructLSA& a, int k) { return superalg::upper_central(a, k).dims; })
      .def("center_dims", [](const superalg::StructLSA& a) { return superalg::center(a).dims; })
      .def("classify_dim1_derived",
           [](const superalg::StructLSA& a) { return superalg::classify_dim1_derived(a).str(); });

  // closed forms
  m.def(
      "abelian_multiplier",
      [](int even, int odd, int c) { return multiplier::abelian_multiplier(even, odd, c).dims; },
      py::arg("even"), py::arg("odd"), py::arg("c"));
  m.def("abelian_multiplier2", &multiplier::abelian_multiplier2, py::arg("even"), py::arg("odd"));
  m.def("tensor_abelian",
        py::overload_cast<int, int, int, int>(&multiplier::tensor_abelian), py::arg("m"),
        py::arg("n"), py::arg("r"), py::arg("s"));
  m.def("heisenberg_even_multiplier2", &multiplier::heisenberg_even_multiplier2, py::arg("m"),
        py::arg("n"));
  m.def("heisenberg_odd_multiplier2", &multiplier::heisenberg_odd_multiplier2, py::arg("m"));
  m.def(
      "multiplier2_closed",
      [](const std::string& family) {
        auto result = multiplier::multiplier2_closed(multiplier::parse_family(family));
        return py::make_tuple(result.dims, result.provenance);
      },
      py::arg("family"));
  m.def(
      "multiplier2_upper_bound",
      [](int k, int l, int r, int s) {
        auto bound = multiplier::multiplier2_upper_bound(k, l, r, s);
        py::dict out;
        out["fine"] = bound.fine;
        out["coarse"] = bound.coarse;
        out["coarse_equality_attainable"] = bound.coarse_equality_attainable;
        out["equality_family"] = bound.equality_family;
        return out;
      },
      py::arg("k"), py::arg("l"), py::arg("r"), py::arg("s"));
  m.def("gen_heisenberg_bound", &multiplier::gen_heisenberg_bound, py::arg("m"), py::arg("n"),
        py::arg("r"), py::arg("s"), py::arg("c"));
  m.def("abelian_threshold_check", &multiplier::abelian_threshold_check, py::arg("k"),
        py::arg("l"), py::arg("m2_total"));
  m.def("realize_family",
        [](const std::string& family) {
          return multiplier::realize(multiplier::parse_family(family));
        },
        py::arg("family"));

  // oracle
  m.def(
      "multiplier_oracle",
      [](const superalg::StructLSA& algebra, int c, std::size_t word_cap) {
        oracle::OracleOptions opts;
        opts.word_cap = word_cap;
        return oracle_run_dict(oracle::multiplier_oracle(algebra, c, opts));
      },
      py::arg("algebra"), py::arg("c"),
      py::arg("word_cap") = freelie::TruncatedFrame::kDefaultWordCap);
  m.def(
      "multiplier_oracle_family",
      [](const std::string& family, int c, std::size_t word_cap) {
        oracle::OracleOptions opts;
        opts.word_cap = word_cap;
        auto algebra = multiplier::realize(multiplier::parse_family(family));
        return oracle_run_dict(oracle::multiplier_oracle(algebra, c, opts));
      },
      py::arg("family"), py::arg("c"),
      py::arg("word_cap") = freelie::TruncatedFrame::kDefaultWordCap);
  m.def(
      "multiplier_oracle_json",
      [](const std::string& json_text, int c, std::size_t word_cap) {
        oracle::OracleOptions opts;
        opts.word_cap = word_cap;
        auto p = presentation::presentation_from_json_text(json_text);
        return oracle_run_dict(oracle::multiplier_oracle(p, c, opts));
      },
      py::arg("json_text"), py::arg("c"),
      py::arg("word_cap") = freelie::TruncatedFrame::kDefaultWordCap);
  m.def(
      "is_capable",
      [](const superalg::StructLSA& algebra, int order) {
        auto result = oracle::is_capable(algebra, order);
        return py::make_tuple(result.capable, result.z_star.dims);
      },
      py::arg("algebra"), py::arg("order"));
  m.def(
      "capability_table",
      [](const std::string& family, int order) {
        return oracle::capability_table(multiplier::parse_family(family), order);
      },
      py::arg("family"), py::arg("order"));

  // verification suites
  m.def(
      "run_verify_suite",
      [](const std::string& suite, int max_dim) {
        verify::Options options;
        options.max_dim = max_dim;
        py::list out;
        for (const auto& r : verify::run_suite(suite, options)) {
          py::dict item;
          item["name"] = r.name;
          item["provenance"] = r.provenance;
          item["pass"] = r.pass;
          item["detail"] = r.detail;
          out.append(item);
        }
        return out;
      },
      py::arg("suite"), py::arg("max_dim") = 5);
}
