#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gowers/ap_count.hpp"
#include "gowers/circuit.hpp"
#include "gowers/harmonic.hpp"
#include "gowers/io.hpp"
#include "gowers/poly.hpp"
#include "gowers/testers.hpp"
#include "gowers/version.hpp"

namespace py = pybind11;
using namespace gowers;

namespace {

FunctionTable table_from_values(std::uint32_t p, std::uint32_t n,
                                std::vector<cplx> values) {
    return FunctionTable(GroupParams(p, n), std::move(values));
}

} // namespace

PYBIND11_MODULE(_gowers, m) {
    m.doc() = "Gowers uniformity norms over F_p^n: statevector circuits, classical "
              "reference engine, property testers and 3-AP counting";
    m.attr("__version__") = kVersion;

    py::class_<GroupParams>(m, "GroupParams")
        .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("p"), py::arg("n"))
        .def_property_readonly("p", &GroupParams::p)
        .def_property_readonly("n", &GroupParams::n)
        .def_property_readonly("order", &GroupParams::order)
        .def("__repr__", [](const GroupParams& g) {
            return "GroupParams(p=" + std::to_string(g.p()) +
                   ", n=" + std::to_string(g.n()) + ")";
        });

    py::class_<FunctionTable>(m, "FunctionTable")
        .def(py::init(&table_from_values), py::arg("p"), py::arg("n"), py::arg("values"))
        .def_property_readonly("params", &FunctionTable::params)
        .def_property_readonly("values",
                               [](const FunctionTable& t) { return t.values(); })
        .def_property_readonly("sup_norm", &FunctionTable::sup_norm)
        .def("is_unimodular", &FunctionTable::is_unimodular, py::arg("tol") = 1e-12);

    py::class_<poly::PolynomialSpec>(m, "PolynomialSpec")
        .def_property_readonly("degree", &poly::PolynomialSpec::degree)
        .def("__str__", &poly::PolynomialSpec::to_string);

    py::class_<circuit::RunResult>(m, "RunResult")
        .def_readonly("zero_probability", &circuit::RunResult::zero_probability)
        .def_readonly("exact_expectation", &circuit::RunResult::exact_expectation)
        .def_readonly("peak", &circuit::RunResult::peak)
        .def_readonly("peak_probability", &circuit::RunResult::peak_probability)
        .def_readonly("query_count", &circuit::RunResult::query_count)
        .def_readonly("qft_count", &circuit::RunResult::qft_count)
        .def_readonly("m", &circuit::RunResult::m)
        .def_readonly("p_hat", &circuit::RunResult::p_hat)
        .def_readonly("ci_lo", &circuit::RunResult::ci_lo)
        .def_readonly("ci_hi", &circuit::RunResult::ci_hi);

    py::class_<testers::TestPlan>(m, "TestPlan")
        .def_readonly("delta", &testers::TestPlan::delta)
        .def_readonly("tau", &testers::TestPlan::tau)
        .def_readonly("m", &testers::TestPlan::m)
        .def_readonly("eta", &testers::TestPlan::eta);

    py::class_<testers::Verdict>(m, "Verdict")
        .def_readonly("accept", &testers::Verdict::accept)
        .def_readonly("p_hat", &testers::Verdict::p_hat)
        .def_readonly("m_used", &testers::Verdict::m_used)
        .def_readonly("plan", &testers::Verdict::plan);

    py::class_<apcount::SetInstance>(m, "SetInstance")
        .def(py::init<FunctionTable>(), py::arg("indicator"))
        .def_readonly("alpha", &apcount::SetInstance::alpha)
        .def("phase", &apcount::SetInstance::phase);

    py::class_<apcount::ApEstimate>(m, "ApEstimate")
        .def_readonly("t_f", &apcount::ApEstimate::t_f)
        .def_readonly("count", &apcount::ApEstimate::count)
        .def_readonly("t_g", &apcount::ApEstimate::t_g)
        .def_readonly("alpha", &apcount::ApEstimate::alpha)
        .def_readonly("u2_indicator", &apcount::ApEstimate::u2_indicator)
        .def_readonly("u2_phase", &apcount::ApEstimate::u2_phase)
        .def_readonly("t_lo", &apcount::ApEstimate::t_lo)
        .def_readonly("t_hi", &apcount::ApEstimate::t_hi);

    // group / instance construction
    m.def("parse_polynomial",
          [](const GroupParams& g, const std::string& text) {
              return io::parse_polynomial(g, text);
          },
          py::arg("params"), py::arg("text"));
    m.def("phase_function", &poly::phase_function, py::arg("polynomial"));
    m.def("random_polynomial", &poly::random_polynomial, py::arg("params"),
          py::arg("degree"), py::arg("seed"));
    m.def("haar_random_function", &poly::haar_random_function, py::arg("params"),
          py::arg("seed"));
    m.def("correlation", &poly::correlation, py::arg("table"), py::arg("polynomial"));
    m.def("random_set", &apcount::random_set, py::arg("params"), py::arg("density"),
          py::arg("seed"));

    // reference engine
    m.def("gowers_norm_bruteforce", &harmonic::gowers_norm_bruteforce, py::arg("table"),
          py::arg("d"));
    m.def("gowers_u2_via_fourier", &harmonic::gowers_u2_via_fourier, py::arg("table"));
    m.def("gowers_u3_via_fourier", &harmonic::gowers_u3_via_fourier, py::arg("table"));
    m.def("fourier_coefficients",
          [](const FunctionTable& f) { return harmonic::fourier(f).values; },
          py::arg("table"));
    m.def("count_3aps_exact",
          [](const FunctionTable& ind) {
              auto c = harmonic::count_3aps_exact(ind);
              return py::make_tuple(c.count, c.nondegenerate, c.t_f);
          },
          py::arg("indicator"),
          "Returns (count, nondegenerate_count, t_f) for a 0/1 indicator table.");

    // circuits
    m.def("run_ud", &circuit::run_ud, py::arg("table"), py::arg("d"));
    m.def("run_ud_sampled", &circuit::run_ud_sampled, py::arg("table"), py::arg("d"),
          py::arg("m"), py::arg("seed"), py::arg("eta") = 0.01);
    m.def("run_t3_hadamard", &circuit::run_t3_hadamard, py::arg("table"));
    m.def("run_shifted",
          [](const FunctionTable& f, std::uint32_t d,
             const std::vector<std::uint64_t>& shifts) {
              std::vector<GroupVector> sv;
              sv.reserve(shifts.size());
              for (std::uint64_t s : shifts) sv.push_back(element(f.params(), s));
              return circuit::run_shifted(f, d, sv);
          },
          py::arg("table"), py::arg("d"), py::arg("shifts"),
          "Shifts are linear indices, one per register.");

    // testers
    m.def("plan_samples", &testers::plan_samples, py::arg("delta"), py::arg("eta"));
    m.def("test_linear", &testers::test_linear, py::arg("table"), py::arg("epsilon"),
          py::arg("eta"), py::arg("seed"));
    m.def("test_character_two_sided", &testers::test_character_two_sided,
          py::arg("table"), py::arg("eps1"), py::arg("eps2"), py::arg("eta"),
          py::arg("seed"));
    m.def("test_degree_d_far", &testers::test_degree_d_far, py::arg("table"),
          py::arg("d"), py::arg("delta"), py::arg("eta"), py::arg("seed"),
          py::arg("allow_any_regime") = false);

    // 3-AP pipeline
    m.def("estimate_exact", &apcount::estimate_exact, py::arg("set_instance"));
    m.def("estimate_quantum_t3", &apcount::estimate_quantum_t3, py::arg("set_instance"));
    m.def("u2_bounds", &apcount::u2_bounds, py::arg("set_instance"));

    m.def("size_cap", &size_cap);
    m.def("set_size_cap", &set_size_cap, py::arg("cap"));
}
