#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "czcss/constructions.hpp"
#include "czcss/correlation.hpp"
#include "czcss/gbf.hpp"
#include "czcss/io.hpp"
#include "czcss/verify.hpp"

namespace py = pybind11;
using namespace czcss;

PYBIND11_MODULE(_czcss, m) {
    m.doc() = "cross Z-complementary sequence sets: construction and exact verification";

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    py::class_<PhaseSequence>(m, "PhaseSequence")
        .def(py::init([](int q, std::vector<int> phases) {
                 return PhaseSequence{q, std::move(phases)};
             }),
             py::arg("q"), py::arg("phases"))
        .def_readonly("q", &PhaseSequence::q)
        .def_readonly("phases", &PhaseSequence::phases)
        .def("__len__", &PhaseSequence::length)
        .def(py::self == py::self)
        .def("__repr__", [](const PhaseSequence& s) {
            std::string r = "PhaseSequence(q=" + std::to_string(s.q) + ", [";
            for (int i = 0; i < s.length(); ++i) r += (i ? " " : "") + std::to_string(s.phases[i]);
            return r + "])";
        });

    m.def("bit_vector", [](std::uint64_t i, int width) {
        const BitVector bits = bit_vector(i, width);
        return std::vector<int>(bits.begin(), bits.end());
    }, py::arg("i"), py::arg("width"));

    py::class_<Gbf>(m, "Gbf")
        .def(py::init<int, int>(), py::arg("q"), py::arg("num_vars"))
        .def_static("monomial", &Gbf::monomial, py::arg("q"), py::arg("num_vars"), py::arg("vars"),
                    py::arg("coeff") = 1)
        .def_static("constant", &Gbf::constant, py::arg("q"), py::arg("num_vars"), py::arg("value"))
        .def_property_readonly("q", &Gbf::q)
        .def_property_readonly("num_vars", &Gbf::num_vars)
        .def_property_readonly("terms", &Gbf::terms)
        .def("evaluate", &Gbf::evaluate, py::arg("i"))
        .def("project", &Gbf::project)
        .def("project_truncated", &Gbf::project_truncated, py::arg("L"))
        .def("with_vars", &Gbf::with_vars, py::arg("num_vars"))
        .def("scaled", &Gbf::scaled, py::arg("k"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Gbf::to_string)
        .def("__repr__", [](const Gbf& f) { return "Gbf(" + f.to_string() + ")"; });

    m.def("parse_gbf", &parse_gbf, py::arg("text"), py::arg("q"), py::arg("num_vars"));

    py::class_<CyclotomicValue>(m, "CyclotomicValue")
        .def(py::init<int>(), py::arg("q"))
        .def(py::init<int, std::vector<std::int64_t>>(), py::arg("q"), py::arg("counts"))
        .def_property_readonly("q", &CyclotomicValue::q)
        .def_property_readonly("counts", &CyclotomicValue::counts)
        .def("is_zero", &CyclotomicValue::is_zero)
        .def("magnitude", &CyclotomicValue::magnitude)
        .def("conjugate", &CyclotomicValue::conjugate)
        .def(py::self + py::self)
        .def(py::self == py::self);

    m.def("cyclotomic_poly", &cyclotomic_poly, py::arg("q"));
    m.def("accf", &accf, py::arg("c1"), py::arg("c2"), py::arg("tau"));
    m.def("aacf", &aacf, py::arg("c"), py::arg("tau"));
    m.def("sum_aacf", &sum_aacf, py::arg("set"), py::arg("tau"));
    m.def("sum_accf_adjacent", &sum_accf_adjacent, py::arg("set"), py::arg("tau"));
    m.def("sum_accf_pointwise", &sum_accf_pointwise, py::arg("a"), py::arg("b"), py::arg("tau"));
    m.def("sum_accf_adjacent_cross", &sum_accf_adjacent_cross, py::arg("a"), py::arg("b"),
          py::arg("tau"));

    py::class_<ConstructionParams>(m, "ConstructionParams")
        .def(py::init<>())
        .def_readwrite("q", &ConstructionParams::q)
        .def_readwrite("m", &ConstructionParams::m)
        .def_readwrite("n", &ConstructionParams::n)
        .def_readwrite("pi", &ConstructionParams::pi)
        .def_readwrite("c", &ConstructionParams::c)
        .def_readwrite("c_prime", &ConstructionParams::c_prime)
        .def_readwrite("c_1", &ConstructionParams::c_1)
        .def_readwrite("linear_coeffs", &ConstructionParams::linear_coeffs);

    py::class_<SequencePair>(m, "SequencePair")
        .def(py::init<>())
        .def_readwrite("first", &SequencePair::first)
        .def_readwrite("second", &SequencePair::second)
        .def_readonly("claimed_N", &SequencePair::claimed_N)
        .def_readonly("claimed_Z", &SequencePair::claimed_Z);

    py::class_<GcpWithMate>(m, "GcpWithMate")
        .def_readonly("pair", &GcpWithMate::pair)
        .def_readonly("mate", &GcpWithMate::mate);

    py::class_<CodeFamily>(m, "CodeFamily")
        .def(py::init<>())
        .def_readwrite("sets", &CodeFamily::sets)
        .def_readonly("claimed_K", &CodeFamily::claimed_K)
        .def_readonly("claimed_M", &CodeFamily::claimed_M)
        .def_readonly("claimed_N", &CodeFamily::claimed_N)
        .def_readonly("claimed_Z", &CodeFamily::claimed_Z);

    py::class_<TailWindowQuadruple>(m, "TailWindowQuadruple")
        .def_readonly("p", &TailWindowQuadruple::p)
        .def_readonly("q_seq", &TailWindowQuadruple::q_seq)
        .def_readonly("u", &TailWindowQuadruple::u)
        .def_readonly("v", &TailWindowQuadruple::v);

    m.def("standard_gcp", &standard_gcp, py::arg("params"));
    m.def("base_gbf_g", &base_gbf_g, py::arg("q"), py::arg("m"), py::arg("pi"));
    m.def("seed_gbf_G", &seed_gbf_G, py::arg("q"), py::arg("m"), py::arg("pi"), py::arg("c") = 0);
    m.def("czcp_pair", &czcp_pair, py::arg("q"), py::arg("m"), py::arg("pi"), py::arg("c") = 0);
    m.def("czcp_mate_pair", &czcp_mate_pair, py::arg("q"), py::arg("m"), py::arg("pi"),
          py::arg("c") = 0);
    m.def("czcss_family", &czcss_family, py::arg("q"), py::arg("m"), py::arg("n"), py::arg("pi"),
          py::arg("c") = 0);
    m.def("tail_window_quadruple", &tail_window_quadruple, py::arg("q"), py::arg("m"), py::arg("pi"),
          py::arg("c_1") = 0);

    py::class_<ShiftViolation>(m, "ShiftViolation")
        .def_readonly("tau", &ShiftViolation::tau)
        .def_readonly("magnitude", &ShiftViolation::magnitude)
        .def_readonly("context", &ShiftViolation::context);

    py::class_<PropertyResult>(m, "PropertyResult")
        .def_readonly("property", &PropertyResult::property)
        .def_readonly("window", &PropertyResult::window)
        .def_readonly("shifts_tested", &PropertyResult::shifts_tested)
        .def_readonly("violations", &PropertyResult::violations)
        .def_readonly("vacuous", &PropertyResult::vacuous)
        .def_readonly("pass_", &PropertyResult::pass);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("subject", &VerificationReport::subject)
        .def_readonly("check", &VerificationReport::check)
        .def_readonly("N", &VerificationReport::N)
        .def_readonly("Z", &VerificationReport::Z)
        .def_readonly("properties", &VerificationReport::properties)
        .def_readonly("pass_", &VerificationReport::pass)
        .def_readonly("gcp", &VerificationReport::gcp)
        .def_readonly("max_z", &VerificationReport::max_z)
        .def_readonly("czcz_ratio", &VerificationReport::czcz_ratio)
        .def("to_json", &report_to_json)
        .def("to_text", &report_to_text)
        .def("__bool__", [](const VerificationReport& r) { return r.pass; });

    m.def("check_zcp", &check_zcp, py::arg("pair"), py::arg("Z"),
          py::arg("observer") = ValueObserver{});
    m.def("check_czcp", &check_czcp, py::arg("pair"), py::arg("Z"),
          py::arg("observer") = ValueObserver{});
    m.def("check_czcs", &check_czcs, py::arg("set"), py::arg("Z"),
          py::arg("observer") = ValueObserver{});
    m.def("check_szccs", &check_szccs, py::arg("family"), py::arg("Z"),
          py::arg("observer") = ValueObserver{});
    m.def("check_czcss", &check_czcss, py::arg("family"), py::arg("Z"),
          py::arg("observer") = ValueObserver{});
    m.def("max_czcz", &max_czcz, py::arg("pair"), py::arg("observer") = ValueObserver{});
    m.def("check_complementary_mate", &check_complementary_mate, py::arg("pair"), py::arg("mate"),
          py::arg("observer") = ValueObserver{});
    m.def("check_tail_window",
          py::overload_cast<int, int, const std::vector<int>&, int, const ValueObserver&>(
              &check_tail_window),
          py::arg("q"), py::arg("m"), py::arg("pi"), py::arg("c_1"),
          py::arg("observer") = ValueObserver{});
    m.def("check_mate_cross", &check_mate_cross, py::arg("ab"), py::arg("cd"), py::arg("m"),
          py::arg("pi"), py::arg("observer") = ValueObserver{});

    m.def("pair_file_json", &pair_file_json, py::arg("pair"), py::arg("kind"),
          py::arg("params") = std::optional<ConstructionParams>{}, py::arg("mate") = nullptr);
    m.def("family_file_json", &family_file_json, py::arg("family"), py::arg("kind") = "czcss",
          py::arg("params") = std::optional<ConstructionParams>{});
}
