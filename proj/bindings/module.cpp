#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gapsums/acceptance.hpp"
#include "gapsums/congruence.hpp"
#include "gapsums/harness.hpp"

namespace py = pybind11;
using namespace gapsums;

namespace {

Gap make_gap(std::uint64_t q, int s, Vec base, std::vector<Vec> gens,
             std::vector<std::int64_t> lens) {
    return Gap(Modulus::factorize(q), s, std::move(base), std::move(gens),
               std::move(lens));
}

CongruenceInstance make_instance(std::uint64_t q, int s, std::vector<Vec> gens,
                                 std::vector<std::pair<std::int64_t, std::uint64_t>> ivs,
                                 std::vector<std::int64_t> lens) {
    CongruenceInstance inst{Modulus::factorize(q), s, std::move(gens), {},
                            std::move(lens)};
    for (auto [lo, len] : ivs) inst.intervals.push_back({lo, len});
    return inst;
}

py::dict report_dict(const SumReport& r) {
    py::dict d;
    d["kind"] = r.kind;
    d["q"] = r.q;
    d["s"] = r.s;
    d["r"] = r.r;
    d["character_id"] = r.character_id;
    d["gap_json"] = r.gap_json;
    d["sum"] = r.sum;
    d["magnitude"] = r.magnitude;
    d["chain_bound"] = r.chain_bound ? py::object(py::float_(*r.chain_bound))
                                     : py::object(py::none());
    d["shape_bound"] = r.shape_bound;
    d["ratio_to_shape"] = r.ratio_to_shape;
    return d;
}

} // namespace

PYBIND11_MODULE(_gapsums, m) {
    m.doc() = "character and exponential sums over generalized arithmetic progressions";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception<SamplingError>(m, "SamplingError", PyExc_RuntimeError);
    py::register_exception<IOError>(m, "IOError", PyExc_OSError);

    py::class_<DirichletCharacter>(m, "DirichletCharacter")
        .def("__call__", &DirichletCharacter::operator())
        .def_property_readonly("q",
                               [](const DirichletCharacter& c) {
                                   return c.modulus().value();
                               })
        .def_property_readonly("exponents", &DirichletCharacter::exponents)
        .def_property_readonly("conductor", &DirichletCharacter::conductor)
        .def_property_readonly("is_primitive", &DirichletCharacter::is_primitive)
        .def_property_readonly("is_principal", &DirichletCharacter::is_principal)
        .def_property_readonly("is_even", &DirichletCharacter::is_even)
        .def("conjugate", &DirichletCharacter::conjugate)
        .def("id", &DirichletCharacter::id)
        .def("to_json", &DirichletCharacter::to_json);

    m.def("characters", [](std::uint64_t q) {
        return make_character_group(q)->enumerate();
    });
    m.def("character", [](std::uint64_t q, const std::vector<std::uint64_t>& e) {
        return make_character_group(q)->character(e);
    });
    m.def("gauss_sum", &gauss_sum);
    m.def("char_fourier", &char_fourier);

    py::class_<Gap>(m, "Gap")
        .def(py::init(&make_gap), py::arg("q"), py::arg("s"), py::arg("base"),
             py::arg("generators"), py::arg("lengths"))
        .def_static("from_json", &Gap::from_json)
        .def_property_readonly("q",
                               [](const Gap& g) { return g.modulus().value(); })
        .def_property_readonly("s", &Gap::dimension)
        .def_property_readonly("r", &Gap::rank)
        .def_property_readonly("base", &Gap::base)
        .def_property_readonly("generators", &Gap::generators)
        .def_property_readonly("lengths", &Gap::lengths)
        .def("volume", &Gap::volume)
        .def("to_json", &Gap::to_json);

    m.def("enumerate_elements", &enumerate_elements);
    m.def("distinct_elements", &distinct_elements);
    m.def("is_proper_enumeration", &is_proper_enumeration);
    m.def("is_proper_kernel", &is_proper_kernel);
    m.def("random_proper_gap",
          [](std::uint64_t q, int s, int r, std::int64_t hmin, std::int64_t hmax,
             std::uint64_t seed) {
              return random_proper_gap(Modulus::factorize(q), s, r, hmin, hmax,
                                       seed);
          },
          py::arg("q"), py::arg("s"), py::arg("r"), py::arg("hmin"),
          py::arg("hmax"), py::arg("seed"));

    m.def("gap_fourier_coefficient", &gap_fourier_coefficient);
    m.def("l1_norm", &l1_norm);
    m.def("l1_bound", &l1_bound);
    m.def("fourier_profile", [](const Gap& g) {
        FourierProfile p = fourier_profile(g);
        py::dict d;
        d["l1"] = p.l1;
        d["linf"] = p.linf;
        d["l2_squared"] = p.l2_squared;
        d["parseval_expected"] = p.parseval_expected;
        d["parseval_relative_error"] = p.parseval_relative_error();
        return d;
    });

    m.def("count_solutions",
          [](std::uint64_t q, int s, std::vector<Vec> gens,
             std::vector<std::pair<std::int64_t, std::uint64_t>> ivs,
             std::vector<std::int64_t> lens) {
              return count_solutions_exact(
                  make_instance(q, s, std::move(gens), std::move(ivs),
                                std::move(lens)));
          },
          py::arg("q"), py::arg("s"), py::arg("generators"),
          py::arg("intervals"), py::arg("lengths"));
    m.def("solution_bound",
          [](std::uint64_t q, int s, std::vector<Vec> gens,
             std::vector<std::pair<std::int64_t, std::uint64_t>> ivs,
             std::vector<std::int64_t> lens) {
              return solution_bound(
                  make_instance(q, s, std::move(gens), std::move(ivs),
                                std::move(lens)));
          },
          py::arg("q"), py::arg("s"), py::arg("generators"),
          py::arg("intervals"), py::arg("lengths"));

    py::class_<PolynomialModQ>(m, "Polynomial")
        .def(py::init([](std::uint64_t q, std::vector<std::int64_t> coeffs) {
                 return PolynomialModQ(Modulus::factorize(q), std::move(coeffs));
             }),
             py::arg("q"), py::arg("coeffs"))
        .def("__call__", &PolynomialModQ::operator())
        .def_property_readonly("degree", &PolynomialModQ::degree)
        .def_property_readonly("coeffs", &PolynomialModQ::coefficients);

    m.def("character_sum_over_gap",
          [](const DirichletCharacter& chi, const Gap& g) {
              return report_dict(character_sum_over_gap(chi, g));
          });
    m.def("poly_exp_sum_over_gap",
          [](const PolynomialModQ& h, const Gap& g) {
              return report_dict(poly_exp_sum_over_gap(h, g));
          });
    m.def("multilinear_character_sum",
          [](const DirichletCharacter& chi, const Gap& g) {
              return report_dict(multilinear_character_sum(chi, g));
          });
    m.def("weil_complete_sum_check", [](const PolynomialModQ& h) {
        WeilCheck w = weil_complete_sum_check(h);
        py::dict d;
        d["max_complete_sum"] = w.max_complete_sum;
        d["ceiling"] = w.ceiling;
        d["within_bound"] = w.within_bound;
        return d;
    });

    m.def("sweep", [](const std::string& config_json) {
        SweepConfig c = SweepConfig::from_json(config_json);
        std::vector<SumReport> rows = sweep(c);
        py::list out;
        for (const auto& r : rows) out.append(report_dict(r));
        return out;
    });
    m.def("counterexample_demo", [](std::uint64_t q, std::int64_t H) {
        CounterexampleReport r = counterexample_demo(q, H);
        py::dict d;
        d["q"] = r.q;
        d["H"] = r.H;
        d["character_id"] = r.character_id;
        d["double_sum"] = r.double_sum;
        d["weighted_sum"] = r.weighted_sum;
        d["difference"] = r.difference;
        d["max_multiplicity"] = r.max_multiplicity;
        return d;
    });
}
