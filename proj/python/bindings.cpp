#include "dseries/blattner.hpp"
#include "dseries/charring.hpp"
#include "dseries/cli.hpp"
#include "dseries/error.hpp"
#include "dseries/homology.hpp"
#include "dseries/orbits.hpp"
#include "dseries/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dseries;

namespace {

Weight to_weight(const py::sequence& seq) {
    std::vector<Rational> coords;
    for (const auto& item : seq) coords.push_back(parse_rational(py::str(item).cast<std::string>()));
    return Weight(std::move(coords));
}

py::tuple to_py(const Weight& w) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::tuple out(w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) out[i] = fraction(format_rational(w[i]));
    return out;
}

py::dict table_to_py(const HomologyTable& t) {
    py::dict out;
    for (const auto& [p, row] : t.rows()) {
        py::list weights;
        for (const Weight& w : row) weights.append(to_py(w));
        out[py::int_(p)] = weights;
    }
    return out;
}

py::dict character_to_py(const FormalCharacter& ch) {
    py::dict out;
    for (const auto& [mu, c] : ch.terms()) out[to_py(mu)] = c;
    return out;
}

const ClosedOrbit& orbit_at(const std::vector<ClosedOrbit>& orbits, std::optional<int> index) {
    if (!index) return orbits[reference_orbit_index(orbits)];
    if (*index < 0 || static_cast<std::size_t>(*index) >= orbits.size()) throw py::index_error("orbit index out of range");
    return orbits[static_cast<std::size_t>(*index)];
}

}  // namespace

PYBIND11_MODULE(_dseries, m) {
    m.doc() = "Exact discrete series combinatorics for equal-rank real forms";

    static py::exception<Error> error(m, "DseriesError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(std::string(e.kind_name()), std::string(e.what()));
            PyErr_SetObject(error.ptr(), args.ptr());
        }
    });

    m.def("cartan_matrix", &cartan_matrix, py::arg("type"), "Preset Cartan matrix, e.g. 'A2' or 'A1xB2'.");

    m.def(
        "validate_grading",
        [](const IntMatrix& cartan, const std::vector<int>& assignment) {
            RootSystem rs = RootSystem::build(cartan);
            return validate_grading(rs, assignment);
        },
        py::arg("cartan"), py::arg("assignment"), "Is a +-1 assignment on all positive roots multiplicative?");

    m.def(
        "run",
        [](const std::string& command, const std::string& config_json) {
            cli::RunResult r;
            try {
                r = cli::run(command, cli::parse_config(nlohmann::json::parse(config_json)));
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorKind::InvalidConfig, e.what());
            }
            return py::make_tuple(r.exit_code, r.output);
        },
        py::arg("command"), py::arg("config_json"), "Same as the command-line tool: (exit code, output).");

    py::class_<EqualRankForm>(m, "RealForm")
        .def(py::init([](const IntMatrix& cartan, const std::vector<bool>& compact_simple) {
                 return EqualRankForm::make(cartan, compact_simple);
             }),
             py::arg("cartan"), py::arg("compact_simple"))
        .def_property_readonly("rank", &EqualRankForm::rank)
        .def_property_readonly("q", [](const EqualRankForm& f) { return f.grading.q(); })
        .def_property_readonly("dim_x", &EqualRankForm::dim_x)
        .def_property_readonly("dim_q", [](const EqualRankForm& f) { return f.k_weyl.dim_q(); })
        .def_property_readonly("weyl_order", [](const EqualRankForm& f) { return f.weyl.order(); })
        .def_property_readonly("weyl_k_order", [](const EqualRankForm& f) { return f.k_weyl.order(); })
        .def_property_readonly("rho", [](const EqualRankForm& f) { return to_py(f.roots.rho()); })
        .def_property_readonly("rho_c", [](const EqualRankForm& f) { return to_py(f.grading.rho_c()); })
        .def_property_readonly("rho_n", [](const EqualRankForm& f) { return to_py(f.grading.rho_n()); })
        .def("positive_roots",
             [](const EqualRankForm& f) {
                 py::list out;
                 for (std::size_t k = 0; k < f.roots.num_positive_roots(); ++k) {
                     out.append(py::make_tuple(f.roots.positive_roots()[k].root_coords, f.grading.is_compact(k)));
                 }
                 return out;
             },
             "(simple-root coordinates, compact?) per positive root.")
        .def("closed_orbits",
             [](const EqualRankForm& f) {
                 py::list out;
                 for (const ClosedOrbit& o : enumerate_closed_orbits(f)) {
                     py::list strata;
                     for (const Stratum& s : o.strata) {
                         strata.append(py::make_tuple(s.w.word_string(), s.cell.word_string(), s.dim));
                     }
                     py::dict d;
                     d["u"] = o.u.word_string();
                     d["positive_system"] = o.positive_system;
                     d["strata"] = strata;
                     out.append(d);
                 }
                 return out;
             })
        .def("kostant_table",
             [](const EqualRankForm& f, const py::sequence& lam) {
                 return table_to_py(kostant_table(f.roots, f.weyl, to_weight(lam)));
             },
             py::arg("lam"))
        .def("schmid_table",
             [](const EqualRankForm& f, const py::sequence& lam, std::optional<int> orbit) {
                 auto orbits = enumerate_closed_orbits(f);
                 return table_to_py(schmid_table(f, orbit_at(orbits, orbit), to_weight(lam)));
             },
             py::arg("lam"), py::arg("orbit") = py::none())
        .def("schmid_via_trauber",
             [](const EqualRankForm& f, const py::sequence& lam, std::optional<int> orbit) {
                 auto orbits = enumerate_closed_orbits(f);
                 return table_to_py(schmid_via_trauber(f, orbit_at(orbits, orbit), to_weight(lam)));
             },
             py::arg("lam"), py::arg("orbit") = py::none())
        .def("weyl_denominator", [](const EqualRankForm& f) { return character_to_py(weyl_denominator(f.roots)); })
        .def("weyl_numerator",
             [](const EqualRankForm& f, const py::sequence& lam) {
                 return character_to_py(weyl_numerator(f.roots, f.weyl, to_weight(lam)));
             },
             py::arg("lam"))
        .def("freudenthal_character",
             [](const EqualRankForm& f, const py::sequence& lam) {
                 return character_to_py(freudenthal_character(f.roots, to_weight(lam)));
             },
             py::arg("lam"))
        .def("discrete_numerator",
             [](const EqualRankForm& f, const py::sequence& lam) {
                 return character_to_py(discrete_numerator(f, to_weight(lam)));
             },
             py::arg("lam"))
        .def("partition",
             [](const EqualRankForm& f, const py::sequence& mu, std::optional<int> parts) {
                 return parts ? partition_p(f, to_weight(mu), *parts) : partition(f, to_weight(mu));
             },
             py::arg("mu"), py::arg("parts") = py::none())
        .def("blattner_multiplicity",
             [](const EqualRankForm& f, const py::sequence& lam, const py::sequence& nu) {
                 return blattner_multiplicity(f, to_weight(lam), to_weight(nu));
             },
             py::arg("lam"), py::arg("nu"))
        .def("filtration_oracle",
             [](const EqualRankForm& f, const py::sequence& lam, const py::sequence& nu, std::optional<int> p_max) {
                 Weight l = to_weight(lam), n = to_weight(nu);
                 return filtration_oracle(f, l, n, p_max.value_or(required_truncation(f, l, n)));
             },
             py::arg("lam"), py::arg("nu"), py::arg("p_max") = py::none())
        .def("ktype_table",
             [](const EqualRankForm& f, const py::sequence& lam, const std::string& box) {
                 py::dict out;
                 for (const auto& [nu, m] : ktype_table(f, to_weight(lam), WeightBox::parse(box)).entries) {
                     out[to_py(nu)] = m;
                 }
                 return out;
             },
             py::arg("lam"), py::arg("box"), "box is 'lo..hi' per coordinate, e.g. '-8..0,-8..0'.")
        .def("verify",
             [](const EqualRankForm& f, unsigned threads) {
                 VerifyOptions options;
                 options.threads = threads;
                 std::vector<PropertyResult> results;
                 {
                     py::gil_scoped_release release;
                     results = run_verify(f, options);
                 }
                 py::list out;
                 for (const auto& r : results) out.append(py::make_tuple(r.name, r.passed, r.detail));
                 return out;
             },
             py::arg("threads") = 1);
}
