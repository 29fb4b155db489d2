#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latpath/bijections.hpp"
#include "latpath/cli.hpp"
#include "latpath/dp.hpp"
#include "latpath/gfengine.hpp"
#include "latpath/grid.hpp"
#include "latpath/series.hpp"
#include "latpath/steps.hpp"
#include "latpath/verify.hpp"

namespace py = pybind11;
using namespace latpath;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::list fractions(const Series& s) {
    py::list out;
    for (const auto& c : s.coefficients()) {
        out.append(fraction(c));
    }
    return out;
}

StepSet steps_arg(const std::string& text) { return StepSet::parse(text); }

std::pair<bool, std::string> report(const verify::Report& r) { return {r.passed(), r.text()}; }

}  // namespace

PYBIND11_MODULE(_latpath, m) {
    m.doc() = "Exact lattice path counts, redundant generating functions and cross-checks.";

    py::class_<Grid>(m, "Grid")
        .def_property_readonly("m_range", [](const Grid& g) { return std::make_pair(g.m_min(), g.m_max()); })
        .def_property_readonly("n_range", [](const Grid& g) { return std::make_pair(g.n_min(), g.n_max()); })
        .def("at", [](const Grid& g, int mm, int n) { return fraction(g.at(mm, n)); }, py::arg("m"), py::arg("n"))
        .def("contains", &Grid::contains, py::arg("m"), py::arg("n"))
        .def("to_tsv", [](const Grid& g, bool omit_zeros) { return to_tsv(g, omit_zeros); },
             py::arg("omit_zeros") = false)
        .def("to_dict",
             [](const Grid& g) {
                 py::dict d;
                 g.for_each([&](int mm, int n, const Rational& v) { d[py::make_tuple(mm, n)] = fraction(v); });
                 return d;
             })
        .def("__repr__", [](const Grid& g) {
            std::ostringstream s;
            s << "Grid(m=" << g.m_min() << ".." << g.m_max() << ", n=" << g.n_min() << ".." << g.n_max() << ")";
            return s.str();
        });

    m.def("ballot", &dp::ballot, py::arg("M"));
    m.def("ballot_extended", &dp::ballot_extended, py::arg("M"));
    m.def("c_p", &dp::c_p, py::arg("p"), py::arg("M"));
    m.def("c_p_extended", &dp::c_p_extended, py::arg("p"), py::arg("M"));
    m.def("d_p", &dp::d_p, py::arg("p"), py::arg("M"), py::arg("n_max") = -1);
    m.def("d2_extended", &dp::d2_extended, py::arg("n_max"), py::arg("m_max"));
    m.def("e_ph", &dp::e_ph, py::arg("p"), py::arg("h"), py::arg("M"), py::arg("n_max") = -1);
    m.def("s_count", &dp::s_count, py::arg("M"), py::arg("n_max") = -1);
    m.def(
        "p_h",
        [](const std::string& steps, const std::string& weights, int h, int M) {
            const StepSet t = steps_arg(steps);
            return dp::p_h(t, Weights::parse(t, weights), h, M);
        },
        py::arg("steps"), py::arg("weights") = "", py::arg("h") = 0, py::arg("M") = 6);
    m.def(
        "p_h_extended",
        [](const std::string& steps, const std::string& weights, int h, int M, int n_min, std::optional<int> n_max) {
            const StepSet t = steps_arg(steps);
            return dp::p_h_extended(t, Weights::parse(t, weights), h, M, n_min, n_max);
        },
        py::arg("steps"), py::arg("weights") = "", py::arg("h") = 0, py::arg("M") = 6, py::arg("n_min") = -3,
        py::arg("n_max") = py::none());

    m.def("catalan_gf", [](std::size_t order) { return fractions(gf::catalan_gf(order)); }, py::arg("order"));
    m.def(
        "solve_f",
        [](const std::string& steps, const std::string& weights, std::size_t order) {
            const StepSet t = steps_arg(steps);
            return fractions(gf::solve_f(t, Weights::parse(t, weights), order));
        },
        py::arg("steps"), py::arg("weights") = "", py::arg("order") = 10);
    m.def(
        "solve_g",
        [](const std::string& steps, const std::string& weights, std::size_t order) {
            const StepSet t = steps_arg(steps);
            return fractions(gf::solve_g(t, Weights::parse(t, weights), order));
        },
        py::arg("steps"), py::arg("weights") = "", py::arg("order") = 10);
    m.def("gamma", [](int p, std::size_t order) { return fractions(gf::gamma(p, order)); }, py::arg("p"),
          py::arg("order"));
    m.def(
        "ns_coefficient", [](int mm, std::size_t n) { return fraction(gf::ns_family(n).coefficient(mm, n)); },
        py::arg("m"), py::arg("n"));
    m.def("lemma31_holds", &gf::lemma31_holds, py::arg("n"));

    m.def("verify_ns", [](int M) { return report(verify::ns(M)); }, py::arg("M") = 15);
    m.def("verify_thm51", [](int M) { return report(verify::thm51(verify::theorem_fixtures(), M)); },
          py::arg("M") = 10);
    m.def("verify_lemma53", [](int M) { return report(verify::lemma53(verify::theorem_fixtures(), M)); },
          py::arg("M") = 10);
    m.def("verify_lemma31", [](int n) { return report(verify::lemma31(n)); }, py::arg("n_max") = 200);
    m.def("verify_eq204", [](int M) { return report(verify::eq204(M)); }, py::arg("M") = 10);
    m.def("verify_rgf", [](int M, int diagonal) { return report(verify::rgf(M, diagonal)); }, py::arg("M") = 10,
          py::arg("diagonal") = 20);
    m.def("verify_bijection", []() { return report(verify::bijection()); });
    m.def("verify_catalan_line", [](int N) { return report(verify::catalan_line(N)); }, py::arg("N") = 30);
    m.def("verify_motzkin_line", [](int N) { return report(verify::motzkin_line(N)); }, py::arg("N") = 20);
    m.def("oracle_compare", [](int unit_max, int rise_max) { return report(verify::oracle_compare(unit_max, rise_max)); },
          py::arg("unit_max") = 8, py::arg("rise_max") = 10);

    m.def("reverse_swap", [](const std::string& path) { return bij::reverse_swap(UnitPath::parse(path)).to_string(); },
          py::arg("path"));
    m.def(
        "dyck_encode",
        [](const std::vector<int>& rises) {
            RisePath p;
            p.rises = rises;
            return bij::dyck_encode(p).rises;
        },
        py::arg("rises"));
    m.def(
        "dyck_decode",
        [](const std::vector<int>& rises) {
            RisePath p;
            p.rises = rises;
            return bij::dyck_decode(p).rises;
        },
        py::arg("rises"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
