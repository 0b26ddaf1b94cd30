#include "fixedpoint/checked.hpp"
#include "fixedpoint/constraints.hpp"
#include "fixedpoint/families.hpp"
#include "fixedpoint/isotropy.hpp"
#include "fixedpoint/laurent.hpp"
#include "fixedpoint/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fixedpoint;

namespace {

Datum datum_from_lists(const std::vector<std::vector<Weight>> &points) {
    std::vector<WeightSet> ws;
    ws.reserve(points.size());
    for (const auto &p : points)
        ws.emplace_back(p);
    return Datum(std::move(ws));
}

std::vector<std::vector<Weight>> datum_to_lists(const Datum &d) {
    std::vector<std::vector<Weight>> out;
    for (const auto &p : d.points())
        out.emplace_back(p.weights().begin(), p.weights().end());
    return out;
}

CheckConfig config_from(const std::optional<std::vector<std::string>> &checks) {
    return checks ? CheckConfig(*checks) : CheckConfig::all();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fixed-point data checks and enumeration for circle actions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidDatum>(m, "InvalidDatum", PyExc_ValueError);
    py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflow", PyExc_OverflowError);
    py::register_exception<SearchOverflow>(m, "SearchOverflow", PyExc_RuntimeError);

    py::class_<Datum>(m, "Datum")
        .def(py::init(&datum_from_lists), py::arg("points"))
        .def_property_readonly("points", &datum_to_lists)
        .def_property_readonly("point_count", &Datum::point_count)
        .def_property_readonly("half_dim", &Datum::half_dim)
        .def_property_readonly("name", &Datum::name)
        .def("__eq__", [](const Datum &a, const Datum &b) { return a == b; })
        .def("__repr__", [](const Datum &d) { return "Datum(" + to_string(d) + ")"; });

    m.def("parse", &parse_datum, py::arg("text"));
    m.def("serialize", &serialize_datum, py::arg("datum"));
    m.def("canonicalize", [](const Datum &d) { return canonicalize(d); }, py::arg("datum"));
    m.def("negate", [](const Datum &d) { return negate(d); }, py::arg("datum"));
    m.def("scale", [](const Datum &d, Weight k) { return scale(d, k); }, py::arg("datum"), py::arg("m"));
    m.def("profile", [](const Datum &d) { return profile(d).counts; }, py::arg("datum"));
    m.def("multiplicity", &multiplicity, py::arg("datum"), py::arg("weight"));
    m.def("weight_gcd", &weight_gcd, py::arg("datum"));

    m.def("sphere2", &sphere2, py::arg("a"));
    m.def("sphere6", &sphere6, py::arg("a"), py::arg("b"));
    m.def("cp2_triple", &cp2_triple, py::arg("a"), py::arg("b"));

    m.def("check_names", [] {
        std::vector<std::string> out;
        for (auto id : report_order)
            out.emplace_back(check_name(id));
        return out;
    });

    m.def(
        "check_index_identity",
        [](const Datum &d, int i) {
            auto v = check_index_identity(d, i);
            py::dict out;
            out["pass"] = v.pass;
            out["constant"] = v.constant;
            out["numerator"] = v.numerator.to_string();
            out["denominator"] = v.denominator;
            out["residual"] = v.residual.to_string();
            return out;
        },
        py::arg("datum"), py::arg("i"));
    m.def(
        "check_index_identity_series",
        [](const Datum &d, int i) { return check_index_identity_series(d, i).pass; },
        py::arg("datum"), py::arg("i"));
    m.def(
        "check_modk",
        [](const Datum &d, Weight modulus) {
            auto v = check_modk(d, modulus);
            return py::make_tuple(v.pass, v.partition);
        },
        py::arg("datum"), py::arg("modulus"));

    m.def(
        "run_suite_json",
        [](const Datum &d, const std::optional<std::vector<std::string>> &checks) {
            return report_to_json(run_suite(d, config_from(checks))).dump();
        },
        py::arg("datum"), py::arg("checks") = py::none());

    m.def(
        "enumerate",
        [](std::size_t points, std::size_t half_dim, Weight max_weight,
           const std::optional<std::vector<std::string>> &checks, bool dedup_negation,
           bool primitive_only, unsigned threads) {
            SearchSpace s;
            s.point_count = points;
            s.half_dim = half_dim;
            s.max_weight = max_weight;
            s.config = config_from(checks);
            s.dedup_negation = dedup_negation;
            s.primitive_only = primitive_only;
            s.threads = threads;
            py::gil_scoped_release release;
            return enumerate(s);
        },
        py::arg("points"), py::arg("half_dim"), py::arg("max_weight"),
        py::arg("checks") = py::none(), py::arg("dedup_negation") = false,
        py::arg("primitive_only") = false, py::arg("threads") = 1);

    m.def("mutation_battery", &mutation_battery, py::arg("datum"));
    m.def(
        "classify_report_json",
        [](const std::vector<Datum> &survivors) {
            return summary_to_json(classify_report(survivors)).dump();
        },
        py::arg("survivors"));
}
