#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieconn/closure.hpp"
#include "lieconn/criteria.hpp"
#include "lieconn/report.hpp"

namespace py = pybind11;
using namespace lieconn;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.get_str());
}

Rational rational_of(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

Tag tag_of(const std::string& s) {
    if (s == "B") return Tag::B;
    if (s == "E") return Tag::E;
    if (s == "C") return Tag::C;
    throw DomainError("unknown basis tag '" + s + "'");
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["status"] = std::string(to_string(v.status));
    d["property"] = std::string(to_string(v.property));
    d["criterion"] = std::string(to_string(v.criterion));
    d["reasons"] = v.reasons;
    return d;
}

py::dict oracle_dict(const OracleReport& o) {
    py::dict d;
    d["dimension"] = o.dimension;
    d["full_dimension"] = o.full_dimension;
    d["holds"] = o.holds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_lieconn, m) {
    m.doc() = "Graph-theoretic controllability checks for bilinear systems on SO(n), SL(n), GL+(n)";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<MismatchError>(m, "MismatchError", base.ptr());
    py::register_exception<SoundnessError>(m, "SoundnessError", PyExc_RuntimeError);

    py::class_<Algebra>(m, "Algebra")
        .def(py::init([](const std::string& family, int n) { return Algebra(parse_family(family), n); }),
             py::arg("family"), py::arg("n"))
        .def_property_readonly("family", [](const Algebra& a) { return std::string(to_string(a.family())); })
        .def_property_readonly("n", &Algebra::n)
        .def_property_readonly("full_dimension", &Algebra::full_dimension)
        .def("__eq__", &Algebra::operator==)
        .def("__repr__", &Algebra::name);

    py::class_<LieVector>(m, "LieVector")
        .def(py::init<Algebra>(), py::arg("algebra"))
        .def_static(
            "basis",
            [](const Algebra& alg, const std::string& tag, int i, int j, const py::object& coef) {
                return LieVector::basis(alg, {tag_of(tag), i, j}, rational_of(coef));
            },
            py::arg("algebra"), py::arg("tag"), py::arg("i"), py::arg("j"), py::arg("coef") = 1)
        .def_property_readonly("algebra", &LieVector::algebra)
        .def_property_readonly("is_zero", &LieVector::is_zero)
        .def("coefficient", [](const LieVector& v, int i, int j) { return fraction(v.coefficient(i, j)); })
        .def("entry", [](const LieVector& v, int i, int j) { return fraction(v.matrix_entry(i, j)); })
        .def("trace", [](const LieVector& v) { return fraction(v.trace()); })
        .def("__add__", [](const LieVector& a, const LieVector& b) { return a + b; })
        .def("__sub__", [](const LieVector& a, const LieVector& b) { return a - b; })
        .def("__neg__", [](const LieVector& a) { return -a; })
        .def("__rmul__", [](const LieVector& a, const py::object& s) { return rational_of(s) * a; })
        .def("__mul__", [](const LieVector& a, const py::object& s) { return rational_of(s) * a; })
        .def("__eq__", &LieVector::operator==)
        .def("__str__", &LieVector::str)
        .def("__repr__", [](const LieVector& v) { return "LieVector(" + v.algebra().name() + ", " + v.str() + ")"; });

    m.def("bracket", &bracket, py::arg("x"), py::arg("y"));
    m.def("canonical_generators", &canonical_generators, py::arg("algebra"));
    m.def(
        "closure_dimension",
        [](const Algebra& alg, const std::vector<LieVector>& gens) { return closure_dimension(alg, gens); },
        py::arg("algebra"), py::arg("generators"));
    m.def(
        "closure_basis",
        [](const Algebra& alg, const std::vector<LieVector>& gens) { return lie_closure(alg, gens).basis(); },
        py::arg("algebra"), py::arg("generators"));

    py::class_<BilinearSystem>(m, "System")
        .def_property_readonly("algebra", &BilinearSystem::algebra)
        .def_property_readonly("drift", &BilinearSystem::drift)
        .def_property_readonly("controls",
                               [](const BilinearSystem& s) {
                                   std::vector<std::string> out;
                                   for (const auto& c : s.controls()) out.push_back(c.str());
                                   return out;
                               })
        .def_property_readonly("driftless", &BilinearSystem::driftless)
        .def("format", &format_system);

    m.def("parse_system", &parse_system_string, py::arg("text"));
    m.def("check", [](const BilinearSystem& s) { return verdict_dict(check(s)); }, py::arg("system"));
    m.def("larc_oracle", [](const BilinearSystem& s) { return oracle_dict(larc_oracle(s)); }, py::arg("system"));
    m.def(
        "analyze",
        [](const BilinearSystem& s, bool oracle) {
            const Analysis a = analyze(s, oracle);
            py::dict d;
            d["verdict"] = verdict_dict(a.verdict);
            d["oracle"] = a.oracle ? py::object(oracle_dict(*a.oracle)) : py::object(py::none());
            auto h = a.holds();
            d["holds"] = h ? py::object(py::bool_(*h)) : py::object(py::none());
            return d;
        },
        py::arg("system"), py::arg("oracle") = false);
    m.def(
        "report_json",
        [](const BilinearSystem& s, bool oracle) { return report_json(Report{s, analyze(s, oracle), std::nullopt}); },
        py::arg("system"), py::arg("oracle") = false);

    m.attr("__version__") = "0.1.0";
}
