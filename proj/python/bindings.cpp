#include "krc/branching.hpp"
#include "krc/fermionic.hpp"
#include "krc/iso_check.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/norms.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace krc;

namespace {

std::vector<std::string> weight_coords(const Weight& w) {
    std::vector<std::string> out;
    for (int i = 0; i < w.size(); ++i) out.push_back(rational_str(w.coord(i)));
    return out;
}

py::dict report(const CheckReport& r) {
    py::dict d;
    d["pass"] = r.pass;
    d["checked"] = r.checked;
    d["failures"] = r.failures;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kirillov-Reshetikhin crystals of types D_n^(1), B_n^(1), A_{2n-1}^(2)";

    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<AmbiguousMatching>(m, "AmbiguousMatching", PyExc_RuntimeError);

    py::class_<KRCrystal>(m, "KRCrystal")
        .def_static(
            "build",
            [](const std::string& type, int r, int s, int max_vertices) {
                return KRCrystal::build(AffineType::parse(type), r, s, max_vertices);
            },
            py::arg("type"), py::arg("r"), py::arg("s"), py::arg("max_vertices") = 200000)
        .def_property_readonly("type", [](const KRCrystal& k) { return k.type().name(); })
        .def_property_readonly("r", &KRCrystal::r)
        .def_property_readonly("s", &KRCrystal::s)
        .def_property_readonly("rank", &KRCrystal::rank)
        .def("__len__", &KRCrystal::size)
        .def("word", [](const KRCrystal& k, int v) { return word_str(k.graph().words.at(v)); })
        .def("find",
             [](const KRCrystal& k, const std::vector<int>& letters) {
                 Word w(letters.begin(), letters.end());
                 const int v = k.graph().find(w);
                 return v < 0 ? std::optional<int>() : std::optional<int>(v);
             })
        .def("e", &KRCrystal::e)
        .def("f", &KRCrystal::f)
        .def("eps", &KRCrystal::eps)
        .def("phi", &KRCrystal::phi)
        .def("sigma", &KRCrystal::sigma)
        .def("weight", [](const KRCrystal& k, int v) { return weight_coords(k.weight(v)); })
        .def("affine_weight", &KRCrystal::affine_weight)
        .def("level", &KRCrystal::level)
        .def("decompose", &KRCrystal::decompose, py::arg("colors"))
        .def("to_json", &KRCrystal::to_json)
        .def("to_dot", &KRCrystal::to_dot);

    m.def("check_axioms", [](const KRCrystal& k) { return report(check_axioms(k.type(), k.graph())); });
    m.def("check_sigma", [](const KRCrystal& k) { return report(check_sigma(k)); });
    m.def("check_containment", [](const KRCrystal& k) { return report(check_containment(k)); });
    m.def("verify_rigidity", [](const KRCrystal& k) {
        const RigidityReport r = verify_prop61(k.type(), k.graph());
        py::dict d;
        d["pass"] = r.pass();
        d["automorphisms"] = r.automorphisms;
        d["witness"] = r.witness;
        return d;
    });
    m.def("graph_to_dot", &graph_to_dot);

    m.def("decompose_diagrammatic", [](const std::string& type, int r, int s) {
        std::vector<std::vector<std::string>> out;
        for (const Weight& w : decompose_diagrammatic(AffineType::parse(type), r, s)) out.push_back(weight_coords(w));
        return out;
    });
    m.def("fermionic_table", [](const std::string& type, int r, int s) {
        py::list out;
        for (const FermionicRow& row : fermionic_table(AffineType::parse(type), r, s)) {
            py::dict d;
            d["lambda"] = weight_coords(row.lambda);
            d["N"] = py::int_(py::str(row.N.str()));
            d["M"] = py::int_(py::str(row.M.str()));
            out.append(d);
        }
        return out;
    });
    m.def(
        "norm_u",
        [](const std::string& type, int r, int s, const CVector& c) {
            return norm_u(NormInput{AffineType::parse(type), r, s, c, std::nullopt}).str();
        },
        py::arg("type"), py::arg("r"), py::arg("s"), py::arg("c"));
    m.def(
        "norm_eu",
        [](const std::string& type, int r, int s, const CVector& c, int j) {
            return norm_eu(NormInput{AffineType::parse(type), r, s, c, j}).str();
        },
        py::arg("type"), py::arg("r"), py::arg("s"), py::arg("c"), py::arg("j"));
    m.def("norm_sweep", [](int n_max, int s_max) { return norm_sweep(n_max, s_max).to_json(); });
}
