#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "onsager/characters.hpp"
#include "onsager/error.hpp"
#include "onsager/onsager.hpp"
#include "onsager/parallel.hpp"
#include "onsager/serre.hpp"

namespace py = pybind11;
using namespace onsager;

namespace {

py::object to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

py::object to_py(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.str());
}

std::vector<py::object> row_to_py(const CoeffRow& row) {
    std::vector<py::object> out;
    for (const auto& c : row.c) out.push_back(to_py(c));
    return out;
}

int window_or_default(const Realization& rz, std::optional<int> H) { return H.value_or(default_character_window(rz)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized Onsager algebras: exact relations, realizations and characters.";

    py::register_exception<Error>(m, "OnsagerError", PyExc_ValueError);

    m.def("presets", &preset_names);
    m.def("thread_count", &thread_count);
    m.def("set_thread_count", &set_thread_count, py::arg("n"));

    py::class_<CartanMatrix>(m, "CartanMatrix")
        .def(py::init([](const IntMatrix& rows) { return CartanMatrix::validate(rows); }), py::arg("rows"))
        .def_static("preset", [](const std::string& name) { return preset(name); }, py::arg("name"))
        .def_static("parse", [](const std::string& text) { return CartanMatrix::validate(parse_matrix_text(text)); })
        .def_property_readonly("entries", &CartanMatrix::entries)
        .def_property_readonly("kind", [](const CartanMatrix& c) { return std::string(to_string(c.kind())); })
        .def_property_readonly("type_name", &CartanMatrix::type_name)
        .def_property_readonly("symmetrizer", &CartanMatrix::symmetrizer)
        .def_property_readonly("label_base", &CartanMatrix::label_base)
        .def("__len__", &CartanMatrix::size)
        .def("__getitem__", [](const CartanMatrix& c, std::pair<std::size_t, std::size_t> ij) {
            if (ij.first >= c.size() || ij.second >= c.size()) throw py::index_error();
            return c(ij.first, ij.second);
        })
        .def("__eq__", [](const CartanMatrix& a, const CartanMatrix& b) { return a.entries() == b.entries(); })
        .def("__repr__", [](const CartanMatrix& c) {
            return "CartanMatrix(" + (c.type_name().empty() ? std::string("?") : c.type_name()) + ", " +
                   format_matrix_text(c.entries()) + ")";
        });

    m.def("coeff_row", [](long a, unsigned r) { return row_to_py(coeff_row(a, r)); }, py::arg("a"), py::arg("r"));
    m.def("coeff_table", [](long a, unsigned rmax) {
        std::vector<std::vector<py::object>> out;
        for (const auto& row : coeff_table(a, rmax)) out.push_back(row_to_py(row));
        return out;
    }, py::arg("a"), py::arg("rmax"));
    m.def("serre_relation", [](const CartanMatrix& c, int i, int j) { return serre_relation(c, i, j).str(); });
    m.def("serre_relation_text", &serre_relation_text);
    m.def("even_column_set", &even_column_set);

    py::class_<Realization>(m, "Realization")
        .def(py::init([](const CartanMatrix& c) { return Realization::for_cartan(c); }), py::arg("cartan"))
        .def_property_readonly("kind", [](const Realization& rz) { return rz.kind() == RealizationKind::Finite ? "finite" : "affine"; })
        .def_property_readonly("cartan", &Realization::cartan)
        .def_property_readonly("delta_height", &Realization::delta_height)
        .def("fix_basis", [](const Realization& rz, int H) {
            std::vector<std::string> out;
            for (const auto& idx : rz.fix_basis(H)) out.push_back(idx.str());
            return out;
        }, py::arg("H"))
        .def("eval", [](const Realization& rz, const std::string& expr) {
            py::dict out;
            for (const auto& [idx, c] : to_y_basis(rz.table(), psi_eval(rz, parse_bracket(expr)))) out[py::str(idx.str())] = to_py(c);
            return out;
        }, py::arg("expr"), "psi-image of a bracket expression in B_i, expanded in the y-basis.")
        .def("check_relations", [](const Realization& rz) {
            py::list out;
            for (const auto& r : check_relations(rz))
                out.append(py::dict(py::arg("i") = r.i, py::arg("j") = r.j, py::arg("relation") = r.relation, py::arg("ok") = r.ok));
            return out;
        })
        .def("filtration_dims", [](const Realization& rz, unsigned jmax, bool all_words) {
            py::gil_scoped_release release;
            auto rep = filtration_dims(rz, jmax, all_words ? WordMode::AllWords : WordMode::RightNested);
            return std::pair(std::vector<std::size_t>(rep.dims.begin() + 1, rep.dims.end()),
                             std::vector<std::size_t>(rep.expected.begin() + 1, rep.expected.end()));
        }, py::arg("jmax"), py::arg("all_words") = false, "(dims, expected) for j = 1..jmax.")
        .def("generation_ok", [](const Realization& rz, unsigned H) { return generation_check(rz, H).ok(); }, py::arg("H"))
        .def("character_dimension", [](const Realization& rz, std::optional<int> H) {
            return character_space(rz, window_or_default(rz, H)).dimension();
        }, py::arg("H") = py::none())
        .def("character", [](const Realization& rz, const std::map<int, std::string>& values, std::optional<int> H) {
            std::map<int, GaussianRational> gens;
            for (const auto& [k, v] : values) gens.emplace(k, GaussianRational::parse(v));
            auto chi = character_from_generators(rz, character_space(rz, window_or_default(rz, H)), gens);
            std::map<std::string, std::string> out;
            for (const auto& [idx, v] : chi.values) out.emplace(idx.str(), v.str());
            return out;
        }, py::arg("values"), py::arg("H") = py::none(),
           "Character with chi(Y_j) = values[j]; values are strings such as \"3/2\" or \"1-2i\".");
}
