/**
 * @file pykacmod.cpp
 * @brief Python bindings exposing the main kacmod operations.
 */
#include <kacmod/bundle.hpp>
#include <kacmod/classical.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

kacmod::HighestWeight to_hw(const std::array<double, 3>& hw) {
    return {hw[0], hw[1], hw[2]};
}

py::dict module_to_dict(const kacmod::ModuleRep& rep) {
    py::dict out;
    out["dim"] = rep.dim();
    out["parity"] = rep.parity;
    py::list basis;
    for (const auto& v : rep.basis) {
        py::dict b;
        b["k"] = v.k;
        b["m11"] = v.m11;
        basis.append(b);
    }
    out["basis"] = basis;
    py::dict mats;
    for (kacmod::Gen g : kacmod::all_generators) {
        const auto& m = rep.at(g);
        py::list rows;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            py::list row;
            for (std::size_t c = 0; c < m.cols(); ++c) row.append(m(r, c));
            rows.append(row);
        }
        mats[kacmod::generator_name(g)] = rows;
    }
    out["matrices"] = mats;
    return out;
}

} // namespace

PYBIND11_MODULE(_kacmod, m) {
    m.doc() = "Induced modules of the q-deformed general linear superalgebra "
              "gl(2/1): matrices, relation checks, classification";

    m.def(
        "qbracket",
        [](double q, double x) { return kacmod::qbracket(kacmod::QContext(q), x); },
        py::arg("q"), py::arg("x"), "q-number (q^x - q^-x)/(q - q^-1)");

    m.def(
        "qbracket_sqrt",
        [](double q, double x) { return kacmod::qbracket_sqrt(kacmod::QContext(q), x); },
        py::arg("q"), py::arg("x"), "square root of the q-number");

    m.def(
        "classify",
        [](const std::array<double, 3>& hw) {
            const auto cls = kacmod::classify(to_hw(hw));
            py::dict out;
            out["kind"] = std::string(kacmod::kind_name(cls.kind));
            out["c1"] = cls.c1;
            out["c2"] = cls.c2;
            out["dim"] = 4 * kacmod::gl2_width(to_hw(hw));
            return out;
        },
        py::arg("hw"), "typicality classification of a highest weight");

    m.def(
        "full_module_basis",
        [](const std::array<double, 3>& hw) {
            py::list out;
            for (const auto& v : kacmod::full_module_basis(to_hw(hw))) {
                py::dict b;
                b["k"] = v.k;
                b["m11"] = v.m11;
                b["parity"] = kacmod::floor_parity(v.k);
                out.append(b);
            }
            return out;
        },
        py::arg("hw"), "ordered basis labels (floor index and bottom entry)");

    m.def(
        "build_module",
        [](const std::array<double, 3>& hw, double q, const std::array<double, 3>& a,
           bool factor) {
            const kacmod::QContext ctx(q);
            const auto rep = factor ? kacmod::factor_module(ctx, to_hw(hw), a)
                                    : kacmod::build_module(ctx, to_hw(hw), a);
            return module_to_dict(rep);
        },
        py::arg("hw"), py::arg("q") = 1.7,
        py::arg("a") = std::array<double, 3>{1.0, 1.0, 1.0},
        py::arg("factor") = false,
        "generator matrices over the ordered basis, as nested lists");

    m.def(
        "check_module",
        [](const std::array<double, 3>& hw, double q, const std::array<double, 3>& a,
           bool factor, double tol) {
            const kacmod::QContext ctx(q, tol);
            const auto rep = factor ? kacmod::factor_module(ctx, to_hw(hw), a)
                                    : kacmod::build_module(ctx, to_hw(hw), a);
            py::list out;
            for (const auto& r : kacmod::check_all(ctx, rep)) {
                py::dict d;
                d["relation"] = r.relation_id;
                d["max_residual"] = r.max_residual;
                d["scale"] = r.scale;
                d["passed"] = r.passed;
                out.append(d);
            }
            return out;
        },
        py::arg("hw"), py::arg("q") = 1.7,
        py::arg("a") = std::array<double, 3>{1.0, 1.0, 1.0},
        py::arg("factor") = false, py::arg("tol") = 1e-10,
        "defining-relation reports for one module");

    m.def(
        "bundle_json",
        [](const std::array<double, 3>& hw, double q, const std::array<double, 3>& a,
           bool factor) {
            const kacmod::QContext ctx(q);
            return kacmod::serialize(kacmod::make_bundle(ctx, to_hw(hw), a, factor));
        },
        py::arg("hw"), py::arg("q") = 1.7,
        py::arg("a") = std::array<double, 3>{1.0, 1.0, 1.0},
        py::arg("factor") = false, "deterministic JSON export of a module");

    m.def(
        "limit_compare",
        [](const std::array<double, 3>& hw, double q_near_one) {
            return kacmod::limit_compare(to_hw(hw), q_near_one);
        },
        py::arg("hw"), py::arg("q_near_one") = 1.0 + 1e-8,
        "largest deviation between the deformed and undeformed matrices");
}
