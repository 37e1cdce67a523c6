#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "loowit/builtin.hpp"
#include "loowit/criteria.hpp"
#include "loowit/loo.hpp"
#include "loowit/states.hpp"
#include "loowit/witness.hpp"

namespace py = pybind11;
using namespace loowit;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Subsystem parse_side(const std::string& side) {
    if (side == "A") return Subsystem::A;
    if (side == "B") return Subsystem::B;
    throw Error("subsystem must be 'A' or 'B'");
}

std::vector<CMatrix> basis_list(const LooBasis& b) {
    return {b.observables().begin(), b.observables().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement criteria built on local orthogonal observables.";
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    // Linear algebra
    m.def("kron", &kron);
    m.def(
        "partial_transpose",
        [](const CMatrix& rho, int da, int db, const std::string& side) {
            return partial_transpose(rho, DimPair(da, db), parse_side(side));
        },
        py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("side") = "B");
    m.def(
        "partial_trace",
        [](const CMatrix& rho, int da, int db, const std::string& side) {
            return partial_trace(rho, DimPair(da, db), parse_side(side));
        },
        py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("side") = "B");
    m.def(
        "realign", [](const CMatrix& rho, int da, int db) { return realign(rho, DimPair(da, db)); },
        py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"));
    m.def("trace_norm", &trace_norm);
    m.def("eigvalsh", [](const CMatrix& h) -> RVector { return herm_eigenvalues(h); });
    m.def("min_eigenvalue", &min_eigenvalue);

    // Bases and transforms
    m.def("standard_basis", [](int d) { return basis_list(standard_basis(d)); });
    m.def("horodecki_a_basis", [](double a) { return basis_list(horodecki_a_basis(a)); });
    m.def("horodecki_b_basis", [] { return basis_list(horodecki_b_basis()); });

    py::class_<OrthTransform>(m, "OrthTransform")
        .def(py::init([](const RMatrix& mat) { return OrthTransform::from_matrix(mat); }), py::arg("matrix"))
        .def_static("identity", &OrthTransform::identity)
        .def_property_readonly("matrix", &OrthTransform::matrix)
        .def_property_readonly("dim", &OrthTransform::dim)
        .def_property_readonly("is_orthogonal", &OrthTransform::is_orthogonal)
        .def("transposed", &OrthTransform::transposed);
    m.def("transpose_transform", &transpose_transform);
    m.def("unitary_transform", &unitary_transform);
    m.def("permutation_transform", [](const std::vector<int>& sigma) {
        return permutation_transform(Permutation(sigma));
    });
    m.def("diag_cycle_transform", [](int d, int l) { return permutation_transform(diag_cycle(d, l)); });

    // States
    py::class_<BipartiteState>(m, "State")
        .def(py::init([](const CMatrix& rho, int da, int db, const std::string& label) {
                 return BipartiteState(DimPair(da, db), rho, label);
             }),
             py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("label") = "")
        .def_property_readonly("rho", &BipartiteState::rho)
        .def_property_readonly("dims", [](const BipartiteState& s) { return std::pair(s.dims().a, s.dims().b); })
        .def_property_readonly("label", &BipartiteState::label)
        .def("__repr__", [](const BipartiteState& s) {
            return "<State " + std::to_string(s.dims().a) + "x" + std::to_string(s.dims().b) + " " + s.label() + ">";
        });
    m.def("builtin_state", [](const std::string& spec) { return make_builtin_state(parse_builtin(spec)); });
    m.def("horodecki_rho", &horodecki_rho);
    m.def("werner2", &werner2);
    m.def("family_rho", [](const std::vector<double>& a) {
        return family_rho(FamilyParams(static_cast<int>(a.size()), a));
    });
    m.def("family_special", [](int d, double a1, double a2) { return family_special(d, a1, a2).a; });
    m.def(
        "random_product_state",
        [](int d, std::uint64_t seed, bool pure) {
            return random_product_state(DimPair(d, d), seed, pure ? ProductMode::Pure : ProductMode::Mixed);
        },
        py::arg("d"), py::arg("seed"), py::arg("pure") = false);
    m.def(
        "random_separable_state",
        [](int d, int k, std::uint64_t seed) { return random_separable_state(DimPair(d, d), k, seed); },
        py::arg("d"), py::arg("k"), py::arg("seed"));
    m.def("load_state", &load_state);
    m.def("save_state", &save_state);

    // Witnesses
    py::class_<Witness>(m, "Witness")
        .def_readonly("op", &Witness::op)
        .def_readonly("candidate_only", &Witness::candidate_only)
        .def_readonly("min_eigenvalue", &Witness::min_eigenvalue)
        .def_property_readonly("kind", [](const Witness& w) { return to_string(w.kind); })
        .def_property_readonly("params", [](const Witness& w) { return to_py(w.params); })
        .def("expectation", [](const Witness& w, const BipartiteState& s) { return expectation(w, s); });
    m.def("horodecki_ew", [](double a) { return horodecki_ew(a).witness; });
    m.def("horodecki_n2", &horodecki_n2);
    m.def("perm_ew", [](const std::vector<int>& sigma) { return perm_ew(Permutation(sigma)); });
    m.def("ew_from_transform", &ew_from_transform);

    // Criteria
    m.def("ppt_check", [](const BipartiteState& s) { return to_py(report_to_json(ppt_check(s))); });
    m.def("correlation_T", &correlation_T);
    m.def("realignment_value", [](const BipartiteState& s) {
        const RealignmentResult r = realignment_value(s);
        py::dict out = to_py(report_to_json(r.report));
        out["realigned_trace_norm"] = r.realigned_norm;
        return out;
    });
    m.def("best_orthogonal", [](const RMatrix& t) { return best_orthogonal(t); });
    m.def("o_reduction", [](const BipartiteState& s, const OrthTransform& o) {
        OReductionResult r = o_reduction_apply(s, o);
        return py::make_tuple(r.reduced, to_py(report_to_json(r.report)));
    });
    m.def("perm_reduction_family", [](const std::vector<double>& a, int l) {
        const PermReductionResult r = perm_reduction_family(FamilyParams(static_cast<int>(a.size()), a), l);
        return py::make_tuple(r.reduced, to_py(report_to_json(r.report)));
    });
    m.def("phi_pairing", [](const BipartiteState& s, const OrthTransform& o) {
        const PhiPairing p = phi_pairing(s, o);
        return py::make_tuple(p.lhs, p.rhs);
    });
    m.def("x_matrix", [](const BipartiteState& s, const OrthTransform& o, const CMatrix& u) {
        return x_matrix(s, o, u).x;
    });
    m.def("x_matrix_ancilla", &x_matrix_ancilla);
    m.def(
        "x_search",
        [](const BipartiteState& s, int budget, std::uint64_t seed) {
            XSearchOptions opts;
            opts.budget = budget;
            opts.seed = seed;
            XSearchResult r;
            {
                py::gil_scoped_release release;
                r = x_search(s, opts);
            }
            py::dict out = to_py(report_to_json(r.report));
            out["u"] = r.u;
            out["o"] = r.o;
            return out;
        },
        py::arg("state"), py::arg("budget") = 200, py::arg("seed") = 0);
    m.def("classify_family_point", [](int d, double a1, double a2) {
        return to_string(classify_family_point(d, a1, a2));
    });
    m.def(
        "full_report",
        [](const BipartiteState& s, bool run_search, int budget, std::uint64_t seed) {
            ReportConfig cfg;
            cfg.run_search = run_search;
            cfg.budget = budget;
            cfg.seed = seed;
            return to_py(full_report_to_json(full_report(s, cfg)));
        },
        py::arg("state"), py::arg("run_search") = true, py::arg("budget") = 200, py::arg("seed") = 0);
}
