#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lapmult/canonical.hpp"
#include "lapmult/enumerate.hpp"
#include "lapmult/errors.hpp"
#include "lapmult/numeric.hpp"
#include "lapmult/report.hpp"
#include "lapmult/structure.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const lapmult::json& j) {
    using lapmult::json;
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

lapmult::MultiplicityPredicate predicate(bool literal) {
    return literal ? lapmult::MultiplicityPredicate::Literal
                   : lapmult::MultiplicityPredicate::MaxMultiplicity;
}

}  // namespace

PYBIND11_MODULE(_lapmult, m) {
    m.doc() = "Laplacian spectrum multiplicity toolkit";

    py::register_exception<lapmult::ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<lapmult::LimitError>(m, "LimitError", PyExc_RuntimeError);

    py::class_<lapmult::Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("order"))
        .def("order", &lapmult::Graph::order)
        .def("edge_count", &lapmult::Graph::edge_count)
        .def("has_edge", &lapmult::Graph::has_edge)
        .def("add_edge", &lapmult::Graph::add_edge)
        .def("degrees", &lapmult::Graph::degrees)
        .def("__eq__", [](const lapmult::Graph& a, const lapmult::Graph& b) { return a == b; })
        .def("__repr__",
             [](const lapmult::Graph& g) { return "Graph('" + lapmult::to_graph6(g) + "')"; });

    m.def("version", [] { return std::string(lapmult::kVersion); });
    m.def("from_graph6", &lapmult::from_graph6, py::arg("text"));
    m.def("to_graph6", &lapmult::to_graph6, py::arg("graph"));
    m.def("family", &lapmult::family, py::arg("name"), py::arg("params") = std::vector<int>{});
    m.def("families", [] { return to_py(lapmult::families_json()); });
    m.def("complement", &lapmult::complement);
    m.def("disjoint_union", &lapmult::disjoint_union);
    m.def("join", &lapmult::join);
    m.def("is_isomorphic", &lapmult::is_isomorphic);
    m.def("canonical_graph6",
          [](const lapmult::Graph& g) { return to_graph6(canonical_representative(g)); });
    m.def("is_connected", &lapmult::is_connected);
    m.def("is_cograph", &lapmult::is_cograph);
    m.def("diameter", &lapmult::diameter);
    m.def("numeric_eigenvalues", &lapmult::numeric_laplacian_eigenvalues);

    m.def(
        "spectrum", [](const lapmult::Graph& g) { return to_py(lapmult::spectrum_report(g)); },
        py::arg("graph"));
    m.def(
        "classify",
        [](const lapmult::Graph& g, bool literal) {
            return to_py(lapmult::classification_json(lapmult::classify(g, predicate(literal))));
        },
        py::arg("graph"), py::arg("literal") = false);
    m.def(
        "catalog", [](int n, int k) { return to_py(lapmult::catalog_json(n, k)); }, py::arg("n"),
        py::arg("k"));
    m.def(
        "verify_theorem",
        [](int n, int jobs, bool skip_dls, bool stretch_n9, const std::string& cache_dir,
           bool literal) {
            lapmult::VerifyOptions opts;
            opts.jobs = jobs;
            opts.skip_dls = skip_dls;
            opts.allow_order9 = stretch_n9;
            opts.cache_dir = cache_dir;
            opts.predicate = predicate(literal);
            return to_py(lapmult::summary_json(lapmult::verify_theorem(n, opts)));
        },
        py::arg("n"), py::arg("jobs") = 1, py::arg("skip_dls") = false,
        py::arg("stretch_n9") = false, py::arg("cache_dir") = std::string(),
        py::arg("literal") = false);
    m.def(
        "all_graphs6",
        [](int n) {
            std::vector<std::string> out;
            for (const lapmult::Graph& g : lapmult::all_graphs(n)) out.push_back(to_graph6(g));
            return out;
        },
        py::arg("n"));
    m.def(
        "connected_graphs6",
        [](int n) {
            std::vector<std::string> out;
            for (const lapmult::Graph& g : lapmult::connected_graphs(n))
                out.push_back(to_graph6(g));
            return out;
        },
        py::arg("n"));
}
