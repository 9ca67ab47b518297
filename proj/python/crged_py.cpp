#include "crged/cli.hpp"
#include "crged/crg.hpp"
#include "crged/curves.hpp"
#include "crged/edit_oracle.hpp"
#include "crged/errors.hpp"
#include "crged/gsolver.hpp"
#include "crged/spectrum.hpp"
#include "crged/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace crged;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may also be int or "a/b".
py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    const auto builtin_int = py::module_::import("builtins").attr("int");
    return fraction(builtin_int(q.get_num().get_str()), builtin_int(q.get_den().get_str()));
}

Rational from_py(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::list fractions(const std::vector<Rational>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_fraction(x));
    return out;
}

Crg crg_from(const std::string& text) { return text.rfind("crg v1", 0) == 0 ? parse_crg(text) : parse_compact_crg(text); }

} // namespace

PYBIND11_MODULE(_crged, m) {
    m.doc() = "Edit distance functions of hereditary graph properties via colored regularity graphs";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def(
        "graph", [](const std::string& spec) { return to_graph6(parse_graph_spec(spec)); }, py::arg("spec"),
        "graph6 string of a family spec such as 'cycle:8', or of a graph6 input.");

    m.def(
        "has_induced",
        [](const std::string& host, const std::string& pattern) -> py::object {
            const auto w = find_induced(parse_graph_spec(host), parse_graph_spec(pattern));
            if (!w) return py::none();
            return py::cast(*w);
        },
        py::arg("host"), py::arg("pattern"));

    m.def(
        "g_value",
        [](const std::string& crg, const py::object& p) {
            const auto res = g_value(crg_from(crg), from_py(p));
            py::dict out;
            out["value"] = to_fraction(res.value);
            out["weights"] = fractions(res.weights);
            out["support"] = res.support;
            return out;
        },
        py::arg("crg"), py::arg("p"), "g_K(p) with an optimal weight vector; crg in compact or 'crg v1' form.");

    m.def(
        "closed_form_gray",
        [](std::size_t r, std::size_t s, const py::object& p) { return to_fraction(closed_form_gray(r, s, from_py(p))); },
        py::arg("r"), py::arg("s"), py::arg("p"));

    m.def(
        "is_p_core", [](const std::string& crg, const py::object& p) { return is_p_core(crg_from(crg), from_py(p)); },
        py::arg("crg"), py::arg("p"));

    m.def(
        "embeds",
        [](const std::string& graph, const std::string& crg) -> py::object {
            const auto map = embeds(parse_graph_spec(graph), crg_from(crg));
            if (!map) return py::none();
            return py::cast(*map);
        },
        py::arg("graph"), py::arg("crg"), "A map V(H) -> V(K) witnessing H -> K, or None.");

    m.def(
        "extreme_points",
        [](const std::string& graph) {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const auto& pt : extreme_points(clique_spectrum(parse_graph_spec(graph))))
                out.emplace_back(pt.white, pt.black);
            return out;
        },
        py::arg("graph"));

    m.def(
        "gamma", [](const std::string& graph, const py::object& p) { return to_fraction(gamma(parse_graph_spec(graph), from_py(p))); },
        py::arg("graph"), py::arg("p"));

    m.def(
        "theorem_value",
        [](const std::string& family, std::size_t n, const py::object& p) {
            return to_fraction(theorem_value(parse_theorem_family(family), n, from_py(p)));
        },
        py::arg("family"), py::arg("n"), py::arg("p"));

    m.def(
        "bounded_min_g",
        [](const std::string& graph, std::size_t max_size, const py::object& p, bool long_running) {
            const auto res = bounded_min_g(parse_graph_spec(graph), max_size, from_py(p), long_running);
            std::vector<std::string> witnesses;
            for (const auto& k : res.witnesses) witnesses.push_back(to_compact(k));
            return py::make_tuple(to_fraction(res.value), witnesses);
        },
        py::arg("graph"), py::arg("max_size"), py::arg("p"), py::arg("long_running") = false);

    m.def(
        "edit_distance",
        [](const std::string& graph, const std::string& forbidden, std::uint64_t node_limit) {
            const auto res = edit_distance(parse_graph_spec(graph), parse_graph_spec(forbidden), {node_limit});
            return py::make_tuple(res.edits, to_fraction(res.normalized), to_graph6(res.witness));
        },
        py::arg("graph"), py::arg("forbidden"), py::arg("node_limit") = 20'000'000);

    m.def(
        "max_dist_estimate",
        [](std::size_t n, const py::object& p, const std::string& forbidden, std::size_t samples, std::uint64_t seed,
           std::size_t jobs) {
            const auto res = max_dist_estimate(n, from_py(p), parse_graph_spec(forbidden), samples, seed, {}, jobs);
            return py::make_tuple(to_fraction(res.max_normalized), res.sample_index, to_graph6(res.witness), res.skipped);
        },
        py::arg("n"), py::arg("p"), py::arg("forbidden"), py::arg("samples"), py::arg("seed"), py::arg("jobs") = 1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::main_entry(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line with the given arguments; returns (exit_code, stdout, stderr).");
}
