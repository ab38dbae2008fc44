#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pohst/certificate.hpp"
#include "pohst/numbertheory.hpp"
#include "pohst/partition.hpp"
#include "pohst/search.hpp"

namespace py = pybind11;
using namespace pohst;

namespace {

SignPattern to_pattern(const std::vector<int>& signs) {
    return SignPattern::from_ints(signs);
}

py::list terms(const NonCanonicalSet& J) {
    py::list out;
    for (const auto& m : J.members()) out.append(py::make_tuple(m.index.i, m.index.j, to_int(m.sign)));
    return out;
}

py::dict bound_dict(const BoundResult& r) {
    py::dict d;
    d["m"] = r.m;
    d["regulator"] = r.regulator;
    d["hermite"] = r.hermite;
    d["hermite_source"] = std::string(to_string(r.hermite_source));
    d["remak_bound"] = r.remak_bound;
    d["improved_bound"] = r.improved_bound;
    d["improvement"] = r.improvement;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pohst, m) {
    m.doc() = "Good-partition certificates and numeric checks for f_n";

    py::register_exception<ConstructionFailure>(m, "ConstructionFailure", PyExc_RuntimeError);
    py::register_exception<CertificateFormatError>(m, "CertificateFormatError", PyExc_ValueError);

    m.def("eval_f", [](const std::vector<double>& x) { return eval_f(Vector(x)); }, py::arg("x"));
    m.def("theorem_bound", &theorem_bound, py::arg("n"));
    m.def(
        "noncanonical_set", [](const std::vector<int>& p) { return terms(noncanonical_set(to_pattern(p))); },
        py::arg("pattern"), "Non-canonical pairs as (i, j, sign) in construction order.");
    m.def(
        "certify",
        [](const std::vector<int>& p) {
            return serialize_certificate(make_certificate(build_good_partition(to_pattern(p)).partition));
        },
        py::arg("pattern"), "Certificate JSON for a sign pattern of +1/-1 entries.");
    m.def(
        "check_certificate",
        [](const std::string& text) {
            const auto v = validate_partition(parse_certificate(text).partition);
            return py::make_tuple(v.accepted, v.reason);
        },
        py::arg("text"), "(accepted, reason) for a certificate JSON string.");
    m.def(
        "sweep", [](int n, int jobs) { return to_json(sweep_patterns(n, jobs)); }, py::arg("n"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "maximize",
        [](int n, double grid_step, int refine_iters, int starts, std::uint64_t seed) {
            MaximizeOptions o;
            o.grid_step = grid_step;
            o.refine_iters = refine_iters;
            o.starts = starts;
            o.seed = seed;
            return to_json(maximize_f(n, o));
        },
        py::arg("n"), py::arg("grid_step") = 0.25, py::arg("refine_iters") = 3, py::arg("starts") = 64,
        py::arg("seed") = 42, py::call_guard<py::gil_scoped_release>());
    m.def(
        "sample_domination",
        [](int n, std::uint64_t samples, std::uint64_t seed, bool blockwise) {
            return to_json(sample_domination(n, samples, seed, blockwise));
        },
        py::arg("n"), py::arg("samples") = 100000, py::arg("seed") = 42, py::arg("blockwise") = false,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "enumerate_maximizers",
        [](int n) {
            std::vector<std::vector<double>> out;
            for (const auto& v : enumerate_maximizers(n)) out.emplace_back(v.coords().begin(), v.coords().end());
            return out;
        },
        py::arg("n"));
    m.def(
        "hermite_constant",
        [](int d) {
            const auto h = hermite_constant(d);
            return py::make_tuple(h.value, std::string(to_string(h.source)));
        },
        py::arg("d"));
    m.def(
        "compare_bounds",
        [](int m_, double regulator, std::optional<double> gamma) {
            const auto in = gamma ? RegulatorInput::with_gamma(m_, regulator, *gamma)
                                  : RegulatorInput::with_table(m_, regulator);
            return bound_dict(compare_bounds(in));
        },
        py::arg("m"), py::arg("regulator"), py::arg("gamma") = py::none());
}
