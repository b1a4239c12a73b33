#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rcag/arc_graph.hpp"
#include "rcag/calibration.hpp"
#include "rcag/errors.hpp"
#include "rcag/harness.hpp"
#include "rcag/process.hpp"
#include "rcag/randomness_tests.hpp"
#include "rcag/report.hpp"
#include "rcag/theory.hpp"
#include "rcag/thresholds.hpp"

namespace py = pybind11;

namespace {

py::object parse_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

rcag::AngleSeries angles(const std::vector<double>& radians) { return rcag::make_series(radians); }

py::object ep_test(const std::vector<double>& radians, double alpha, std::uint64_t seed,
                   std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairing) {
    rcag::EpOptions opts;
    if (pairing) {
        opts.pairing = std::vector<rcag::VertexPair>(pairing->begin(), pairing->end());
    }
    rcag::TestOutcome out;
    {
        py::gil_scoped_release release;
        out = rcag::ep_test(angles(radians), alpha, {seed, 0}, opts);
    }
    return parse_json(rcag::to_json(out));
}

py::object dd_test(const std::vector<double>& radians, double alpha, const std::string& thresholds) {
    const auto table = rcag::resolve_threshold_table(thresholds);
    return parse_json(rcag::to_json(rcag::dd_test(angles(radians), alpha, table)));
}

py::dict build_graph(const std::vector<double>& radians) {
    const auto g = rcag::build_rcag(angles(radians));
    const auto st = rcag::graph_stats(g);
    py::list arcs;
    for (const auto& a : g.arcs) {
        arcs.append(py::make_tuple(a.start.value(), a.end.value()));
    }
    py::dict d;
    d["n"] = g.n();
    d["arcs"] = arcs;
    d["degrees"] = g.degrees;
    d["edges"] = g.edge_count;
    d["min_degree"] = st.min_degree;
    d["max_degree"] = st.max_degree;
    d["connected"] = st.connected;
    return d;
}

bool arcs_intersect(double s1, double e1, double s2, double e2) {
    using rcag::Angle;
    return rcag::arcs_intersect(rcag::make_arc(Angle::from_radians(s1), Angle::from_radians(e1)),
                                rcag::make_arc(Angle::from_radians(s2), Angle::from_radians(e2)));
}

std::vector<double> generate(const std::string& process, std::size_t m, std::uint64_t seed) {
    const auto spec = rcag::parse_process_spec(process);
    return rcag::to_radians(rcag::generate(spec, m, {seed, 0}));
}

py::list calibrate(std::size_t m, const std::vector<double>& alphas, std::size_t k, std::uint64_t seed,
                   unsigned workers) {
    std::vector<rcag::ThresholdEntry> entries;
    {
        py::gil_scoped_release release;
        entries = rcag::calibrate_threshold(m, alphas, k, {seed, 0}, workers);
    }
    py::list out;
    for (const auto& e : entries) {
        py::dict d;
        d["m"] = e.m;
        d["alpha"] = e.alpha;
        d["c"] = e.c;
        d["k"] = e.k;
        d["seed"] = e.seed;
        out.append(d);
    }
    return out;
}

py::object power(const std::string& process, std::size_t m, std::size_t replicates, double alpha,
                 const std::string& test, std::uint64_t seed, unsigned workers, const std::string& thresholds) {
    rcag::PowerConfig c;
    c.process = process;
    c.m = m;
    c.replicates = replicates;
    c.alpha = alpha;
    c.test = test;
    c.seed = {seed, 0};
    c.workers = workers;
    const auto table = test == "dd" ? rcag::resolve_threshold_table(thresholds) : rcag::ThresholdTable{};
    rcag::PowerReport r;
    {
        py::gil_scoped_release release;
        r = rcag::run_power(c, table);
    }
    return parse_json(rcag::to_json(r));
}

py::object validate_theory(std::uint64_t seed, std::size_t draws, unsigned workers) {
    rcag::TheoryValidation v;
    {
        py::gil_scoped_release release;
        v = rcag::validate_theory({seed, 0}, draws, workers);
    }
    return parse_json(rcag::to_json(v));
}

}  // namespace

PYBIND11_MODULE(_rcag, m) {
    m.doc() = "Random circular-arc graph randomness tests for circular time series";

    py::register_exception<rcag::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<rcag::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<rcag::VersionError>(m, "VersionError", PyExc_ValueError);
    py::register_exception<rcag::MissingThreshold>(m, "MissingThreshold", PyExc_LookupError);

    m.def("ep_test", &ep_test, py::arg("angles"), py::arg("alpha") = 0.05, py::arg("seed") = 0,
          py::arg("pairing") = py::none(), "Edge-probability test; returns the JSON report as a dict.");
    m.def("dd_test", &dd_test, py::arg("angles"), py::arg("alpha") = 0.05, py::arg("thresholds") = "bundled",
          "Degree-distribution test; thresholds is 'bundled', 'reference' or a file path.");
    m.def("dd_statistic", [](const std::vector<double>& r) { return rcag::dd_statistic(angles(r)); },
          py::arg("angles"));
    m.def("build_graph", &build_graph, py::arg("angles"));
    m.def("arcs_intersect", &arcs_intersect, py::arg("start1"), py::arg("end1"), py::arg("start2"),
          py::arg("end2"));
    m.def("degree_cdf", &rcag::theoretical_degree_cdf, py::arg("x"));
    m.def("degree_pmf", [](std::size_t n) { return rcag::theoretical_degree_pmf(n).pmf; }, py::arg("n"));
    m.def("generate", &generate, py::arg("process"), py::arg("m"), py::arg("seed") = 0);
    m.def("calibrate", &calibrate, py::arg("m"), py::arg("alphas") = std::vector<double>{0.1, 0.05, 0.01},
          py::arg("k") = 1000, py::arg("seed") = 0, py::arg("workers") = 1);
    m.def("power", &power, py::arg("process"), py::arg("m") = 1000, py::arg("replicates") = 1000,
          py::arg("alpha") = 0.05, py::arg("test") = "dd", py::arg("seed") = 0, py::arg("workers") = 1,
          py::arg("thresholds") = "bundled");
    m.def("validate_theory", &validate_theory, py::arg("seed") = 0, py::arg("draws") = rcag::kDefaultTheoryDraws,
          py::arg("workers") = 1);
}
