#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frustra/ed.hpp"
#include "frustra/errors.hpp"
#include "frustra/phase_map.hpp"
#include "frustra/spectrum.hpp"
#include "frustra/topology.hpp"
#include "frustra/verification.hpp"

namespace py = pybind11;
using namespace frustra;

namespace {

std::vector<cplx> sorted_energies(const ModelParams& p) {
    auto e = enumerate_spectrum(p).energies();
    sort_lex(e);
    return e;
}

py::dict report_dict(const MatchReport& r) {
    py::dict d;
    d["n_levels"] = r.n_levels;
    d["tolerance"] = r.tolerance;
    d["max_residual"] = r.max_residual;
    d["unmatched"] = r.unmatched;
    d["pass"] = r.pass;
    py::list channels;
    for (const auto& c : r.channel_breakdown) {
        py::dict cd;
        cd["name"] = c.name;
        cd["n_levels"] = c.n_levels;
        cd["max_residual"] = c.max_residual;
        cd["unmatched"] = c.unmatched;
        channels.append(cd);
    }
    d["channels"] = channels;
    return d;
}

} // namespace

PYBIND11_MODULE(_frustra, m) {
    m.doc() = "Exact spectra of the ring-frustrated non-Hermitian XY chain";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<SingularLoopError>(m, "SingularLoopError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<int, double, double, double>(), py::arg("L"), py::arg("gamma"), py::arg("delta"), py::arg("h"))
        .def_property_readonly("L", &ModelParams::L)
        .def_property_readonly("gamma", &ModelParams::gamma)
        .def_property_readonly("delta", &ModelParams::delta)
        .def_property_readonly("h", &ModelParams::h)
        .def_property_readonly("delta_alpha", &ModelParams::delta_alpha)
        .def_property_readonly("delta_beta", &ModelParams::delta_beta)
        .def_property_readonly("gap_product", &ModelParams::gap_product)
        .def("__eq__", [](const ModelParams& a, const ModelParams& b) { return a == b; })
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(L=" + std::to_string(p.L()) + ", gamma=" + py::repr(py::float_(p.gamma())).cast<std::string>() +
                   ", delta=" + py::repr(py::float_(p.delta())).cast<std::string>() +
                   ", h=" + py::repr(py::float_(p.h())).cast<std::string>() + ")";
        });

    py::enum_<PhaseKind>(m, "PhaseKind")
        .value("KinkPlus", PhaseKind::KinkPlus)
        .value("KinkMinus", PhaseKind::KinkMinus)
        .value("Critical", PhaseKind::Critical)
        .value("Paramagnetic", PhaseKind::Paramagnetic)
        .value("TBreaking", PhaseKind::TBreaking);

    m.def("reality_function", &reality_function, py::arg("params"), py::arg("q"));
    m.def("omega", &omega, py::arg("params"), py::arg("q"));
    m.def("f_min", &f_min, py::arg("params"));
    m.def("classify_phase", [](const ModelParams& p) {
        const PhaseLabel l = classify_phase(p);
        return py::make_tuple(l.kind, l.winding_hint);
    }, py::arg("params"), "(PhaseKind, winding hint or None)");
    m.def("hermitian_counterpart", &hermitian_counterpart, py::arg("params"));

    m.def("enumerate_spectrum", &sorted_energies, py::arg("params"),
          "All 2^L analytic levels sorted by (Re, Im).");
    m.def("ed_spectrum", &ed::spectrum, py::arg("params"), py::call_guard<py::gil_scoped_release>(),
          "All 2^L levels by exact diagonalization, sorted by (Re, Im).");
    m.def("ground_manifold", [](const ModelParams& p) {
        const GroundManifold g = ground_manifold(p);
        py::dict d;
        d["energy"] = g.ground.energy;
        d["degeneracy"] = g.degeneracy;
        d["gap"] = g.gap;
        d["channel"] = to_string(g.ground.channel);
        return d;
    }, py::arg("params"));
    m.def("spectral_gap", &spectral_gap, py::arg("params"));
    m.def("channel_match", [](const ModelParams& p) { return report_dict(channel_match(p)); }, py::arg("params"));

    m.def("winding_number", [](const ModelParams& p, int n_grid) {
        const WindingResult w = winding_number(p, n_grid);
        return py::make_tuple(w.value, w.rounded);
    }, py::arg("params"), py::arg("n_grid") = 10000);

    m.def("scan", [](double gamma, std::vector<double> h_values, std::vector<double> delta_values, int L,
                     const std::string& engine) {
        ScanSpec spec;
        spec.gamma = gamma;
        spec.h_axis = Axis{std::move(h_values)};
        spec.delta_axis = Axis{std::move(delta_values)};
        spec.L = L;
        if (engine != "analytic" && engine != "ed")
            throw ParameterError("engine must be 'analytic' or 'ed'");
        spec.engine = engine == "ed" ? Engine::ED : Engine::Analytic;
        std::vector<ScanCell> cells;
        {
            py::gil_scoped_release release;
            cells = scan(spec);
        }
        py::list out;
        for (const auto& c : cells)
            out.append(py::make_tuple(c.h, c.delta, c.im_ground, c.phase.kind));
        return out;
    }, py::arg("gamma"), py::arg("h_values"), py::arg("delta_values"), py::arg("L") = 11,
       py::arg("engine") = "analytic", "Rows of (h, delta, |Im E0|, PhaseKind), delta slow and h fast.");

    m.def("boundary_curves", [](double gamma) {
        py::dict out;
        for (const auto& c : boundary_curves(gamma))
            out[py::str(c.label)] = c.points;
        return out;
    }, py::arg("gamma"));
}
