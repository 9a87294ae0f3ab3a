#include "frustra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <variant>

#include "frustra/ed.hpp"
#include "frustra/errors.hpp"
#include "frustra/parallel.hpp"
#include "frustra/spectrum.hpp"
#include "frustra/topology.hpp"
#include "frustra/verification.hpp"

namespace frustra::cli {

namespace {

using nlohmann::json;
using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c))
        return format_number(*d);
    if (const auto* i = std::get_if<long long>(&c))
        return std::to_string(*i);
    return std::get<std::string>(c);
}

json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c))
        return std::isfinite(*d) ? json(*d) : json(nullptr);
    if (const auto* i = std::get_if<long long>(&c))
        return *i;
    return std::get<std::string>(c);
}

void write_table(std::ostream& os, const Table& t, Format format, const json& meta, bool inline_meta) {
    if (format == Format::Json) {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json row = json::array();
            for (const auto& c : r)
                row.push_back(cell_json(c));
            rows.push_back(std::move(row));
        }
        os << json{{"metadata", meta}, {"columns", t.columns}, {"rows", rows}}.dump(2) << '\n';
        return;
    }
    if (inline_meta)
        os << "# " << meta.dump() << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << cell_text(r[i]);
        os << '\n';
    }
}

// Writes to stdout (metadata as a leading comment line) or to a file plus a
// <path>.meta.json sidecar.
void emit(const std::string& path, const Table& t, Format format, const json& meta) {
    if (path == "-") {
        write_table(std::cout, t, format, meta, true);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParameterError("cannot open output file " + path);
    write_table(out, t, format, meta, false);
    std::ofstream side(path + ".meta.json", std::ios::binary);
    if (!side)
        throw ParameterError("cannot open metadata sidecar " + path + ".meta.json");
    side << meta.dump(2) << '\n';
}

std::string_view command_name(Command c) {
    switch (c) {
    case Command::Spectrum: return "spectrum";
    case Command::Verify: return "verify";
    case Command::PhaseDiagram: return "phase-diagram";
    case Command::Winding: return "winding";
    case Command::Bloch: return "bloch";
    case Command::GapScan: return "gap-scan";
    }
    return "?";
}

std::string_view engine_name(Engine e) { return e == Engine::Analytic ? "analytic" : "ed"; }

json base_metadata(const RunConfig& c) {
    json m{{"tool", "frustra"},
           {"version", std::string(kToolVersion)},
           {"command", std::string(command_name(c.command))},
           {"gamma", c.gamma},
           {"L", c.L},
           {"delta", c.delta},
           {"h", c.h},
           {"engine", std::string(engine_name(c.engine))},
           {"float_format", "%.17g"},
           {"basis", "bit j = 1 means spin j down; fermion number = number of up spins"}};
    if (c.h_sweep)
        m["grid"]["h_axis"] = {{"spec", c.h_sweep->to_string()}, {"inverse", c.h_sweep_inverse}};
    if (c.delta_sweep)
        m["grid"]["delta_axis"] = {{"spec", c.delta_sweep->to_string()}};
    return m;
}

int single_L(const RunConfig& c) {
    if (c.L.size() != 1)
        throw ParameterError("this command takes a single --L");
    return c.L.front();
}

double single(const std::vector<double>& v, const char* name) {
    if (v.size() != 1)
        throw ParameterError(std::string("this command takes a single --") + name);
    return v.front();
}

// (x, h) pairs of the h sweep, x being the swept coordinate.
std::vector<std::pair<double, double>> h_points(const RunConfig& c) {
    if (!c.h_sweep)
        return {{c.h.front(), c.h.front()}};
    std::vector<std::pair<double, double>> pts;
    for (double x : c.h_sweep->axis().values) {
        if (c.h_sweep_inverse && x == 0.0)
            throw ParameterError("1/h sweep contains 0");
        pts.emplace_back(x, c.h_sweep_inverse ? 1.0 / x : x);
    }
    return pts;
}

int run_spectrum(const RunConfig& c) {
    const int L = single_L(c);
    const double delta = single(c.delta, "delta");
    if (c.engine == Engine::ED && L > ed::kDenseCapL)
        throw CapacityError("ED engine is capped at L = " + std::to_string(ed::kDenseCapL));
    if (c.engine == Engine::Analytic && L > kDefaultEnumerationCap)
        throw CapacityError("full spectrum enumeration is capped at L = " + std::to_string(kDefaultEnumerationCap));

    const auto pts = h_points(c);
    auto spectra = parallel_map<std::vector<cplx>>(pts.size(), [&](std::size_t i) {
        const ModelParams p(L, c.gamma, delta, pts[i].second);
        if (c.engine == Engine::ED)
            return ed::spectrum(p);
        auto e = enumerate_spectrum(p).energies();
        sort_lex(e);
        return e;
    });

    Table t;
    t.columns = {"inv_h", "h", "max_abs_im"};
    const std::size_t n = std::size_t{1} << L;
    for (std::size_t k = 0; k < n; ++k)
        t.columns.push_back((c.imag ? "im_E" : "E") + std::to_string(k));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double h = pts[i].second;
        double max_im = 0.0;
        for (const auto& e : spectra[i])
            max_im = std::max(max_im, std::abs(e.imag()));
        std::vector<Cell> row{1.0 / h, h, max_im};
        for (const auto& e : spectra[i])
            row.emplace_back(c.imag ? e.imag() : e.real());
        t.rows.push_back(std::move(row));
    }
    json meta = base_metadata(c);
    meta["columns"] = c.imag ? "imaginary parts of all levels sorted by (Re, Im)" : "real parts of all levels sorted by (Re, Im)";
    emit(c.output, t, c.format, meta);
    return kOk;
}

int run_verify(const RunConfig& c) {
    std::vector<ModelParams> points;
    for (int L : c.L)
        for (double d : c.delta)
            for (double h : c.h)
                points.emplace_back(L, c.gamma, d, h);
    for (const auto& p : points)
        if (p.L() > kChannelMatchCapL)
            throw CapacityError("verify is capped at L = " + std::to_string(kChannelMatchCapL));

    const auto reports = parallel_map<MatchReport>(points.size(), [&](std::size_t i) { return channel_match(points[i]); });
    bool all_pass = true;
    Table t;
    t.columns = {"L", "gamma", "delta", "h", "n_levels", "max_residual", "unmatched", "tolerance", "pass"};
    json runs = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        const auto& r = reports[i];
        all_pass = all_pass && r.pass;
        t.rows.push_back({static_cast<long long>(p.L()), p.gamma(), p.delta(), p.h(), static_cast<long long>(r.n_levels),
                          r.max_residual, static_cast<long long>(r.unmatched), r.tolerance,
                          std::string(r.pass ? "true" : "false")});
        runs.push_back({{"params", to_json(p)}, {"report", to_json(r)}});
    }
    json meta = base_metadata(c);
    meta["reports"] = runs;
    meta["pass"] = all_pass;
    emit(c.output, t, c.format, meta);
    return all_pass ? kOk : kVerifyFailed;
}

int run_phase_diagram(const RunConfig& c) {
    ScanSpec spec;
    spec.gamma = c.gamma;
    spec.L = single_L(c);
    spec.engine = c.engine;
    spec.h_axis = c.h_sweep ? c.h_sweep->axis() : Axis::linspace(-2.0, 2.0, 101);
    spec.h_is_inverse = c.h_sweep && c.h_sweep_inverse;
    spec.delta_axis = c.delta_sweep ? c.delta_sweep->axis() : Axis::linspace(0.0, 2.0, 101);
    const auto cells = scan(spec);

    Table t;
    t.columns = {"h", "delta", "im_ground", "phase"};
    for (const auto& cell : cells)
        t.rows.push_back({cell.h, cell.delta, cell.im_ground, std::string(to_string(cell.phase.kind))});
    json meta = base_metadata(c);
    meta["L"] = spec.L;
    meta["complex_threshold"] = kComplexThreshold;
    if (!c.h_sweep)
        meta["grid"]["h_axis"] = {{"spec", "-2:2:101"}, {"inverse", false}};
    if (!c.delta_sweep)
        meta["grid"]["delta_axis"] = {{"spec", "0:2:101"}};
    meta["row_order"] = "delta slow, h fast";
    emit(c.output, t, c.format, meta);

    std::optional<std::string> bpath = c.boundaries;
    if (!bpath && c.output != "-")
        bpath = c.output + ".boundaries.csv";
    if (bpath) {
        const double dmin = spec.delta_axis.values.front();
        const double dmax = spec.delta_axis.values.back();
        Table b;
        b.columns = {"curve", "delta", "h"};
        for (const auto& curve : boundary_curves(c.gamma, std::min(dmin, dmax), std::max(dmin, dmax)))
            for (const auto& [d, h] : curve.points)
                b.rows.push_back({curve.label, d, h});
        json bmeta = base_metadata(c);
        bmeta["content"] = "phase boundaries |h| = 1 (gamma^2 - delta^2 > 0) and gamma^2 - delta^2 + h^2 = 1 (|h| > 1)";
        emit(*bpath, b, Format::Csv, bmeta);
    }
    return kOk;
}

int run_winding(const RunConfig& c) {
    const double delta = single(c.delta, "delta");
    const auto pts = h_points(c);
    Table t;
    t.columns = {"inv_h", "h", "value", "rounded", "phase"};
    for (const auto& [x, h] : pts) {
        const ModelParams p(3, c.gamma, delta, h);
        std::vector<Cell> row{1.0 / h, h};
        try {
            const auto w = winding_number(p, c.n_grid);
            row.emplace_back(w.value);
            row.emplace_back(static_cast<long long>(w.rounded));
        } catch (const SingularLoopError&) {
            row.emplace_back(std::nan(""));
            row.emplace_back(std::string("nan"));
        }
        row.emplace_back(std::string(to_string(classify_phase(p).kind)));
        t.rows.push_back(std::move(row));
    }
    json meta = base_metadata(c);
    meta["n_grid"] = c.n_grid;
    emit(c.output, t, c.format, meta);
    return kOk;
}

int run_bloch(const RunConfig& c) {
    const ModelParams p(3, c.gamma, single(c.delta, "delta"), single(c.h, "h"));
    const Trajectory tr = trajectory(p, c.samples);
    Table t;
    t.columns = {"q", "re_hx", "im_hx", "re_hy", "im_hy", "re_hz", "im_hz"};
    for (std::size_t i = 0; i < tr.q.size(); ++i) {
        const auto& v = tr.normalized[i];
        t.rows.push_back({tr.q[i], v[0].real(), v[0].imag(), v[1].real(), v[1].imag(), v[2].real(), v[2].imag()});
    }
    json meta = base_metadata(c);
    meta["samples"] = c.samples;
    meta["closed"] = tr.closed;
    meta["content"] = "normalized Bloch vector h(q)/omega(q), q in [0, 2 pi]";
    emit(c.output, t, c.format, meta);
    return kOk;
}

int run_gap_scan(const RunConfig& c) {
    const double delta = single(c.delta, "delta");
    const double h = single(c.h, "h");
    const auto rows = parallel_map<GroundManifold>(c.L.size(), [&](std::size_t i) {
        return ground_manifold(ModelParams(c.L[i], c.gamma, delta, h));
    });
    Table t;
    t.columns = {"L", "re_e0", "im_e0", "degeneracy", "gap"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& m = rows[i];
        t.rows.push_back({static_cast<long long>(c.L[i]), m.ground.energy.real(), m.ground.energy.imag(),
                          static_cast<long long>(m.degeneracy), m.gap.value_or(0.0)});
    }
    emit(c.output, t, c.format, base_metadata(c));
    return kOk;
}

void check_finite(const RunConfig& c) {
    auto bad = [](double v) { return !std::isfinite(v); };
    bool any = bad(c.gamma);
    for (double v : c.delta)
        any = any || bad(v);
    for (double v : c.h)
        any = any || bad(v);
    if (any)
        throw ParameterError("numeric flags must be finite");
    if (c.L.empty() || c.delta.empty() || c.h.empty())
        throw ParameterError("--L, --delta and --h need at least one value");
}

} // namespace

std::string format_number(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

Sweep Sweep::parse(std::string_view text) {
    Sweep s;
    const auto a = text.find(':');
    const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
    if (a == std::string_view::npos || b == std::string_view::npos)
        throw ParameterError("sweep must look like start:stop:count (got '" + std::string(text) + "')");
    auto num = [&](std::string_view part, auto& out) {
        const auto r = std::from_chars(part.data(), part.data() + part.size(), out);
        if (r.ec != std::errc() || r.ptr != part.data() + part.size())
            throw ParameterError("bad number '" + std::string(part) + "' in sweep '" + std::string(text) + "'");
    };
    num(text.substr(0, a), s.start);
    num(text.substr(a + 1, b - a - 1), s.stop);
    num(text.substr(b + 1), s.count);
    if (!std::isfinite(s.start) || !std::isfinite(s.stop))
        throw ParameterError("sweep bounds must be finite");
    if (s.count < 2)
        throw ParameterError("sweep count must be at least 2");
    return s;
}

std::string Sweep::to_string() const {
    return format_number(start) + ":" + format_number(stop) + ":" + std::to_string(count);
}

RunConfig parse(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"Exact spectra, phases and winding numbers of the ring-frustrated non-Hermitian XY chain", "frustra"};
    app.require_subcommand(1, 1);
    app.set_help_flag("--help", "print help and exit");  // -h would clash with the field option --h
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string h_sweep;
    std::string inv_h_sweep;
    std::string delta_sweep;
    std::string engine = "analytic";
    std::string format = "csv";

    auto common = [&](CLI::App* sub, bool multi_L, bool multi_dh) {
        sub->add_option("--gamma", cfg.gamma, "anisotropy gamma")->capture_default_str();
        if (multi_L)
            sub->add_option("--L", cfg.L, "ring length(s), comma separated")->delimiter(',')->capture_default_str();
        if (multi_dh) {
            sub->add_option("--delta", cfg.delta, "non-Hermitian coupling(s)")->delimiter(',');
            sub->add_option("--h", cfg.h, "field value(s)")->delimiter(',');
        }
        sub->add_option("-o,--output", cfg.output, "output path, '-' for stdout")->capture_default_str();
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    };
    auto sweeps = [&](CLI::App* sub) {
        auto* a = sub->add_option("--h-sweep", h_sweep, "sweep of h as start:stop:count");
        auto* b = sub->add_option("--inv-h", inv_h_sweep, "sweep of 1/h as start:stop:count");
        a->excludes(b);
    };

    auto* spectrum = app.add_subcommand("spectrum", "all 2^L levels along an h or 1/h sweep");
    common(spectrum, true, true);
    sweeps(spectrum);
    spectrum->add_option("--engine", engine, "analytic or ed")->check(CLI::IsMember({"analytic", "ed"}));
    spectrum->add_flag("--imag", cfg.imag, "emit imaginary parts instead of real parts");

    auto* verify = app.add_subcommand("verify", "match analytic channels against ED parity sectors");
    common(verify, true, true);

    auto* phase = app.add_subcommand("phase-diagram", "|Im E0| and phase label on an (h, delta) grid");
    common(phase, true, false);
    sweeps(phase);
    phase->add_option("--delta-sweep", delta_sweep, "delta axis as start:stop:count");
    phase->add_option("--engine", engine, "analytic or ed")->check(CLI::IsMember({"analytic", "ed"}));
    phase->add_option("--boundaries", cfg.boundaries, "path for the boundary-curve CSV");

    auto* winding = app.add_subcommand("winding", "winding number along an h or 1/h sweep");
    common(winding, false, true);
    sweeps(winding);
    winding->add_option("--n-grid", cfg.n_grid, "quadrature points")->capture_default_str();

    auto* bloch = app.add_subcommand("bloch", "normalized Bloch-vector trajectory");
    common(bloch, false, true);
    bloch->add_option("--samples", cfg.samples, "points on [0, 2 pi]")->capture_default_str();

    auto* gap = app.add_subcommand("gap-scan", "ground energy, degeneracy and gap versus L");
    common(gap, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        // help for the subcommand that asked for it, if any
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands())
            target = sub;
        std::cout << target->help();
        throw CLI::Success();
    }

    if (spectrum->parsed())
        cfg.command = Command::Spectrum;
    else if (verify->parsed())
        cfg.command = Command::Verify;
    else if (phase->parsed())
        cfg.command = Command::PhaseDiagram;
    else if (winding->parsed())
        cfg.command = Command::Winding;
    else if (bloch->parsed())
        cfg.command = Command::Bloch;
    else
        cfg.command = Command::GapScan;

    if (!h_sweep.empty())
        cfg.h_sweep = Sweep::parse(h_sweep);
    if (!inv_h_sweep.empty()) {
        cfg.h_sweep = Sweep::parse(inv_h_sweep);
        cfg.h_sweep_inverse = true;
    }
    if (!delta_sweep.empty())
        cfg.delta_sweep = Sweep::parse(delta_sweep);
    cfg.engine = engine == "ed" ? Engine::ED : Engine::Analytic;
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    return cfg;
}

int dispatch(const RunConfig& config) {
    check_finite(config);
    switch (config.command) {
    case Command::Spectrum: return run_spectrum(config);
    case Command::Verify: return run_verify(config);
    case Command::PhaseDiagram: return run_phase_diagram(config);
    case Command::Winding: return run_winding(config);
    case Command::Bloch: return run_bloch(config);
    case Command::GapScan: return run_gap_scan(config);
    }
    return kInternal;
}

int run(int argc, const char* const* argv) {
    RunConfig cfg;
    try {
        cfg = parse(argc, argv);
    } catch (const CLI::Success&) {
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "frustra: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "frustra: " << e.what() << '\n';
        return kUsage;
    }
    try {
        return dispatch(cfg);
    } catch (const CapacityError& e) {
        std::cerr << "frustra: " << e.what() << '\n';
        return kCapacity;
    } catch (const ParameterError& e) {
        std::cerr << "frustra: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "frustra: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "frustra: internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace frustra::cli
