#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frustra/phase_map.hpp"

namespace frustra::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3, kInternal = 4 };

enum class Command { Spectrum, Verify, PhaseDiagram, Winding, Bloch, GapScan };
enum class Format { Csv, Json };

// "start:stop:count", count >= 2.
struct Sweep {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;

    static Sweep parse(std::string_view text);
    Axis axis() const { return Axis::linspace(start, stop, count); }
    std::string to_string() const;
};

struct RunConfig {
    Command command = Command::Spectrum;
    std::vector<int> L{11};
    double gamma = 1.0;
    std::vector<double> delta{0.0};
    std::vector<double> h{0.5};
    std::optional<Sweep> h_sweep;
    bool h_sweep_inverse = false;  // sweep values are 1/h
    std::optional<Sweep> delta_sweep;
    Engine engine = Engine::Analytic;
    int n_grid = 10000;
    int samples = 201;
    bool imag = false;
    std::string output = "-";
    std::optional<std::string> boundaries;
    Format format = Format::Csv;
};

// Parses argv; throws CLI::ParseError subclasses on bad input.
RunConfig parse(int argc, const char* const* argv);

// Runs one command and writes its artifacts. Returns the process exit code.
int dispatch(const RunConfig& config);

// parse + dispatch with error-to-exit-code mapping; messages go to stderr.
int run(int argc, const char* const* argv);

// 17 significant digits, "." separator, independent of locale.
std::string format_number(double value);

} // namespace frustra::cli
