#pragma once

// Command back end for the conegeo binary. main() only parses flags into a
// RunConfig and forwards here, so report content and exit logic stay
// testable without spawning a process.
//
// Exit convention: 0 when every asserted margin passes its tolerance (and
// for nonexistence outcomes, which are reported, not failed), 2 when an
// assertion fails, 1 for usage or data errors (raised as exceptions and
// mapped by main).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conegeo {

struct RunConfig {
    std::string command;
    std::string source;  // mesh path / builtin / surface name, per command
    std::string output;  // file path; "" = $CONEGEO_OUT/<command>.<ext> or stdout
    std::string format;  // "json" or "csv"; "" picks the command default
    uint64_t seed = 1;
    int trials = 200;
    int refinement = 16;
    int rays = 256;
    int base_vertex = 0;
    int rings = 6;
    int sectors = 48;
    bool parallel = true;
    std::optional<double> tol;      // margin tolerance override
    double lambda = 0.0;            // cone curvature
    std::optional<double> lambda0;  // comparison curvature
    double theta = 3.0 * 3.14159265358979323846;
    std::optional<double> radius;
    std::optional<std::pair<double, double>> center;
    std::vector<double> sides;
    std::vector<double> angles;
    std::optional<double> area;
    std::vector<int> levels = {4, 8, 16};
};

struct RunResult {
    int exit_code = 0;   // 0 pass / nonexistent, 2 assertion failure
    std::string report;  // the bytes that were written
    std::string path;    // destination; empty when it went to stdout
};

// Dispatches cfg.command, writes the report, returns it with the verdict.
// Throws GeometryError (or std::exception) on usage and data errors.
RunResult run(const RunConfig& cfg);

// "0.5pi", "3pi", "pi" -> multiples of pi; plain numbers pass through.
double parse_angle(const std::string& text);

} // namespace conegeo
