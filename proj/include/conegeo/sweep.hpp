#pragma once

// Randomized verification sweeps behind the CLI: the sharp disk inequality
// on random PL disks, and the cone comparison on random cone triangles.
// Rows are ordered by trial index and every trial seeds its generator with
// mix_seed(seed, trial), so serial and parallel runs emit identical bytes.

#include <cstdint>
#include <string>
#include <vector>

namespace conegeo {

struct PlSweepRow {
    int trial = 0;
    uint64_t seed = 0;        // mixed per-trial seed
    double theta = 0.0;       // apex angle of the generating cone
    double kappa = 0.0;       // mesh sampled from the cone of curvature -kappa^2
    double mesh_radius = 0.0;
    double disk_radius = 0.0;
    int refinement = 0;
    double perimeter = 0.0;   // L0, the boundary of the sublevel disk
    double area = 0.0;
    double omega_minus = 0.0; // negative curvature mass strictly inside
    double rhs = 0.0;         // perimeter^2 / (4 pi + 2 omega_minus)
    double margin = 0.0;      // area - rhs
    double level_bound = 0.0; // worst slack of length(t) >= L0 - (2 pi + omega_minus) t
    double gb_residual = 0.0;
};

struct TriangleSweepRow {
    int trial = 0;
    uint64_t seed = 0;
    double lambda = 0.0;       // curvature of the cone the triangle lives on
    double theta = 0.0;        // its apex angle
    double a = 0.0, b = 0.0, c = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double area = 0.0;
    double theta_solved = 0.0; // apex angle recovered by the comparison solve
    double theta_err = 0.0;
    double dist_err = 0.0;     // max abs error in the recovered apex distances
    double residual = 0.0;     // solver angle-sum residual
    int iterations = 0;
    double margin_same = 0.0;  // area - comparison area at the source curvature
    // area - comparison area at lambda0 = 0; nan when that comparison
    // triangle does not exist (a legal outcome for thin triangles)
    double margin_zero = 0.0;
    std::string status;        // "ok" or "no_comparison_triangle"
};

std::vector<PlSweepRow> pl_sweep(uint64_t seed, int trials, int refinement,
                                 bool parallel);
std::vector<TriangleSweepRow> triangle_sweep(uint64_t seed, int trials,
                                             bool parallel);

// One header line, one line per row, doubles printed with %.17g so the
// exact binary values survive a round trip through the file.
std::string pl_sweep_csv(const std::vector<PlSweepRow>& rows);
std::string triangle_sweep_csv(const std::vector<TriangleSweepRow>& rows);

} // namespace conegeo
