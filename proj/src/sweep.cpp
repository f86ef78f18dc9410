#include "conegeo/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "conegeo/batch.hpp"
#include "conegeo/cone.hpp"
#include "conegeo/errors.hpp"
#include "conegeo/meshgen.hpp"
#include "conegeo/plsurf.hpp"
#include "conegeo/rng.hpp"
#include "conegeo/trianglecmp.hpp"

namespace conegeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

PlSweepRow pl_trial(uint64_t seed, int trial, int refinement) {
    GeneratedMesh g = random_npc_disk(mix_seed(seed, static_cast<uint64_t>(trial)));
    BasePoint base = BasePoint::at_vertex(0);
    DiskReport rep = verify_disk_inequality(g.surf, base, g.suggested_radius,
                                            refinement);
    DistanceField field = geodesic_distance(g.surf, base, refinement);
    auto prof = level_curve_profile(g.surf, field, g.suggested_radius, 32);

    PlSweepRow row;
    row.trial = trial;
    row.seed = g.seed;
    row.theta = g.theta;
    row.kappa = g.kappa;
    row.mesh_radius = g.mesh_radius;
    row.disk_radius = rep.radius;
    row.refinement = rep.refinement;
    row.perimeter = rep.perimeter;
    row.area = rep.area;
    row.omega_minus = rep.omega_minus_inside;
    row.rhs = rep.rhs;
    row.margin = rep.margin;
    row.level_bound = check_level_length_bound(prof, rep.perimeter,
                                               rep.omega_minus_inside);
    row.gb_residual = gauss_bonnet_residual(g.surf);
    return row;
}

TriangleSweepRow triangle_trial(uint64_t seed, int trial) {
    uint64_t s = mix_seed(seed, static_cast<uint64_t>(trial));
    Rng rng(s);
    double lam = (trial % 2 == 0) ? 0.0 : -1.0;
    double theta = rng.uniform(2.05 * kPi, 2.9 * kPi);
    ConeSpec cone(CurvatureLevel(lam), theta);
    auto pts = random_apex_triangle(cone, rng);
    ConeSurface surf(cone);
    ConeSurface::Measured m = surf.measure_apex_triangle(pts[0], pts[1], pts[2]);
    TriangleData data = triangle_data_from_cone(m);

    TriangleSweepRow row;
    row.trial = trial;
    row.seed = s;
    row.lambda = lam;
    row.theta = theta;
    row.a = data.a;
    row.b = data.b;
    row.c = data.c;
    row.alpha = data.alpha;
    row.beta = data.beta;
    row.gamma = data.gamma;
    row.area = data.area;

    double nan = std::nan("");
    try {
        ConeTriangle ct = cone_comparison_triangle(lam, data);
        row.theta_solved = ct.spec.theta;
        row.theta_err = std::abs(ct.spec.theta - theta);
        row.dist_err = std::max({std::abs(ct.dA - m.apex_dist[0]),
                                 std::abs(ct.dB - m.apex_dist[1]),
                                 std::abs(ct.dC - m.apex_dist[2])});
        row.residual = ct.solve_residual;
        row.iterations = ct.solve_iterations;
        row.margin_same = data.area - ct.area;
        row.status = "ok";
    } catch (const NoConvergence&) {
        row.theta_solved = nan;
        row.theta_err = nan;
        row.dist_err = nan;
        row.residual = nan;
        row.iterations = -1;
        row.margin_same = nan;
        row.status = "no_comparison_triangle";
    }

    if (lam == 0.0) {
        row.margin_zero = row.margin_same;
    } else {
        try {
            ConeTriangle c0 = cone_comparison_triangle(0.0, data);
            row.margin_zero = data.area - c0.area;
        } catch (const NoConvergence&) {
            row.margin_zero = nan;
        }
    }
    return row;
}

void put_g(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void put_int(std::string& out, long long v) {
    out += std::to_string(v);
}

} // namespace

std::vector<PlSweepRow> pl_sweep(uint64_t seed, int trials, int refinement,
                                 bool parallel) {
    if (refinement < 1) throw GeometryError("refinement must be at least 1");
    return run_batch<PlSweepRow>(trials, parallel, [=](int i) {
        return pl_trial(seed, i, refinement);
    });
}

std::vector<TriangleSweepRow> triangle_sweep(uint64_t seed, int trials,
                                             bool parallel) {
    return run_batch<TriangleSweepRow>(trials, parallel, [=](int i) {
        return triangle_trial(seed, i);
    });
}

std::string pl_sweep_csv(const std::vector<PlSweepRow>& rows) {
    std::string out =
        "trial,seed,theta,kappa,mesh_radius,disk_radius,refinement,"
        "perimeter,area,omega_minus,rhs,margin,level_bound,gb_residual\n";
    for (const auto& r : rows) {
        put_int(out, r.trial);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        put_g(out, r.theta);
        out += ',';
        put_g(out, r.kappa);
        out += ',';
        put_g(out, r.mesh_radius);
        out += ',';
        put_g(out, r.disk_radius);
        out += ',';
        put_int(out, r.refinement);
        out += ',';
        put_g(out, r.perimeter);
        out += ',';
        put_g(out, r.area);
        out += ',';
        put_g(out, r.omega_minus);
        out += ',';
        put_g(out, r.rhs);
        out += ',';
        put_g(out, r.margin);
        out += ',';
        put_g(out, r.level_bound);
        out += ',';
        put_g(out, r.gb_residual);
        out += '\n';
    }
    return out;
}

std::string triangle_sweep_csv(const std::vector<TriangleSweepRow>& rows) {
    std::string out =
        "trial,seed,lambda,theta,a,b,c,alpha,beta,gamma,area,theta_solved,"
        "theta_err,dist_err,residual,iterations,margin_same,margin_zero,status\n";
    for (const auto& r : rows) {
        put_int(out, r.trial);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        put_g(out, r.lambda);
        out += ',';
        put_g(out, r.theta);
        out += ',';
        put_g(out, r.a);
        out += ',';
        put_g(out, r.b);
        out += ',';
        put_g(out, r.c);
        out += ',';
        put_g(out, r.alpha);
        out += ',';
        put_g(out, r.beta);
        out += ',';
        put_g(out, r.gamma);
        out += ',';
        put_g(out, r.area);
        out += ',';
        put_g(out, r.theta_solved);
        out += ',';
        put_g(out, r.theta_err);
        out += ',';
        put_g(out, r.dist_err);
        out += ',';
        put_g(out, r.residual);
        out += ',';
        put_int(out, r.iterations);
        out += ',';
        put_g(out, r.margin_same);
        out += ',';
        put_g(out, r.margin_zero);
        out += ',';
        out += r.status;
        out += '\n';
    }
    return out;
}

} // namespace conegeo
