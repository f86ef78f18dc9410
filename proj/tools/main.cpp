#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conegeo/errors.hpp"
#include "conegeo/run.hpp"

namespace {

// scratch for flags that need post-processing (pi suffixes, presence checks
// for the optional overrides)
struct FlagBuf {
    std::string theta = "3pi";
    std::vector<std::string> angles;
    std::vector<double> center;
    double tol = 0.0;
    double radius = 0.0;
    double lambda0 = 0.0;
    double area = 0.0;
};

bool given(CLI::App* sub, const std::string& name) {
    CLI::Option* o = sub->get_option_no_throw(name);
    return o && o->count() > 0;
}

CLI::App* make_cmd(CLI::App& app, conegeo::RunConfig& cfg, FlagBuf& buf,
                   const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--seed", cfg.seed,
                    "seed; fully determines randomized output (default 1)");
    sub->add_option("--refine", cfg.refinement,
                    "edge refinement for PL distance graphs (default 16)");
    sub->add_option("--tol", buf.tol, "margin tolerance override");
    sub->add_option("--output", cfg.output,
                    "report file; default $CONEGEO_OUT/<command>.<ext>, else "
                    "stdout; '-' forces stdout");
    sub->add_option("--format", cfg.format,
                    "json or csv (sweeps and convergence default to csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag_callback(
        "--serial", [&cfg] { cfg.parallel = false; },
        "run sweep trials on one thread (output is identical either way)");
    sub->callback([&cfg, name] { cfg.command = name; });
    return sub;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "conegeo: sharp reverse isoperimetric checks on cones, PL disks and "
        "conformal surfaces"};
    app.require_subcommand(0, 1);

    conegeo::RunConfig cfg;
    FlagBuf buf;

    CLI::App* cone = make_cmd(app, cfg, buf, "cone-info",
                              "vertex disk of a cone against the sharp bound");
    cone->add_option("--theta", buf.theta, "apex angle, pi suffix ok (default 3pi)");
    cone->add_option("--lambda", cfg.lambda, "cone curvature <= 0 (default 0)");
    cone->add_option("--radius", buf.radius, "disk radius (default 1)");

    CLI::App* plc = make_cmd(app, cfg, buf, "pl-check",
                             "disk inequality, level bound and Gauss-Bonnet "
                             "on one PL mesh");
    plc->add_option("--source", cfg.source,
                    "mesh json path, or tetrahedron | flat-disk | cone-disk | "
                    "random:SEED (default random:<seed>)");
    plc->add_option("--radius", buf.radius,
                    "disk radius (defaults to the generator suggestion, else 1)");
    plc->add_option("--base", cfg.base_vertex, "base vertex (default 0)");
    plc->add_option("--theta", buf.theta, "cone-disk apex angle (default 3pi)");
    plc->add_option("--lambda", cfg.lambda, "cone-disk curvature (default 0)");
    plc->add_option("--rings", cfg.rings, "built-in mesh rings (default 6)");
    plc->add_option("--sectors", cfg.sectors, "built-in mesh sectors (default 48)");

    CLI::App* pls = make_cmd(app, cfg, buf, "pl-sweep",
                             "randomized nonpositively curved disk meshes "
                             "vs the sharp bound; emits one CSV row per trial");
    pls->add_option("--trials", cfg.trials, "number of meshes (default 200)");

    CLI::App* trc = make_cmd(app, cfg, buf, "triangle-check",
                             "cone comparison triangle for one triangle");
    trc->add_option("--lambda0", buf.lambda0, "comparison curvature (default 0)");
    trc->add_option("--source", cfg.source,
                    "flat | hyperbolic: plane the sides are solved in "
                    "(default flat)");
    trc->add_option("--sides", cfg.sides, "side lengths a,b,c")->delimiter(',');
    trc->add_option("--angles", buf.angles,
                    "turn the sides into custom data: angles alpha,beta,gamma, "
                    "pi suffix ok (needs --area)")
        ->delimiter(',');
    trc->add_option("--area", buf.area, "area for custom data");

    CLI::App* trs = make_cmd(app, cfg, buf, "triangle-sweep",
                             "random cone triangles round-tripped through the "
                             "comparison solve; one CSV row per trial");
    trs->add_option("--trials", cfg.trials, "number of triangles (default 200)");

    CLI::App* dsc = make_cmd(app, cfg, buf, "disk-check",
                             "geodesic disk on a conformal surface against "
                             "the sharp bound, plus a curvature certificate");
    dsc->add_option("--surface", cfg.source,
                    "flat | poincare | gauss-bump-neg | grid json path "
                    "(default poincare)");
    dsc->add_option("--center", buf.center, "disk center x,y (default 0,0)")
        ->delimiter(',');
    dsc->add_option("--radius", buf.radius, "geodesic radius (default 1)");
    dsc->add_option("--rays", cfg.rays, "boundary rays (default 256)");
    dsc->add_option("--lambda0", buf.lambda0,
                    "curvature level to certify (default: surface hint)");

    CLI::App* cnv = make_cmd(app, cfg, buf, "convergence",
                             "refinement study of the disk inequality on an "
                             "apex-centered cone disk mesh");
    cnv->add_option("--theta", buf.theta, "apex angle (default 3pi)");
    cnv->add_option("--lambda", cfg.lambda, "cone curvature (default 0)");
    cnv->add_option("--radius", buf.radius, "disk radius (default 1)");
    cnv->add_option("--rings", cfg.rings, "mesh rings (default 6)");
    cnv->add_option("--sectors", cfg.sectors, "mesh sectors (default 48)");
    cnv->add_option("--levels", cfg.levels, "refinement levels (default 4,8,16)")
        ->delimiter(',');

    app.footer(
        "CSV columns:\n"
        "  pl-sweep:       trial,seed,theta,kappa,mesh_radius,disk_radius,"
        "refinement,\n"
        "                  perimeter,area,omega_minus,rhs,margin,level_bound,"
        "gb_residual\n"
        "  triangle-sweep: trial,seed,lambda,theta,a,b,c,alpha,beta,gamma,"
        "area,\n"
        "                  theta_solved,theta_err,dist_err,residual,"
        "iterations,\n"
        "                  margin_same,margin_zero,status\n"
        "  convergence:    refinement,perimeter,area,omega_minus,rhs,margin,\n"
        "                  abs_margin_over_area\n"
        "Angles accept a pi suffix: --theta 3pi, --theta 0.5pi.\n"
        "Exit codes: 0 pass (or reported nonexistence), 1 usage or data "
        "error, 2 assertion failure.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto subs = app.get_subcommands();
    if (subs.empty()) {
        std::cout << app.help();
        return 1;
    }
    CLI::App* sub = subs.front();

    try {
        cfg.theta = conegeo::parse_angle(buf.theta);
        if (given(sub, "--tol")) cfg.tol = buf.tol;
        if (given(sub, "--radius")) cfg.radius = buf.radius;
        if (given(sub, "--lambda0")) cfg.lambda0 = buf.lambda0;
        if (given(sub, "--area")) cfg.area = buf.area;
        if (given(sub, "--center")) {
            if (buf.center.size() != 2)
                throw conegeo::GeometryError("--center needs exactly x,y");
            cfg.center = {buf.center[0], buf.center[1]};
        }
        for (const auto& t : buf.angles)
            cfg.angles.push_back(conegeo::parse_angle(t));
        return conegeo::run(cfg).exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
