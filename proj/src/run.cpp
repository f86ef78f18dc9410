#include "conegeo/run.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "conegeo/cone.hpp"
#include "conegeo/constcurv.hpp"
#include "conegeo/errors.hpp"
#include "conegeo/meshgen.hpp"
#include "conegeo/plsurf.hpp"
#include "conegeo/riemann.hpp"
#include "conegeo/sweep.hpp"
#include "conegeo/trianglecmp.hpp"

namespace conegeo {

namespace {

using ordered = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr int kSchemaVersion = 1;
constexpr double kGbTol = 1e-9;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Outcome {
    ordered json;
    std::string csv;
    bool pass = true;
    bool nonexistent = false;
};

ordered envelope(const RunConfig& cfg, const char* command) {
    ordered j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    (void)cfg;
    return j;
}

// the bound only counts negative curvature, so a positively curved apex
// is outside the verified domain and must be rejected, not reported on
ConeSpec npc_cone(const RunConfig& cfg) {
    if (cfg.theta < 2.0 * kPi - 1e-12)
        throw GeometryError(
            "cone angle must be at least 2 pi for the nonpositive bound");
    return ConeSpec(CurvatureLevel(cfg.lambda), cfg.theta);
}

Outcome cone_info(const RunConfig& cfg) {
    double R = cfg.radius.value_or(1.0);
    ConeSpec cone = npc_cone(cfg);
    DiskMeasure m = vertex_disk(cone, R);
    double atom = std::max(0.0, cfg.theta - 2.0 * kPi);
    double kminus = atom - cfg.lambda * m.area; // lambda <= 0
    double rhs = reverse_isoperimetric_rhs(m.perimeter, kminus);
    double margin = m.area - rhs;
    double tol = cfg.tol.value_or(1e-9);
    double scale = std::max(1.0, m.area);

    Outcome out;
    out.pass = margin >= -tol * scale;
    bool equality = std::abs(margin) <= tol * scale;
    out.json = envelope(cfg, "cone-info");
    out.json["status"] = out.pass ? "pass" : "fail";
    out.json["tolerances"] = {{"margin_rel", tol}};
    out.json["config"] = {{"theta", cfg.theta}, {"lambda", cfg.lambda}, {"radius", R}};
    out.json["results"] = {{"perimeter", m.perimeter}, {"area", m.area},
                           {"apex_atom", atom},        {"kminus", kminus},
                           {"rhs", rhs},               {"margin", margin},
                           {"equality", equality}};
    out.csv = "theta,lambda,radius,perimeter,area,kminus,rhs,margin,status\n" +
              num(cfg.theta) + ',' + num(cfg.lambda) + ',' + num(R) + ',' +
              num(m.perimeter) + ',' + num(m.area) + ',' + num(kminus) + ',' +
              num(rhs) + ',' + num(margin) + ',' +
              (out.pass ? "pass" : "fail") + '\n';
    return out;
}

struct MeshSource {
    PLSurface surf;
    std::string desc;
    double default_radius;
};

MeshSource load_mesh(const RunConfig& cfg) {
    std::string s = cfg.source;
    if (s.empty()) s = "random:" + std::to_string(cfg.seed);
    double R = cfg.radius.value_or(1.0);
    if (s == "tetrahedron") return {make_tetrahedron(1.0), s, 0.5};
    if (s == "flat-disk")
        return {make_flat_disk(cfg.rings, cfg.sectors, 1.25 * R), s, R};
    if (s == "cone-disk") {
        ConeSpec cone = npc_cone(cfg);
        return {make_cone_disk(cone, cfg.rings, cfg.sectors, 1.25 * R), s, R};
    }
    if (s.rfind("random:", 0) == 0) {
        uint64_t sd = 0;
        try {
            sd = std::stoull(s.substr(7));
        } catch (...) {
            throw GeometryError("bad generator seed in source: " + s);
        }
        GeneratedMesh g = random_npc_disk(sd);
        return {std::move(g.surf), s, g.suggested_radius};
    }
    std::ifstream in(s);
    if (!in) throw GeometryError("cannot open mesh file: " + s);
    std::stringstream ss;
    ss << in.rdbuf();
    return {parse_mesh_json(ss.str()), s, R};
}

Outcome pl_check(const RunConfig& cfg) {
    MeshSource ms = load_mesh(cfg);
    double R = cfg.radius.value_or(ms.default_radius);
    BasePoint base = BasePoint::at_vertex(cfg.base_vertex);
    DiskReport rep = verify_disk_inequality(ms.surf, base, R, cfg.refinement);
    DistanceField field = geodesic_distance(ms.surf, base, cfg.refinement);
    auto prof = level_curve_profile(ms.surf, field, R, 32);
    double bound =
        check_level_length_bound(prof, rep.perimeter, rep.omega_minus_inside);
    double gb = gauss_bonnet_residual(ms.surf);
    double tol = cfg.tol.value_or(0.02);

    Outcome out;
    out.pass = rep.margin >= -tol * rep.area &&
               bound >= -tol * rep.perimeter && gb < kGbTol &&
               !rep.touches_boundary;
    out.json = envelope(cfg, "pl-check");
    out.json["status"] = out.pass ? "pass" : "fail";
    out.json["tolerances"] = {{"margin_rel", tol}, {"level_rel", tol}, {"gb_abs", kGbTol}};
    out.json["config"] = {{"source", ms.desc},
                          {"base_vertex", cfg.base_vertex},
                          {"radius", R},
                          {"refinement", cfg.refinement}};
    out.json["results"] = {{"perimeter", rep.perimeter},
                           {"area", rep.area},
                           {"omega_minus", rep.omega_minus_inside},
                           {"rhs", rep.rhs},
                           {"margin", rep.margin},
                           {"level_bound", bound},
                           {"gb_residual", gb},
                           {"touches_boundary", rep.touches_boundary}};
    out.csv =
        "radius,refinement,perimeter,area,omega_minus,rhs,margin,level_bound,"
        "gb_residual,status\n" +
        num(R) + ',' + std::to_string(cfg.refinement) + ',' +
        num(rep.perimeter) + ',' + num(rep.area) + ',' +
        num(rep.omega_minus_inside) + ',' + num(rep.rhs) + ',' +
        num(rep.margin) + ',' + num(bound) + ',' + num(gb) + ',' +
        (out.pass ? "pass" : "fail") + '\n';
    return out;
}

Outcome pl_sweep_cmd(const RunConfig& cfg) {
    auto rows = pl_sweep(cfg.seed, cfg.trials, cfg.refinement, cfg.parallel);
    double tol = cfg.tol.value_or(0.02);

    Outcome out;
    for (const auto& r : rows)
        if (r.margin < -tol * r.area || r.level_bound < -tol * r.perimeter ||
            r.gb_residual >= kGbTol)
            out.pass = false;
    out.json = envelope(cfg, "pl-sweep");
    out.json["status"] = out.pass ? "pass" : "fail";
    out.json["tolerances"] = {{"margin_rel", tol}, {"level_rel", tol}, {"gb_abs", kGbTol}};
    out.json["config"] = {{"seed", cfg.seed},
                          {"trials", cfg.trials},
                          {"refinement", cfg.refinement}};
    auto arr = ordered::array();
    for (const auto& r : rows)
        arr.push_back({{"trial", r.trial},
                       {"seed", r.seed},
                       {"theta", r.theta},
                       {"kappa", r.kappa},
                       {"mesh_radius", r.mesh_radius},
                       {"disk_radius", r.disk_radius},
                       {"refinement", r.refinement},
                       {"perimeter", r.perimeter},
                       {"area", r.area},
                       {"omega_minus", r.omega_minus},
                       {"rhs", r.rhs},
                       {"margin", r.margin},
                       {"level_bound", r.level_bound},
                       {"gb_residual", r.gb_residual}});
    out.json["rows"] = arr;
    out.csv = pl_sweep_csv(rows);
    return out;
}

Outcome triangle_check(const RunConfig& cfg) {
    if (cfg.sides.size() != 3)
        throw GeometryError("triangle-check needs --sides a,b,c");
    TriangleData data;
    std::string source = cfg.source.empty() ? "flat" : cfg.source;
    if (!cfg.angles.empty() || cfg.area) {
        if (cfg.angles.size() != 3 || !cfg.area)
            throw GeometryError("custom triangle data needs --angles x,y,z and --area");
        data = make_triangle_data(cfg.sides[0], cfg.sides[1], cfg.sides[2],
                                  cfg.angles[0], cfg.angles[1], cfg.angles[2],
                                  *cfg.area, "custom");
    } else if (source == "flat" || source == "hyperbolic") {
        CurvatureLevel lam(source == "flat" ? 0.0 : -1.0);
        PlaneTriangle t =
            solve_sss(lam, cfg.sides[0], cfg.sides[1], cfg.sides[2]);
        data = triangle_data_from_plane(t, source);
    } else {
        throw GeometryError("triangle-check --source must be flat or hyperbolic");
    }

    double lam0 = cfg.lambda0.value_or(0.0);
    double tol = cfg.tol.value_or(1e-7);
    TriangleReport tr = verify_triangle_theorem(data, lam0, std::nullopt, tol);

    Outcome out;
    std::string status;
    ordered solve;
    double theta = std::nan("");
    if (tr.status == "no_comparison_triangle") {
        out.nonexistent = true;
        status = "nonexistent";
        solve = nullptr;
    } else {
        ConeTriangle ct = cone_comparison_triangle(lam0, data);
        theta = ct.spec.theta;
        solve = {{"theta", ct.spec.theta},
                 {"apex_distances", {ct.dA, ct.dB, ct.dC}},
                 {"flat_degenerate", ct.flat_degenerate},
                 {"residual", ct.solve_residual},
                 {"iterations", ct.solve_iterations}};
        out.pass = tr.margin >= -tol;
        status = out.pass ? "pass" : "fail";
    }
    out.json = envelope(cfg, "triangle-check");
    out.json["status"] = status;
    out.json["tolerances"] = {{"margin_abs", tol}};
    out.json["config"] = {{"lambda0", lam0},
                          {"source", data.source},
                          {"sides", {data.a, data.b, data.c}}};
    out.json["results"] = {{"angles", {data.alpha, data.beta, data.gamma}},
                           {"area", data.area},
                           {"area_rhs", tr.area_rhs},
                           {"margin", tr.margin},
                           {"equality", tr.equality},
                           {"comparison", tr.status},
                           {"solve", solve}};
    out.csv =
        "lambda0,a,b,c,alpha,beta,gamma,area,area_rhs,margin,theta,status\n" +
        num(lam0) + ',' + num(data.a) + ',' + num(data.b) + ',' + num(data.c) +
        ',' + num(data.alpha) + ',' + num(data.beta) + ',' + num(data.gamma) +
        ',' + num(data.area) + ',' + num(tr.area_rhs) + ',' + num(tr.margin) +
        ',' + num(theta) + ',' + status + '\n';
    return out;
}

Outcome triangle_sweep_cmd(const RunConfig& cfg) {
    auto rows = triangle_sweep(cfg.seed, cfg.trials, cfg.parallel);
    double tol = cfg.tol.value_or(1e-8);

    Outcome out;
    for (const auto& r : rows) {
        if (r.status != "ok") {
            out.pass = false; // round-trip data must admit its own comparison
            continue;
        }
        if (r.theta_err > tol * r.theta ||
            r.dist_err > tol * (r.a + r.b + r.c) ||
            std::abs(r.margin_same) > tol)
            out.pass = false;
    }
    out.json = envelope(cfg, "triangle-sweep");
    out.json["status"] = out.pass ? "pass" : "fail";
    out.json["tolerances"] = {{"theta_rel", tol},
                              {"dist_rel", tol},
                              {"margin_abs", tol}};
    out.json["config"] = {{"seed", cfg.seed}, {"trials", cfg.trials}};
    auto arr = ordered::array();
    for (const auto& r : rows)
        arr.push_back({{"trial", r.trial},
                       {"seed", r.seed},
                       {"lambda", r.lambda},
                       {"theta", r.theta},
                       {"sides", {r.a, r.b, r.c}},
                       {"angles", {r.alpha, r.beta, r.gamma}},
                       {"area", r.area},
                       {"theta_solved", r.theta_solved},
                       {"theta_err", r.theta_err},
                       {"dist_err", r.dist_err},
                       {"residual", r.residual},
                       {"iterations", r.iterations},
                       {"margin_same", r.margin_same},
                       {"margin_zero", r.margin_zero},
                       {"status", r.status}});
    out.json["rows"] = arr;
    out.csv = triangle_sweep_csv(rows);
    return out;
}

Outcome disk_check(const RunConfig& cfg) {
    std::string name = cfg.source.empty() ? "poincare" : cfg.source;
    ConformalSurface s = ConformalSurface::named(name);
    auto [cx, cy] = cfg.center.value_or(std::pair<double, double>{0.0, 0.0});
    double R = cfg.radius.value_or(1.0);
    SmoothDisk d = measure_disk(s, cx, cy, R, cfg.rays);
    double lam0 = cfg.lambda0.value_or(s.lambda0_hint());
    CurvatureCertificate cert = s.certify_lambda0(lam0, 512);
    // at 256 rays the polygonized boundary biases the flat equality case by
    // about -pi R^2 (2 pi / rays)^2 / 12, so the default stays above that
    double tol = cfg.tol.value_or(5e-4);
    // surfaces sitting exactly on their level (poincare vs -1) evaluate the
    // max curvature a few ulps past it, so the gate gets roundoff slack;
    // the certificate itself stays strict in the report
    const double cert_slack = 1e-12;

    Outcome out;
    out.pass = d.margin >= -tol && cert.margin >= -cert_slack;
    out.json = envelope(cfg, "disk-check");
    out.json["status"] = out.pass ? "pass" : "fail";
    out.json["tolerances"] = {{"margin_abs", tol},
                              {"certificate_slack", cert_slack}};
    out.json["config"] = {{"surface", s.name()},
                          {"center", {cx, cy}},
                          {"radius", R},
                          {"rays", cfg.rays}};
    out.json["results"] = {{"perimeter", d.perimeter},
                           {"area", d.area},
                           {"kminus", d.kminus},
                           {"rhs", d.area - d.margin},
                           {"margin", d.margin}};
    out.json["curvature_certificate"] = {{"lambda0", cert.lambda0},
                                         {"max_curvature", cert.max_curvature},
                                         {"margin", cert.margin},
                                         {"grid", cert.grid}};
    out.csv =
        "radius,rays,perimeter,area,kminus,rhs,margin,lambda0,max_curvature,"
        "cert_margin,status\n" +
        num(R) + ',' + std::to_string(cfg.rays) + ',' + num(d.perimeter) +
        ',' + num(d.area) + ',' + num(d.kminus) + ',' +
        num(d.area - d.margin) + ',' + num(d.margin) + ',' +
        num(cert.lambda0) + ',' + num(cert.max_curvature) + ',' +
        num(cert.margin) + ',' + (out.pass ? "pass" : "fail") + '\n';
    return out;
}

Outcome convergence(const RunConfig& cfg) {
    if (cfg.levels.empty())
        throw GeometryError("convergence needs at least one refinement level");
    for (size_t i = 0; i < cfg.levels.size(); ++i) {
        if (cfg.levels[i] < 1)
            throw GeometryError("refinement levels must be positive");
        if (i > 0 && cfg.levels[i] <= cfg.levels[i - 1])
            throw GeometryError("refinement levels must increase");
    }
    double R = cfg.radius.value_or(1.0);
    ConeSpec cone = npc_cone(cfg);
    PLSurface mesh = make_cone_disk(cone, cfg.rings, cfg.sectors, 1.25 * R);
    double gb = gauss_bonnet_residual(mesh);
    double tol = cfg.tol.value_or(0.02);

    Outcome out;
    out.pass = gb < kGbTol;
    std::string csv =
        "refinement,perimeter,area,omega_minus,rhs,margin,abs_margin_over_area\n";
    auto arr = ordered::array();
    double prev_ratio = std::numeric_limits<double>::infinity();
    double last_ratio = 0.0;
    for (int n : cfg.levels) {
        DiskReport rep =
            verify_disk_inequality(mesh, BasePoint::at_vertex(0), R, n);
        double ratio = std::abs(rep.margin) / rep.area;
        if (ratio >= prev_ratio) out.pass = false; // must improve monotonically
        prev_ratio = ratio;
        last_ratio = ratio;
        arr.push_back({{"refinement", n},
                       {"perimeter", rep.perimeter},
                       {"area", rep.area},
                       {"omega_minus", rep.omega_minus_inside},
                       {"rhs", rep.rhs},
                       {"margin", rep.margin},
                       {"abs_margin_over_area", ratio}});
        csv += std::to_string(n) + ',' + num(rep.perimeter) + ',' +
               num(rep.area) + ',' + num(rep.omega_minus_inside) + ',' +
               num(rep.rhs) + ',' + num(rep.margin) + ',' + num(ratio) + '\n';
    }
    if (last_ratio >= tol) out.pass = false;
    out.json = envelope(cfg, "convergence");
    out.json["status"] = out.pass ? "pass" : "fail";
    out.json["tolerances"] = {{"final_margin_rel", tol}, {"gb_abs", kGbTol}};
    out.json["config"] = {{"theta", cfg.theta},
                          {"lambda", cfg.lambda},
                          {"radius", R},
                          {"rings", cfg.rings},
                          {"sectors", cfg.sectors},
                          {"levels", cfg.levels}};
    out.json["results"] = {{"gb_residual", gb}};
    out.json["rows"] = arr;
    out.csv = csv;
    return out;
}

const char* default_format(const std::string& command) {
    if (command == "pl-sweep" || command == "triangle-sweep" ||
        command == "convergence")
        return "csv";
    return "json";
}

} // namespace

double parse_angle(const std::string& text) {
    std::string t = text;
    double mult = 1.0;
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
        mult = kPi;
        t = t.substr(0, t.size() - 2);
        if (t.empty()) return kPi;
        if (t == "-") return -kPi;
        if (t == "+") return kPi;
    }
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (...) {
        throw GeometryError("cannot parse angle: " + text);
    }
    if (pos != t.size()) throw GeometryError("cannot parse angle: " + text);
    return v * mult;
}

RunResult run(const RunConfig& cfg) {
    Outcome out;
    if (cfg.command == "cone-info")
        out = cone_info(cfg);
    else if (cfg.command == "pl-check")
        out = pl_check(cfg);
    else if (cfg.command == "pl-sweep")
        out = pl_sweep_cmd(cfg);
    else if (cfg.command == "triangle-check")
        out = triangle_check(cfg);
    else if (cfg.command == "triangle-sweep")
        out = triangle_sweep_cmd(cfg);
    else if (cfg.command == "disk-check")
        out = disk_check(cfg);
    else if (cfg.command == "convergence")
        out = convergence(cfg);
    else
        throw GeometryError("unknown command: " + cfg.command);

    std::string format = cfg.format.empty() ? default_format(cfg.command) : cfg.format;
    if (format != "json" && format != "csv")
        throw GeometryError("format must be json or csv");

    RunResult rr;
    rr.exit_code = (out.pass || out.nonexistent) ? 0 : 2;
    rr.report = format == "json" ? out.json.dump(2) + "\n" : out.csv;

    std::string path = cfg.output;
    if (path.empty()) {
        const char* dir = std::getenv("CONEGEO_OUT");
        if (dir && *dir)
            path = std::string(dir) + "/" + cfg.command + "." + format;
    }
    if (path == "-") path.clear();
    rr.path = path;
    if (path.empty()) {
        std::cout << rr.report;
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw GeometryError("cannot write report to " + path);
        f << rr.report;
        std::cout << cfg.command << ": "
                  << out.json["status"].get<std::string>() << ", wrote " << path
                  << "\n";
    }
    return rr;
}

} // namespace conegeo
