#include "conegeo/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <utility>
#include <vector>

#include <boost/numeric/odeint.hpp>
#include <json.hpp>

#include "conegeo/cone.hpp"

namespace conegeo {

namespace {

constexpr double kOdeTol = 1e-12;
constexpr int kShootSteps = 1024; // minimum sample count of a public path
constexpr int kProbeSteps = 512;  // sample count of shooting probes
constexpr double kEndpointTol = 1e-9;
constexpr double kStripLen = 0.08; // radial quadrature strip size

double sqr(double v) { return v * v; }

// keeps the poincare factor finite when a trial step pokes past the rim
void clamp_to_unit_disk(double& x, double& y) {
    const double cap = 1.0 - 1e-6;
    double r2 = x * x + y * y;
    if (r2 > cap) {
        double f = std::sqrt(cap / r2);
        x *= f;
        y *= f;
    }
}

struct cubic_out {
    double v, d1, d2;
};

// centripetal-free catmull-rom on uniform knots, t in [0, 1] between p1, p2
cubic_out catmull_rom(double p0, double p1, double p2, double p3, double t) {
    double a = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
    double b = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    double c = 0.5 * (p2 - p0);
    return {((a * t + b) * t + c) * t + p1,
            (3.0 * a * t + 2.0 * b) * t + c,
            6.0 * a * t + 2.0 * b};
}

} // namespace

ConformalSurface ConformalSurface::flat(double radius) {
    if (!(radius > 0.0))
        throw GeometryError("chart radius must be positive");
    return ConformalSurface(Kind::flat, "flat", radius, 0.0);
}

ConformalSurface ConformalSurface::poincare(double radius) {
    if (!(radius > 0.0) || !(radius < 1.0))
        throw GeometryError("poincare chart radius must lie in (0, 1)");
    return ConformalSurface(Kind::poincare, "poincare", radius, -1.0);
}

ConformalSurface ConformalSurface::gauss_bump_neg(double radius) {
    if (!(radius > 0.0))
        throw GeometryError("chart radius must be positive");
    return ConformalSurface(Kind::bump, "gauss-bump-neg", radius, 0.0);
}

ConformalSurface ConformalSurface::from_grid_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GeometryError("cannot open grid file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        throw GeometryError("bad grid json: " + std::string(e.what()));
    }
    for (const char* key : {"nx", "ny", "x0", "y0", "dx", "dy", "values"})
        if (!j.contains(key))
            throw GeometryError(std::string("grid json misses field: ") + key);

    int nx = j["nx"].get<int>();
    int ny = j["ny"].get<int>();
    double x0 = j["x0"].get<double>();
    double y0 = j["y0"].get<double>();
    double hx = j["dx"].get<double>();
    double hy = j["dy"].get<double>();
    if (nx < 4 || ny < 4)
        throw GeometryError("grid needs at least 4 nodes per axis");
    if (!(hx > 0.0) || !(hy > 0.0))
        throw GeometryError("grid spacing must be positive");
    const auto& vals = j["values"];
    if (!vals.is_array() || vals.size() != static_cast<size_t>(nx) * ny)
        throw GeometryError("grid values must hold nx * ny entries");
    std::vector<double> values(vals.size());
    for (size_t k = 0; k < values.size(); ++k) {
        values[k] = vals[k].get<double>();
        if (!std::isfinite(values[k]))
            throw GeometryError("grid values must be finite");
    }

    // largest origin-centered disk whose bicubic stencils stay in range
    double r = std::min(std::min(-(x0 + hx), x0 + (nx - 2) * hx),
                        std::min(-(y0 + hy), y0 + (ny - 2) * hy));
    if (!(r > 0.0))
        throw GeometryError("grid must cover a disk about the origin");

    ConformalSurface s(Kind::grid, "grid:" + path, r, 0.0);
    s.nx_ = nx;
    s.ny_ = ny;
    s.x0_ = x0;
    s.y0_ = y0;
    s.hx_ = hx;
    s.hy_ = hy;
    s.values_ = std::move(values);
    s.lap_values_.resize(s.values_.size());
    for (int i = 0; i < nx; ++i) {
        for (int k = 0; k < ny; ++k) {
            int ic = std::clamp(i, 1, nx - 2);
            int kc = std::clamp(k, 1, ny - 2);
            double lxx = (s.grid_value(ic + 1, kc) - 2.0 * s.grid_value(ic, kc) +
                          s.grid_value(ic - 1, kc)) / (hx * hx);
            double lyy = (s.grid_value(ic, kc + 1) - 2.0 * s.grid_value(ic, kc) +
                          s.grid_value(ic, kc - 1)) / (hy * hy);
            s.lap_values_[static_cast<size_t>(i) * ny + k] = lxx + lyy;
        }
    }
    s.lambda0_hint_ = s.certify_lambda0(0.0, 64).max_curvature;
    s.lambda0_hint_ += 1e-9 + 1e-6 * std::abs(s.lambda0_hint_);
    return s;
}

ConformalSurface ConformalSurface::named(const std::string& spec) {
    if (spec == "flat")
        return flat();
    if (spec == "poincare")
        return poincare();
    if (spec == "gauss-bump-neg")
        return gauss_bump_neg();
    if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos)
        return from_grid_json(spec);
    throw GeometryError("unknown surface: " + spec);
}

bool ConformalSurface::inside(double x, double y, double pad) const {
    double r = radius_ - pad;
    return r > 0.0 && x * x + y * y <= r * r;
}

double ConformalSurface::grid_value(int i, int j) const {
    return values_[static_cast<size_t>(i) * ny_ + j];
}

double ConformalSurface::grid_lap(int i, int j) const {
    return lap_values_[static_cast<size_t>(i) * ny_ + j];
}

void ConformalSurface::grid_eval(double x, double y, double* u, double* ux,
                                 double* uy, double* lap) const {
    double fx = (x - x0_) / hx_;
    double fy = (y - y0_) / hy_;
    int i = std::clamp(static_cast<int>(std::floor(fx)), 1, nx_ - 3);
    int j = std::clamp(static_cast<int>(std::floor(fy)), 1, ny_ - 3);
    double tx = fx - i;
    double ty = fy - j;
    if (u || ux || uy) {
        double cv[4], c1[4];
        for (int a = 0; a < 4; ++a) {
            cubic_out cy = catmull_rom(grid_value(i - 1 + a, j - 1), grid_value(i - 1 + a, j),
                                       grid_value(i - 1 + a, j + 1), grid_value(i - 1 + a, j + 2), ty);
            cv[a] = cy.v;
            c1[a] = cy.d1;
        }
        cubic_out rv = catmull_rom(cv[0], cv[1], cv[2], cv[3], tx);
        if (u)
            *u = rv.v;
        if (ux)
            *ux = rv.d1 / hx_;
        if (uy)
            *uy = catmull_rom(c1[0], c1[1], c1[2], c1[3], tx).v / hy_;
    }
    if (lap) {
        double lv[4];
        for (int a = 0; a < 4; ++a)
            lv[a] = catmull_rom(grid_lap(i - 1 + a, j - 1), grid_lap(i - 1 + a, j),
                                grid_lap(i - 1 + a, j + 1), grid_lap(i - 1 + a, j + 2), ty).v;
        *lap = catmull_rom(lv[0], lv[1], lv[2], lv[3], tx).v;
    }
}

double ConformalSurface::u_at(double x, double y) const {
    switch (kind_) {
    case Kind::flat:
        return 0.0;
    case Kind::poincare:
        clamp_to_unit_disk(x, y);
        return std::log(2.0 / (1.0 - x * x - y * y));
    case Kind::bump:
        return x * x + y * y;
    case Kind::grid: {
        double u;
        grid_eval(x, y, &u, nullptr, nullptr, nullptr);
        return u;
    }
    }
    return 0.0;
}

void ConformalSurface::gradient(double x, double y, double& ux, double& uy) const {
    switch (kind_) {
    case Kind::flat:
        ux = uy = 0.0;
        return;
    case Kind::poincare: {
        clamp_to_unit_disk(x, y);
        double d = 1.0 - x * x - y * y;
        ux = 2.0 * x / d;
        uy = 2.0 * y / d;
        return;
    }
    case Kind::bump:
        ux = 2.0 * x;
        uy = 2.0 * y;
        return;
    case Kind::grid:
        grid_eval(x, y, nullptr, &ux, &uy, nullptr);
        return;
    }
}

double ConformalSurface::laplacian(double x, double y) const {
    switch (kind_) {
    case Kind::flat:
        return 0.0;
    case Kind::poincare: {
        clamp_to_unit_disk(x, y);
        return 4.0 / sqr(1.0 - x * x - y * y);
    }
    case Kind::bump:
        return 4.0;
    case Kind::grid: {
        double lap;
        grid_eval(x, y, nullptr, nullptr, nullptr, &lap);
        return lap;
    }
    }
    return 0.0;
}

double ConformalSurface::curvature_at(double x, double y) const {
    if (kind_ == Kind::grid) {
        double u, lap;
        grid_eval(x, y, &u, nullptr, nullptr, &lap);
        return -std::exp(-2.0 * u) * lap;
    }
    return -std::exp(-2.0 * u_at(x, y)) * laplacian(x, y);
}

CurvatureCertificate ConformalSurface::certify_lambda0(double lambda0, int grid) const {
    if (grid < 2)
        throw GeometryError("certificate grid must have at least 2 nodes per axis");
    double maxk = -std::numeric_limits<double>::infinity();
    double r = radius_ * (1.0 - 1e-12);
    for (int i = 0; i < grid; ++i) {
        double x = -r + 2.0 * r * i / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            double y = -r + 2.0 * r * j / (grid - 1);
            if (x * x + y * y > r * r)
                continue;
            maxk = std::max(maxk, curvature_at(x, y));
        }
    }
    CurvatureCertificate cert;
    cert.lambda0 = lambda0;
    cert.max_curvature = maxk;
    cert.margin = lambda0 - maxk;
    cert.grid = grid;
    return cert;
}

namespace {

using state4 = std::array<double, 4>;

// arclength-parametrized geodesic equations of e^{2u} (dx^2 + dy^2)
struct geo_rhs {
    const ConformalSurface* s;
    void operator()(const state4& v, state4& d, double) const {
        double ux = 0.0, uy = 0.0;
        s->gradient(v[0], v[1], ux, uy);
        double vx = v[2], vy = v[3];
        d[0] = vx;
        d[1] = vy;
        d[2] = -(ux * (vx * vx - vy * vy) + 2.0 * uy * vx * vy);
        d[3] = -(uy * (vy * vy - vx * vx) + 2.0 * ux * vx * vy);
    }
};

struct shoot_raw {
    GeodesicPath path;
    bool exited = false;
    double exit_x = 0.0, exit_y = 0.0;
};

shoot_raw shoot_impl(const ConformalSurface& s, double x, double y, double angle,
                     double length, int min_samples, bool stop_at_exit) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw GeometryError("geodesic length must be positive and finite");
    if (!s.inside(x, y))
        throw GeometryError("geodesic start lies outside the chart");

    double f = std::exp(-s.u_at(x, y));
    state4 st{x, y, std::cos(angle) * f, std::sin(angle) * f};

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled<ode::runge_kutta_cash_karp54<state4>>(kOdeTol, kOdeTol);
    geo_rhs rhs{&s};

    shoot_raw out;
    GeodesicPath& path = out.path;
    path.start_dir = {std::cos(angle), std::sin(angle)};
    double t = 0.0;
    const double dt_cap = length / min_samples;
    double dt = dt_cap;
    auto push = [&]() {
        path.samples.push_back(st);
        path.at.push_back(t);
        double sp = std::exp(2.0 * s.u_at(st[0], st[1])) * (st[2] * st[2] + st[3] * st[3]);
        path.speed_drift = std::max(path.speed_drift, std::abs(sp - 1.0));
    };
    push();
    long guard = 0;
    while (length - t > 1e-13 * (1.0 + length)) {
        if (++guard > 20000000L)
            throw NoConvergence("geodesic integration stalled");
        double dt_io = std::min({dt, dt_cap, length - t});
        state4 next = st;
        double t_next = t;
        if (stepper.try_step(rhs, next, t_next, dt_io) == ode::fail) {
            dt = dt_io;
            continue;
        }
        st = next;
        t = t_next;
        dt = dt_io;
        if (!s.inside(st[0], st[1])) {
            if (stop_at_exit) {
                out.exited = true;
                out.exit_x = st[0];
                out.exit_y = st[1];
                break; // keep only the states inside the chart
            }
            throw DomainExit("geodesic left the chart", st[0], st[1]);
        }
        push();
    }
    path.length = path.at.back();
    const state4& e = path.samples.back();
    double n = std::hypot(e[2], e[3]);
    path.end_dir = {e[2] / n, e[3] / n};
    path.end_point = {e[0], e[1]};
    return out;
}

// cubic hermite interpolation of (x, y, dx, dy) between the bracketing samples
state4 hermite_state(const GeodesicPath& p, double sq) {
    if (sq <= p.at.front())
        return p.samples.front();
    if (sq >= p.at.back())
        return p.samples.back();
    size_t hi = std::upper_bound(p.at.begin(), p.at.end(), sq) - p.at.begin();
    size_t lo = hi - 1;
    double h = p.at[hi] - p.at[lo];
    double t = (sq - p.at[lo]) / h;
    const state4& a = p.samples[lo];
    const state4& b = p.samples[hi];
    double h00 = (2.0 * t - 3.0) * t * t + 1.0;
    double h10 = ((t - 2.0) * t + 1.0) * t;
    double h01 = (3.0 - 2.0 * t) * t * t;
    double h11 = (t - 1.0) * t * t;
    double g00 = 6.0 * t * t - 6.0 * t;
    double g10 = (3.0 * t - 4.0) * t + 1.0;
    double g01 = 6.0 * t - 6.0 * t * t;
    double g11 = (3.0 * t - 2.0) * t;
    state4 out;
    for (int k = 0; k < 2; ++k) {
        out[k] = h00 * a[k] + h10 * h * a[k + 2] + h01 * b[k] + h11 * h * b[k + 2];
        out[k + 2] = (g00 * a[k] + g01 * b[k]) / h + g10 * a[k + 2] + g11 * b[k + 2];
    }
    return out;
}

struct probe_out {
    double closest_s = 0.0;
    double miss = 0.0; // signed Euclidean offset of the target at closest approach
    double dist = 0.0;
};

probe_out closest_on_path(const GeodesicPath& p, double qx, double qy) {
    size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < p.samples.size(); ++k) {
        double d = sqr(p.samples[k][0] - qx) + sqr(p.samples[k][1] - qy);
        if (d < bd) {
            bd = d;
            best = k;
        }
    }
    double sq = p.at[best];
    if (best > 0 && best + 1 < p.samples.size()) {
        // vertex of the quadratic through (s, d^2) at the three closest samples
        double sm = p.at[best - 1], s0 = p.at[best], sp = p.at[best + 1];
        double dm = sqr(p.samples[best - 1][0] - qx) + sqr(p.samples[best - 1][1] - qy);
        double dp = sqr(p.samples[best + 1][0] - qx) + sqr(p.samples[best + 1][1] - qy);
        double f01 = (bd - dm) / (s0 - sm);
        double f12 = (dp - bd) / (sp - s0);
        double curv = (f12 - f01) / (sp - sm);
        if (curv > 0.0) {
            double lin = f01 - curv * (sm + s0);
            sq = std::clamp(-0.5 * lin / curv, sm, sp);
        }
    }
    // newton polish of (pos - q) . vel = 0 on the hermite interpolant
    for (int it = 0; it < 3; ++it) {
        state4 c = hermite_state(p, sq);
        double g = (c[0] - qx) * c[2] + (c[1] - qy) * c[3];
        double v2 = c[2] * c[2] + c[3] * c[3];
        sq = std::clamp(sq - g / v2, p.at.front(), p.at.back());
    }
    state4 c = hermite_state(p, sq);
    double tn = std::hypot(c[2], c[3]);
    probe_out out;
    out.closest_s = sq;
    out.miss = (c[2] * (qy - c[1]) - c[3] * (qx - c[0])) / tn;
    out.dist = std::hypot(qx - c[0], qy - c[1]);
    return out;
}

probe_out probe_angle(const ConformalSurface& s, double px, double py, double angle,
                      double cap, double qx, double qy) {
    shoot_raw r = shoot_impl(s, px, py, angle, cap, kProbeSteps, true);
    return closest_on_path(r.path, qx, qy);
}

} // namespace

GeodesicPath GeodesicPath::resampled(int n) const {
    if (n < 1)
        throw GeometryError("resample count must be positive");
    if (samples.size() < 2)
        throw GeometryError("path has too few samples to resample");
    GeodesicPath out;
    out.length = length;
    out.speed_drift = speed_drift;
    out.start_dir = start_dir;
    out.end_dir = end_dir;
    out.end_point = end_point;
    out.samples.reserve(n + 1);
    out.at.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        double sq = length * i / n;
        out.samples.push_back(hermite_state(*this, sq));
        out.at.push_back(sq);
    }
    return out;
}

GeodesicPath geodesic_shoot(const ConformalSurface& s, double x, double y,
                            double angle, double length) {
    return std::move(shoot_impl(s, x, y, angle, length, kShootSteps, false).path);
}

GeodesicPath geodesic_connect(const ConformalSurface& s, double px, double py,
                              double qx, double qy) {
    if (!s.inside(px, py) || !s.inside(qx, qy))
        throw GeometryError("connect endpoints must lie inside the chart");
    double ex = qx - px, ey = qy - py;
    double ed = std::hypot(ex, ey);
    if (ed < 1e-12)
        throw GeometryError("connect endpoints coincide");

    // metric length of the Euclidean chord bounds the geodesic from above
    double chord = 0.0;
    const int m = 48;
    for (int i = 0; i < m; ++i) {
        double t = (i + 0.5) / m;
        chord += std::exp(s.u_at(px + t * ex, py + t * ey));
    }
    chord *= ed / m;
    double cap = 1.3 * chord + 0.1;

    double theta0 = std::atan2(ey, ex);
    double th_star = theta0;
    probe_out p0 = probe_angle(s, px, py, theta0, cap, qx, qy);
    bool solved = std::abs(p0.miss) <= 1e-13;

    if (!solved) {
        // bracket the signed miss around the chord direction, then bisect
        // with secant steps; K <= 0 keeps the root unique
        std::vector<std::pair<double, double>> evals{{theta0, p0.miss}};
        double ta = 0.0, tb = 0.0, ma = 0.0, mb = 0.0;
        bool bracketed = false;
        static constexpr double offs[] = {0.04, 0.12, 0.3, 0.6, 1.0, 1.4};
        for (double off : offs) {
            for (double th : {theta0 - off, theta0 + off}) {
                probe_out pr = probe_angle(s, px, py, th, cap, qx, qy);
                if (std::abs(pr.miss) <= 1e-13) {
                    th_star = th;
                    solved = true;
                    break;
                }
                evals.emplace_back(th, pr.miss);
            }
            if (solved)
                break;
            std::sort(evals.begin(), evals.end());
            for (size_t k = 0; k + 1 < evals.size(); ++k) {
                if ((evals[k].second > 0.0) != (evals[k + 1].second > 0.0)) {
                    ta = evals[k].first;
                    ma = evals[k].second;
                    tb = evals[k + 1].first;
                    mb = evals[k + 1].second;
                    bracketed = true;
                    break;
                }
            }
            if (bracketed)
                break;
        }
        if (!solved && !bracketed)
            throw NoConvergence("could not bracket the connecting geodesic");

        for (int it = 0; !solved && it < 140 && tb - ta > 1e-15; ++it) {
            double tm = ta - ma * (tb - ta) / (mb - ma);
            double lo = ta + 0.02 * (tb - ta);
            double hi = tb - 0.02 * (tb - ta);
            if (!(tm > lo && tm < hi))
                tm = 0.5 * (ta + tb);
            probe_out pm = probe_angle(s, px, py, tm, cap, qx, qy);
            th_star = tm;
            if (std::abs(pm.miss) <= 1e-13) {
                solved = true;
                break;
            }
            if ((pm.miss > 0.0) == (ma > 0.0)) {
                ta = tm;
                ma = pm.miss;
            } else {
                tb = tm;
                mb = pm.miss;
            }
        }
        if (!solved)
            th_star = std::abs(ma) < std::abs(mb) ? ta : tb;
    }

    // dense integration at the solved angle, then trim the arclength until
    // the endpoint projects onto the target; reintegration carries a small
    // noise floor, so the best iterate wins, not the last
    shoot_raw dense = shoot_impl(s, px, py, th_star, cap, kShootSteps, true);
    double L = closest_on_path(dense.path, qx, qy).closest_s;
    double scale = std::exp(s.u_at(qx, qy));
    GeodesicPath best;
    double best_err = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
        if (!(L > 0.0))
            throw NoConvergence("connecting geodesic collapsed to a point");
        shoot_raw rr = shoot_impl(s, px, py, th_star, L, kShootSteps, true);
        if (rr.exited)
            throw DomainExit("connecting geodesic left the chart", rr.exit_x, rr.exit_y);
        const auto& e = rr.path.end_point;
        double err = std::hypot(e[0] - qx, e[1] - qy) * scale;
        double du = (qx - e[0]) * rr.path.end_dir[0] + (qy - e[1]) * rr.path.end_dir[1];
        double ds = du * std::exp(s.u_at(e[0], e[1]));
        if (err < best_err) {
            best_err = err;
            best = std::move(rr.path);
        }
        L += ds;
        if (std::abs(ds) < 1e-13)
            break;
    }
    if (best_err > kEndpointTol)
        throw NoConvergence("connecting geodesic missed the target endpoint");
    return best;
}

namespace {

struct quad_accum {
    double area = 0.0;
    double k = 0.0;
    double kminus = 0.0;
};

// 7 point degree 5 rule with the signed Euclidean area of the triangle
void tri_rule(const ConformalSurface& s, quad_accum& acc, double ax, double ay,
              double bx, double by, double cx, double cy) {
    static const double bc[7][3] = {
        {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
        {0.059715871789770, 0.470142064105115, 0.470142064105115},
        {0.470142064105115, 0.059715871789770, 0.470142064105115},
        {0.470142064105115, 0.470142064105115, 0.059715871789770},
        {0.797426985353087, 0.101286507323456, 0.101286507323456},
        {0.101286507323456, 0.797426985353087, 0.101286507323456},
        {0.101286507323456, 0.101286507323456, 0.797426985353087}};
    static const double w[7] = {0.225,
                                0.132394152788506, 0.132394152788506, 0.132394152788506,
                                0.125939180544827, 0.125939180544827, 0.125939180544827};
    double sa = 0.5 * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
    if (sa == 0.0)
        return;
    for (int p = 0; p < 7; ++p) {
        double x = bc[p][0] * ax + bc[p][1] * bx + bc[p][2] * cx;
        double y = bc[p][0] * ay + bc[p][1] * by + bc[p][2] * cy;
        double dens = std::exp(2.0 * s.u_at(x, y));
        double kk = s.curvature_at(x, y);
        double ws = w[p] * sa;
        acc.area += ws * dens;
        acc.k += ws * kk * dens;
        acc.kminus += ws * std::max(-kk, 0.0) * dens;
    }
}

// centroid fan over a simple polygon, slivers subdivided radially; signed
// sub-areas make the sum exact for nonconvex boundaries too
void fan_integrate(const ConformalSurface& s, const std::vector<std::array<double, 2>>& poly,
                   quad_accum& acc) {
    double cx = 0.0, cy = 0.0;
    for (const auto& v : poly) {
        cx += v[0];
        cy += v[1];
    }
    cx /= poly.size();
    cy /= poly.size();

    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& v0 = poly[i];
        const auto& v1 = poly[(i + 1) % poly.size()];
        double r0 = std::hypot(v0[0] - cx, v0[1] - cy);
        double r1 = std::hypot(v1[0] - cx, v1[1] - cy);
        int strips = std::max(1, static_cast<int>(std::ceil(std::max(r0, r1) / kStripLen)));
        double pax = cx, pay = cy, pbx = cx, pby = cy;
        for (int k = 1; k <= strips; ++k) {
            double f = static_cast<double>(k) / strips;
            double nax = cx + f * (v0[0] - cx), nay = cy + f * (v0[1] - cy);
            double nbx = cx + f * (v1[0] - cx), nby = cy + f * (v1[1] - cy);
            tri_rule(s, acc, pax, pay, nax, nay, nbx, nby);
            tri_rule(s, acc, pax, pay, nbx, nby, pbx, pby);
            pax = nax;
            pay = nay;
            pbx = nbx;
            pby = nby;
        }
    }
}

} // namespace

SmoothTriangle measure_triangle(const ConformalSurface& s, std::array<double, 2> A,
                                std::array<double, 2> B, std::array<double, 2> C) {
    GeodesicPath ab = geodesic_connect(s, A[0], A[1], B[0], B[1]);
    GeodesicPath bc = geodesic_connect(s, B[0], B[1], C[0], C[1]);
    GeodesicPath ca = geodesic_connect(s, C[0], C[1], A[0], A[1]);

    // interior angle between the outgoing side and the reversed incoming side
    auto corner = [](const std::array<double, 2>& out_dir, const std::array<double, 2>& in_dir) {
        double dot = -(out_dir[0] * in_dir[0] + out_dir[1] * in_dir[1]);
        double cr = out_dir[0] * in_dir[1] - out_dir[1] * in_dir[0];
        return std::atan2(std::abs(cr), dot);
    };
    double alpha = corner(ab.start_dir, ca.end_dir);
    double beta = corner(bc.start_dir, ab.end_dir);
    double gamma = corner(ca.start_dir, bc.end_dir);

    std::vector<std::array<double, 2>> poly;
    poly.reserve(ab.samples.size() + bc.samples.size() + ca.samples.size());
    auto append_side = [&poly](const GeodesicPath& p) {
        for (size_t i = 0; i + 1 < p.samples.size(); ++i)
            poly.push_back({p.samples[i][0], p.samples[i][1]});
    };
    append_side(ab);
    append_side(bc);
    append_side(ca);

    double doubled = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& v0 = poly[i];
        const auto& v1 = poly[(i + 1) % poly.size()];
        doubled += v0[0] * v1[1] - v0[1] * v1[0];
    }
    if (doubled == 0.0)
        throw GeometryError("triangle boundary encloses no area");
    if (doubled < 0.0)
        std::reverse(poly.begin(), poly.end());

    quad_accum acc;
    fan_integrate(s, poly, acc);
    if (!(acc.area > 0.0))
        throw GeometryError("triangle has no interior");

    SmoothTriangle out;
    out.curvature_integral = acc.k;
    out.kminus_integral = acc.kminus;
    out.gb_residual = std::abs(acc.k - (alpha + beta + gamma - M_PI));
    out.data = make_triangle_data(bc.length, ca.length, ab.length, alpha, beta, gamma,
                                  acc.area, "conformal");
    return out;
}

SmoothDisk measure_disk(const ConformalSurface& s, double px, double py,
                        double radius, int rays) {
    if (rays < 8)
        throw GeometryError("disk sweep needs at least 8 rays");
    if (!(radius > 0.0))
        throw GeometryError("disk radius must be positive");
    if (!s.inside(px, py))
        throw GeometryError("disk center lies outside the chart");

    int levels = std::max(64, static_cast<int>(std::ceil(radius / 0.01)));
    std::vector<GeodesicPath> fan;
    fan.reserve(rays);
    for (int k = 0; k < rays; ++k) {
        double th = 2.0 * M_PI * k / rays;
        shoot_raw r = shoot_impl(s, px, py, th, radius, std::max(128, levels), false);
        fan.push_back(r.path.resampled(levels));
    }

    // metric length of the Euclidean chords between consecutive rim points
    static const double gx[4] = {-0.861136311594053, -0.339981043584856,
                                 0.339981043584856, 0.861136311594053};
    static const double gw[4] = {0.347854845137454, 0.652145154862546,
                                 0.652145154862546, 0.347854845137454};
    double per = 0.0;
    for (int k = 0; k < rays; ++k) {
        const auto& p0 = fan[k].end_point;
        const auto& p1 = fan[(k + 1) % rays].end_point;
        double dx = p1[0] - p0[0], dy = p1[1] - p0[1];
        double len = std::hypot(dx, dy);
        double factor = 0.0;
        for (int i = 0; i < 4; ++i) {
            double t = 0.5 * (1.0 + gx[i]);
            factor += gw[i] * std::exp(s.u_at(p0[0] + t * dx, p0[1] + t * dy));
        }
        per += 0.5 * len * factor;
    }

    quad_accum acc;
    for (int k = 0; k < rays; ++k) {
        const GeodesicPath& r0 = fan[k];
        const GeodesicPath& r1 = fan[(k + 1) % rays];
        for (int j = 0; j < levels; ++j) {
            const auto& a = r0.samples[j];
            const auto& b = r0.samples[j + 1];
            const auto& c = r1.samples[j + 1];
            const auto& d = r1.samples[j];
            tri_rule(s, acc, a[0], a[1], b[0], b[1], c[0], c[1]);
            tri_rule(s, acc, a[0], a[1], c[0], c[1], d[0], d[1]);
        }
    }

    SmoothDisk out;
    out.radius = radius;
    out.rays = rays;
    out.perimeter = per;
    out.area = acc.area;
    out.kminus = acc.kminus;
    out.margin = out.area - reverse_isoperimetric_rhs(per, acc.kminus);
    return out;
}

} // namespace conegeo
