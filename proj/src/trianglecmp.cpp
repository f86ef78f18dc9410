#include "conegeo/trianglecmp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

namespace conegeo {

namespace {

constexpr double kNewtonTol = 1e-11;
constexpr int kNewtonIters = 200;

void check_angle_open(double x, const char* name) {
    if (!std::isfinite(x) || x <= 0.0 || x >= M_PI)
        throw GeometryError(std::string(name) + " must lie strictly between 0 and pi");
}

} // namespace

TriangleData make_triangle_data(double a, double b, double c, double alpha,
                                double beta, double gamma, double area,
                                std::string source) {
    for (auto [s, n] : {std::pair{a, "a"}, {b, "b"}, {c, "c"}})
        if (!std::isfinite(s) || s <= 0.0)
            throw GeometryError(std::string("side ") + n + " must be positive");
    if (a + b <= c || b + c <= a || c + a <= b)
        throw GeometryError("triangle inequality violated");
    check_angle_open(alpha, "alpha");
    check_angle_open(beta, "beta");
    check_angle_open(gamma, "gamma");
    double sum = alpha + beta + gamma;
    if (sum > M_PI + 1e-9 * std::max(1.0, sum))
        throw GeometryError("angle sum exceeds pi: not a nonpositively curved triangle");
    if (!std::isfinite(area) || area <= 0.0)
        throw GeometryError("area must be positive");
    return {a, b, c, alpha, beta, gamma, area, std::move(source)};
}

TriangleData triangle_data_from_plane(const PlaneTriangle& t, std::string source) {
    return make_triangle_data(t.a, t.b, t.c, t.alpha, t.beta, t.gamma, t.area,
                              std::move(source));
}

TriangleData triangle_data_from_cone(const ConeSurface::Measured& m) {
    return make_triangle_data(m.side[0], m.side[1], m.side[2], m.angle[0],
                              m.angle[1], m.angle[2], m.area, "cone");
}

PlaneTriangle comparison_base_angles(double lambda0, double base_c,
                                     double alpha, double beta) {
    return solve_asa(CurvatureLevel(lambda0), alpha, base_c, beta);
}

TriangleReport verify_base_angle_inequality(const TriangleData& delta,
                                            double lambda0, double tol) {
    TriangleReport rep{delta.area,
                       std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::quiet_NaN(),
                       std::nullopt,
                       false,
                       "ok"};
    PlaneTriangle cmp{CurvatureLevel(0.0), 0, 0, 0, 0, 0, 0, 0};
    try {
        cmp = comparison_base_angles(lambda0, delta.c, delta.alpha, delta.beta);
    } catch (const NoSuchTriangle&) {
        rep.status = "no_comparison_triangle";
        return rep;
    }
    rep.area_rhs = cmp.area;
    rep.margin = rep.area_lhs - rep.area_rhs;
    // equal areas alone do not certify isometry; the free sides must agree
    rep.equality = std::abs(rep.margin) <= tol &&
                   std::abs(delta.a - cmp.a) <= tol * std::max(1.0, delta.a) &&
                   std::abs(delta.b - cmp.b) <= tol * std::max(1.0, delta.b);
    return rep;
}

std::pair<TriangleData, TriangleData> right_triangle_split(
    const HPlane& pl, const PlanePoint& A, const PlanePoint& B,
    const PlanePoint& C) {
    double alpha = pl.angle_at(A, B, C);
    double beta = pl.angle_at(B, A, C);
    if (alpha >= M_PI / 2.0 || beta >= M_PI / 2.0)
        throw GeometryError("height split needs both base angles acute");
    PlanePoint H = pl.foot_of_perpendicular(A, B, C);
    double along = pl.ray_parameter(pl.ray_through(A, B), H);
    double base = pl.distance(A, B);
    if (along <= 0.0 || along >= base)
        throw GeometryError("perpendicular foot fell outside the base");
    auto piece = [&](const PlanePoint& V) {
        return make_triangle_data(pl.distance(H, C), pl.distance(V, C),
                                  pl.distance(V, H), pl.angle_at(V, H, C),
                                  pl.angle_at(H, V, C), pl.angle_at(C, V, H),
                                  pl.triangle_area(V, H, C), "split");
    };
    return {piece(A), piece(B)};
}

std::pair<TriangleData, TriangleData> right_triangle_split(
    const ConeSurface& surf, const ConePoint& A, const ConePoint& B,
    const ConePoint& C) {
    ConeSurface::Measured m = surf.measure_apex_triangle(A, B, C);
    if (m.angle[0] >= M_PI / 2.0 || m.angle[1] >= M_PI / 2.0)
        throw GeometryError("height split needs both base angles acute");
    CurvatureLevel lam = surf.spec().curvature;

    // The height from C runs through the apex, so its foot is the closest
    // point of AB to the apex: there the radial direction is perpendicular
    // to the base. Locate it by bisecting the bearing toward B, which
    // crosses pi/2 exactly once along the segment.
    double base = m.side[2];
    auto off_perp = [&](double s) {
        ConePoint p = surf.point_on_segment(A, B, s);
        return std::abs(surf.bearing(p, B)) - M_PI / 2.0;
    };
    double lo = 0.0, hi = base;
    if (!(off_perp(lo) < 0.0) || !(off_perp(hi * (1.0 - 1e-12)) > 0.0))
        throw GeometryError("apex foot fell outside the base");
    for (int it = 0; it < 200 && hi - lo > 1e-14 * base; ++it) {
        double mid = 0.5 * (lo + hi);
        (off_perp(mid) < 0.0 ? lo : hi) = mid;
    }
    double along = 0.5 * (lo + hi);
    ConePoint H = surf.point_on_segment(A, B, along);
    double height = H.r + C.r;
    if (std::abs(surf.distance(H, C) - height) > 1e-9 * std::max(1.0, height))
        throw GeometryError("height does not run through the apex");

    // Each half develops into two plane triangles around its radial cut.
    auto half = [&](const ConePoint& V, double cut, double hyp, double split_c,
                    double vertex_angle) {
        double area = solve_sss(lam, cut, H.r, V.r).area +
                      solve_sss(lam, V.r, C.r, hyp).area;
        return make_triangle_data(height, hyp, cut, vertex_angle,
                                  std::abs(surf.bearing(H, V)), split_c, area,
                                  "cone-split");
    };
    return {half(A, along, m.side[1], m.split[2].first, m.angle[0]),
            half(B, base - along, m.side[0], m.split[2].second, m.angle[1])};
}

PlaneTriangle glue_right_triangles(const PlaneTriangle& t1,
                                   const PlaneTriangle& t2, double lambda0) {
    if (t1.curvature.lambda != lambda0 || t2.curvature.lambda != lambda0)
        throw GeometryError("glued triangles must live in the plane of lambda0");
    if (std::abs(t1.beta - M_PI / 2.0) > 1e-9 ||
        std::abs(t2.beta - M_PI / 2.0) > 1e-9)
        throw GeometryError("glue needs right angles at the B vertices");
    CurvatureLevel lam(lambda0);
    double h1 = t1.a, h2 = t2.a;
    if (std::abs(h1 - h2) <= 1e-12 * std::max({1.0, h1, h2}))
        return solve_sss(lam, t2.b, t1.b, t1.c + t2.c);

    // Unequal heights: stand both triangles on a common base line with the
    // feet at the origin and extend the hypotenuses until they meet.
    HPlane pl(lam);
    PlanePoint va = pl.from_polar(t1.c, M_PI);
    PlanePoint vb = pl.from_polar(t2.c, 0.0);
    PlanePoint c1 = pl.from_polar(h1, M_PI / 2.0);
    PlanePoint c2 = pl.from_polar(h2, M_PI / 2.0);
    auto meet = pl.intersect_rays(pl.ray_through(va, c1), pl.ray_through(vb, c2));
    if (!meet)
        throw NoSuchTriangle("hypotenuse extensions diverge");
    return solve_sss(lam, pl.distance(vb, *meet), pl.distance(va, *meet),
                     t1.c + t2.c);
}

namespace {

// Chain evaluation for the two-angle parametrization of the candidate apex.
// Choosing the splits at A and B beside side c pins the whole radial fan:
// the sub-triangle over c comes from ASA, the one over a from SAS at B, and
// the one over b must close the fan, leaving angle mismatches at A and C as
// the two residuals. The domain (0, alpha) x (0, beta) is compact, so a
// coarse scan finds reliable seeds and certifies nonexistence when the
// residual never gets small.
struct chain_state {
    bool valid = false;
    double res = std::numeric_limits<double>::infinity();
    double f1 = 0.0, f2 = 0.0; // angle mismatches at A and C
    double dA = 0.0, dB = 0.0, dC = 0.0;
    double beta1 = 0.0, alpha2 = 0.0, gamma1 = 0.0, gamma2 = 0.0;
    double psi_a = 0.0, psi_b = 0.0, psi_c = 0.0;
    double area = 0.0;
};

chain_state eval_chain(CurvatureLevel lam, const TriangleData& data,
                       double alpha1, double beta2) {
    chain_state st;
    if (!std::isfinite(alpha1) || alpha1 <= 0.0 || alpha1 >= data.alpha)
        return st;
    if (!std::isfinite(beta2) || beta2 <= 0.0 || beta2 >= data.beta) return st;
    try {
        PlaneTriangle sub_c = solve_asa(lam, alpha1, data.c, beta2);
        st.dA = sub_c.b;
        st.dB = sub_c.a;
        st.psi_c = sub_c.gamma;
        st.beta1 = data.beta - beta2;
        PlaneTriangle sub_a = solve_sas(lam, st.dB, st.beta1, data.a);
        st.dC = sub_a.c;
        st.gamma2 = sub_a.alpha;
        st.psi_a = sub_a.beta;
        double b = data.b;
        if (st.dA + st.dC <= b || st.dA + b <= st.dC || st.dC + b <= st.dA)
            return st;
        st.alpha2 = angle_from_sides(lam, st.dC, st.dA, b);
        st.gamma1 = angle_from_sides(lam, st.dA, st.dC, b);
        st.psi_b = angle_from_sides(lam, b, st.dA, st.dC);
        st.area = sub_c.area + sub_a.area + solve_sss(lam, st.dA, st.dC, b).area;
    } catch (const GeometryError&) {
        return st;
    }
    st.f1 = alpha1 + st.alpha2 - data.alpha;
    st.f2 = st.gamma1 + st.gamma2 - data.gamma;
    st.res = std::max(std::abs(st.f1), std::abs(st.f2));
    st.valid = true;
    return st;
}

ConeTriangle flat_cone_triangle(const TriangleData& data) {
    HPlane pl{CurvatureLevel(0.0)};
    PlanePoint A = pl.origin();
    PlanePoint B = pl.from_polar(data.c, 0.0);
    PlanePoint C = pl.from_polar(data.b, data.alpha);
    if (std::abs(pl.distance(B, C) - data.a) > 1e-8 * std::max(1.0, data.a))
        throw NoConvergence("flat angle sum but sides are not plane-consistent");
    PlanePoint O{(A.x + B.x + C.x) / 3.0, (A.y + B.y + C.y) / 3.0, 1.0};
    double area = solve_sss(CurvatureLevel(0.0), data.a, data.b, data.c).area;
    ConeTriangle ct{ConeSpec(CurvatureLevel(0.0), 2.0 * M_PI),
                    pl.distance(A, O),
                    pl.distance(B, O),
                    pl.distance(C, O),
                    pl.angle_at(O, B, C),
                    pl.angle_at(O, C, A),
                    pl.angle_at(O, A, B),
                    pl.angle_at(A, B, O),
                    pl.angle_at(A, O, C),
                    pl.angle_at(B, C, O),
                    pl.angle_at(B, O, A),
                    pl.angle_at(C, A, O),
                    pl.angle_at(C, O, B),
                    area,
                    true,
                    0.0,
                    0};
    return ct;
}

} // namespace

ConeTriangle cone_comparison_triangle(double lambda0, const TriangleData& data) {
    CurvatureLevel lam(lambda0);
    double angle_sum = data.alpha + data.beta + data.gamma;
    if (angle_sum >= M_PI - 1e-9) {
        if (lam.flat()) return flat_cone_triangle(data);
        throw NoConvergence("angle sum pi admits no comparison on a curved cone");
    }

    int used = 0;
    auto assemble = [&](double alpha1, double beta2, const chain_state& st) {
        return ConeTriangle{ConeSpec(lam, st.psi_a + st.psi_b + st.psi_c),
                            st.dA,
                            st.dB,
                            st.dC,
                            st.psi_a,
                            st.psi_b,
                            st.psi_c,
                            alpha1,
                            st.alpha2,
                            st.beta1,
                            beta2,
                            st.gamma1,
                            st.gamma2,
                            st.area,
                            false,
                            st.res,
                            used};
    };

    auto newton_from = [&](double x1, double x2) -> std::optional<ConeTriangle> {
        chain_state st = eval_chain(lam, data, x1, x2);
        if (!st.valid) return std::nullopt;
        for (int it = 0; it < kNewtonIters; ++it) {
            ++used;
            if (st.res < kNewtonTol) return assemble(x1, x2, st);

            double h1 = 1e-7 * std::max(1.0, std::abs(x1));
            if (x1 + h1 >= data.alpha) h1 = -h1;
            double h2 = 1e-7 * std::max(1.0, std::abs(x2));
            if (x2 + h2 >= data.beta) h2 = -h2;
            chain_state s1 = eval_chain(lam, data, x1 + h1, x2);
            if (!s1.valid) {
                h1 = -h1;
                s1 = eval_chain(lam, data, x1 + h1, x2);
            }
            chain_state s2 = eval_chain(lam, data, x1, x2 + h2);
            if (!s2.valid) {
                h2 = -h2;
                s2 = eval_chain(lam, data, x1, x2 + h2);
            }
            if (!s1.valid || !s2.valid) return std::nullopt;
            double j11 = (s1.f1 - st.f1) / h1, j21 = (s1.f2 - st.f2) / h1;
            double j12 = (s2.f1 - st.f1) / h2, j22 = (s2.f2 - st.f2) / h2;
            double det = j11 * j22 - j12 * j21;
            if (!std::isfinite(det) || std::abs(det) < 1e-300)
                return std::nullopt;
            double step1 = (-st.f1 * j22 + st.f2 * j12) / det;
            double step2 = (-j11 * st.f2 + j21 * st.f1) / det;

            double t = 1.0;
            bool moved = false;
            for (int halving = 0; halving < 40; ++halving, t *= 0.5) {
                double n1 = std::clamp(x1 + t * step1, 1e-12 * data.alpha,
                                       (1.0 - 1e-12) * data.alpha);
                double n2 = std::clamp(x2 + t * step2, 1e-12 * data.beta,
                                       (1.0 - 1e-12) * data.beta);
                chain_state sn = eval_chain(lam, data, n1, n2);
                if (sn.valid && sn.res < st.res) {
                    x1 = n1;
                    x2 = n2;
                    st = sn;
                    moved = true;
                    break;
                }
            }
            if (!moved) return std::nullopt;
        }
        return std::nullopt;
    };

    auto attempt = [&](int n, int starts) -> std::optional<ConeTriangle> {
        // residual scan over the split rectangle, best cells first
        std::vector<std::tuple<double, double, double>> cells;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double x1 = data.alpha * (i + 0.5) / n;
                double x2 = data.beta * (j + 0.5) / n;
                chain_state st = eval_chain(lam, data, x1, x2);
                if (st.valid) cells.emplace_back(st.res, x1, x2);
            }
        }
        std::sort(cells.begin(), cells.end());
        int tried = 0;
        for (const auto& [res, x1, x2] : cells) {
            if (tried++ >= starts) break;
            if (auto ct = newton_from(x1, x2)) return ct;
        }
        return std::nullopt;
    };

    if (auto ct = attempt(24, 6)) return *ct;
    if (auto ct = attempt(96, 12)) return *ct;
    throw NoConvergence("no cone comparison triangle found");
}

double cone_triangle_residual(const ConeTriangle& ct, const TriangleData& data) {
    double r = 0.0;
    r = std::max(r, std::abs(ct.alpha1 + ct.alpha2 - data.alpha));
    r = std::max(r, std::abs(ct.beta1 + ct.beta2 - data.beta));
    r = std::max(r, std::abs(ct.gamma1 + ct.gamma2 - data.gamma));
    r = std::max(r, std::abs(ct.psi_a + ct.psi_b + ct.psi_c - ct.spec.theta));
    CurvatureLevel lam = ct.spec.curvature;
    double sum = solve_sss(lam, ct.dB, ct.dC, data.a).area +
                 solve_sss(lam, ct.dC, ct.dA, data.b).area +
                 solve_sss(lam, ct.dA, ct.dB, data.c).area;
    r = std::max(r, std::abs(ct.area - sum));
    return r;
}

Decomposition decompose_plane_triangle(const HPlane& pl,
                                       const TriangleData& data,
                                       const ConeTriangle& ct) {
    PlanePoint A = pl.origin();
    PlanePoint B = pl.from_polar(data.c, 0.0);
    PlanePoint C = pl.from_polar(data.b, data.alpha);
    if (std::abs(pl.distance(B, C) - data.a) > 1e-8 * std::max(1.0, data.a))
        throw GeometryError("triangle data does not fit this plane");

    // one interior ray per vertex, placed by the comparison splits
    HPlane::Ray ra = pl.rotate_ray(pl.ray_through(A, B), ct.alpha1);
    HPlane::Ray rb = pl.rotate_ray(pl.ray_through(B, A), -ct.beta2);
    HPlane::Ray rc = pl.rotate_ray(pl.ray_through(C, A), ct.gamma1);

    auto cut = [&](const HPlane::Ray& r1, const HPlane::Ray& r2,
                   const PlanePoint& v1, const PlanePoint& v2,
                   const char* which) {
        auto p = pl.intersect_rays(r1, r2);
        if (!p)
            throw DecompositionFailed(std::string("rays toward side ") + which +
                                      " do not meet");
        return make_triangle_data(
            pl.distance(v1, v2), pl.distance(*p, v2), pl.distance(*p, v1),
            pl.angle_at(*p, v1, v2), pl.angle_at(v1, *p, v2),
            pl.angle_at(v2, *p, v1), pl.triangle_area(*p, v1, v2),
            data.source + "-sub");
    };
    Decomposition dec{cut(rb, rc, B, C, "a"), cut(rc, ra, C, A, "b"),
                      cut(ra, rb, A, B, "c"), 0.0, false};
    double total = pl.triangle_area(A, B, C);
    dec.x_area =
        total - (dec.sub_a.area + dec.sub_b.area + dec.sub_c.area);
    dec.rays_concurrent = std::abs(dec.x_area) <= 1e-9 * std::max(1.0, total);
    return dec;
}

Decomposition decompose_cone_triangle(const ConeSurface& surf,
                                      const ConePoint& A, const ConePoint& B,
                                      const ConePoint& C,
                                      const ConeTriangle& ct, double tol) {
    ConeSurface::Measured m = surf.measure_apex_triangle(A, B, C);
    const double split_err = std::max(
        {std::abs(m.split[0].first - ct.alpha1),
         std::abs(m.split[0].second - ct.alpha2),
         std::abs(m.split[1].first - ct.beta1),
         std::abs(m.split[1].second - ct.beta2),
         std::abs(m.split[2].first - ct.gamma1),
         std::abs(m.split[2].second - ct.gamma2)});
    if (split_err > tol)
        throw DecompositionFailed("splits do not point the rays at the apex");

    CurvatureLevel lam = surf.spec().curvature;
    auto radial = [&](int k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        PlaneTriangle t = solve_sss(lam, m.apex_dist[i], m.apex_dist[j], m.side[k]);
        return triangle_data_from_plane(t, "cone-sub");
    };
    Decomposition dec{radial(0), radial(1), radial(2), 0.0, true};
    dec.x_area = m.area - (dec.sub_a.area + dec.sub_b.area + dec.sub_c.area);
    return dec;
}

TriangleReport verify_triangle_theorem(const TriangleData& delta, double lambda0,
                                       std::optional<double> x_area, double tol) {
    TriangleReport rep{delta.area,
                       std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::quiet_NaN(),
                       x_area,
                       false,
                       "ok"};
    ConeTriangle ct{ConeSpec(CurvatureLevel(0.0), 2.0 * M_PI), 0, 0, 0, 0, 0,
                    0, 0, 0, 0, 0, 0, 0, 0.0, false, 0.0, 0};
    try {
        ct = cone_comparison_triangle(lambda0, delta);
    } catch (const NoConvergence&) {
        rep.status = "no_comparison_triangle";
        return rep;
    }
    rep.area_rhs = ct.area;
    rep.margin = rep.area_lhs - rep.area_rhs;
    rep.equality = std::abs(rep.margin) <= tol;
    if (ct.flat_degenerate) rep.status = "flat";
    return rep;
}

} // namespace conegeo
