#include "conegeo/cone.hpp"

#include <algorithm>
#include <cmath>

namespace conegeo {

namespace {

void check_radius(const ConePoint& p) {
    if (!std::isfinite(p.r) || p.r < 0.0)
        throw GeometryError("cone point needs a finite radius >= 0");
}

double wrap_into(double phi, double theta) {
    double w = std::fmod(phi, theta);
    if (w < 0.0) w += theta;
    return w;
}

} // namespace

double cone_distance(const ConeSpec& cone, const ConePoint& p, const ConePoint& q) {
    check_radius(p);
    check_radius(q);
    if (p.r == 0.0) return q.r;
    if (q.r == 0.0) return p.r;
    double gap = std::abs(wrap_into(p.phi - q.phi, cone.theta));
    gap = std::min(gap, cone.theta - gap);
    if (gap >= M_PI) return p.r + q.r; // shortest path runs through the apex
    if (gap == 0.0) return std::abs(p.r - q.r);
    return law_of_cosines(cone.curvature, p.r, q.r, gap);
}

DiskMeasure vertex_disk(const ConeSpec& cone, double R) {
    if (!std::isfinite(R) || R <= 0.0)
        throw GeometryError("disk radius must be positive");
    if (cone.curvature.flat())
        return {cone.theta * R, 0.5 * cone.theta * R * R};
    double k = cone.curvature.k();
    double kr = k * R;
    return {cone.theta * std::sinh(kr) / k,
            cone.theta * (std::cosh(kr) - 1.0) / (k * k)};
}

double reverse_isoperimetric_rhs(double L, double kminus) {
    if (L < 0.0 || kminus < 0.0)
        throw GeometryError("boundary length and curvature mass must be nonnegative");
    return L * L / (4.0 * M_PI + 2.0 * kminus);
}

double ConeSurface::wrap_gap(double dphi) const {
    double g = std::abs(wrap_into(dphi, spec_.theta));
    return std::min(g, spec_.theta - g);
}

double ConeSurface::distance(const Point& p, const Point& q) const {
    return cone_distance(spec_, p, q);
}

double ConeSurface::bearing(const Point& from, const Point& to) const {
    check_radius(from);
    check_radius(to);
    if (from.r == 0.0)
        throw GeometryError("bearing undefined at the apex");
    // signed azimuthal offset with minimal magnitude
    double d = wrap_into(to.phi - from.phi, spec_.theta);
    if (d > 0.5 * spec_.theta) d -= spec_.theta;
    double gap = std::abs(d);
    if (gap > M_PI)
        throw GeometryError("no direct geodesic: azimuthal gap exceeds pi");
    if (to.r == 0.0 || gap == 0.0) {
        if (to.r >= from.r && gap == 0.0) return M_PI; // straight away from apex
        return 0.0;
    }
    double dist = law_of_cosines(spec_.curvature, from.r, to.r, gap);
    double off = angle_from_sides(spec_.curvature, to.r, from.r, dist);
    return d >= 0.0 ? off : -off;
}

ConeSurface::Point ConeSurface::point_on_segment(const Point& p, const Point& q,
                                                 double s) const {
    double d = wrap_into(q.phi - p.phi, spec_.theta);
    if (d > 0.5 * spec_.theta) d -= spec_.theta;
    if (std::abs(d) > M_PI)
        throw GeometryError("no direct geodesic: azimuthal gap exceeds pi");
    // develop the wedge containing both points and walk in the plane
    HPlane::Point dp = dev_.from_polar(p.r, 0.0);
    HPlane::Point dq = dev_.from_polar(q.r, d);
    HPlane::Point at = dev_.advance(dev_.ray_through(dp, dq), s);
    auto [r, phi] = dev_.to_polar(at);
    return {r, wrap_into(p.phi + phi, spec_.theta)};
}

ConeSurface::Measured ConeSurface::measure_apex_triangle(const Point& A,
                                                         const Point& B,
                                                         const Point& C) const {
    const Point v[3] = {A, B, C};
    for (const Point& p : v)
        if (p.r <= 0.0) throw GeometryError("triangle vertex at the apex");

    // azimuthal gaps spanned by the sides a = BC, b = CA, c = AB
    double gap[3];
    gap[0] = wrap_gap(B.phi - C.phi);
    gap[1] = wrap_gap(C.phi - A.phi);
    gap[2] = wrap_gap(A.phi - B.phi);
    double span = gap[0] + gap[1] + gap[2];
    // Strict enclosure means the three sides wind once around the apex, so
    // the gaps partition the full angle; each direct side needs gap < pi.
    if (std::abs(span - spec_.theta) > 1e-9 * std::max(1.0, spec_.theta))
        throw ApexOutside("triangle does not wind around the apex");
    for (double g : gap)
        if (g <= 0.0 || g >= M_PI)
            throw ApexOutside("apex lies on or outside a side");

    Measured m{};
    m.apex_dist = {A.r, B.r, C.r};
    // hinge at the apex: sub-triangle opposite vertex i uses the other two radii
    for (int i = 0; i < 3; ++i) {
        double r1 = m.apex_dist[(i + 1) % 3];
        double r2 = m.apex_dist[(i + 2) % 3];
        m.side[i] = law_of_cosines(spec_.curvature, r1, r2, gap[i]);
        m.psi[i] = gap[i];
    }
    // interior angle at a vertex = sum of the two base angles meeting there
    double area = 0.0;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, kx = (i + 2) % 3;
        // base angle at vertex i inside the sub-triangle spanning side c(i,j)
        double toward_j = angle_from_sides(spec_.curvature, m.apex_dist[j],
                                           m.apex_dist[i], m.side[kx]);
        double toward_k = angle_from_sides(spec_.curvature, m.apex_dist[kx],
                                           m.apex_dist[i], m.side[j]);
        m.split[i] = {toward_j, toward_k};
        m.angle[i] = toward_j + toward_k;
    }
    for (int i = 0; i < 3; ++i) {
        PlaneTriangle sub = solve_sss(spec_.curvature, m.apex_dist[(i + 1) % 3],
                                      m.apex_dist[(i + 2) % 3], m.side[i]);
        area += sub.area;
    }
    m.area = area;
    return m;
}

std::array<ConePoint, 3> random_apex_triangle(const ConeSpec& cone, Rng& rng) {
    double theta = cone.theta;
    if (theta <= 2.0 * M_PI || theta > 2.9 * M_PI)
        throw GeometryError("apex triangle sampling needs theta in (2pi, 2.9pi]");
    const double gmax = 0.97 * M_PI; // per-gap cap; 3*gmax = 2.91pi covers the guard
    const double gmin = 0.02;
    for (;;) {
        // gaps strictly inside (0, pi) summing to theta: draw the first two
        // inside windows that always leave room for a valid third
        double g0 = rng.uniform(std::max(gmin, theta - 2.0 * gmax + 1e-3),
                                std::min(gmax, theta - 2.0 * gmin));
        double g1 = rng.uniform(std::max(gmin, theta - g0 - gmax),
                                std::min(gmax, theta - g0 - gmin));
        double g2 = theta - g0 - g1;
        if (g2 <= gmin || g2 >= gmax) continue;
        ConePoint A{rng.uniform(0.3, 2.0), 0.0};
        ConePoint B{rng.uniform(0.3, 2.0), g2};       // gap c = AB
        ConePoint C{rng.uniform(0.3, 2.0), g2 + g0};  // gap a = BC
        return {A, B, C};
    }
}

double cone_gauss_bonnet_residual(const ConeSpec& cone, const ConePoint& A,
                                  const ConePoint& B, const ConePoint& C) {
    ConeSurface surf(cone);
    ConeSurface::Measured m = surf.measure_apex_triangle(A, B, C);
    double angle_sum = m.angle[0] + m.angle[1] + m.angle[2];
    double turning = 3.0 * M_PI - angle_sum;
    // curvature integral + apex mass + boundary turning must close up to 2 pi
    return cone.curvature.lambda * m.area + cone.apex_curvature() + turning -
           2.0 * M_PI;
}

} // namespace conegeo
