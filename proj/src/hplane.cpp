#include "conegeo/hplane.hpp"

#include <cmath>

namespace conegeo {

namespace {

// Minkowski inner product with signature (+, +, -).
double mdot(const PlanePoint& a, const PlanePoint& b) {
    return a.x * b.x + a.y * b.y - a.z * b.z;
}

// Lorentz cross product: Euclidean cross product with the z component
// negated, so that mdot(lcross(a,b), a) = 0 for all a, b.
PlanePoint lcross(const PlanePoint& a, const PlanePoint& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            -(a.x * b.y - a.y * b.x)};
}

PlanePoint scale(const PlanePoint& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

PlanePoint add(const PlanePoint& a, const PlanePoint& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

PlanePoint sub(const PlanePoint& a, const PlanePoint& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

// project back onto the unit hyperboloid to keep roundoff from accumulating
PlanePoint renormalize_hyperboloid(PlanePoint p) {
    double n = -mdot(p, p);
    if (n <= 0.0) throw GeometryError("point left the hyperboloid");
    return scale(p, 1.0 / std::sqrt(n));
}

PlanePoint normalize_spacelike(PlanePoint v) {
    double n = mdot(v, v);
    if (n <= 0.0) throw GeometryError("expected a spacelike vector");
    return scale(v, 1.0 / std::sqrt(n));
}

} // namespace

HPlane::Point HPlane::origin() const { return {0.0, 0.0, 1.0}; }

HPlane::Point HPlane::from_polar(double r, double phi) const {
    if (lam_.flat()) return {r * std::cos(phi), r * std::sin(phi), 1.0};
    double kr = lam_.k() * r;
    double s = std::sinh(kr);
    return {s * std::cos(phi), s * std::sin(phi), std::cosh(kr)};
}

std::pair<double, double> HPlane::to_polar(const Point& p) const {
    double phi = std::atan2(p.y, p.x);
    if (lam_.flat()) return {std::hypot(p.x, p.y), phi};
    return {acosh1p(std::max(0.0, p.z - 1.0)) / lam_.k(), phi};
}

double HPlane::distance(const Point& p, const Point& q) const {
    if (lam_.flat()) return std::hypot(p.x - q.x, p.y - q.y);
    // cosh(k d) = -<p,q>;  -<p,q> - 1 computed via the chord for accuracy
    PlanePoint d = sub(p, q);
    double y = 0.5 * mdot(d, d);
    return acosh1p(std::max(0.0, y)) / lam_.k();
}

double HPlane::angle_at(const Point& at, const Point& p, const Point& q) const {
    Ray rp = ray_through(at, p);
    Ray rq = ray_through(at, q);
    double c, s;
    if (lam_.flat()) {
        c = rp.dir.x * rq.dir.x + rp.dir.y * rq.dir.y;
        s = rp.dir.x * rq.dir.y - rp.dir.y * rq.dir.x;
    } else {
        c = mdot(rp.dir, rq.dir);
        s = mdot(lcross(at, rp.dir), rq.dir);
    }
    return std::abs(std::atan2(s, c));
}

double HPlane::triangle_area(const Point& a, const Point& b, const Point& c) const {
    if (lam_.flat())
        return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    double defect = M_PI - angle_at(a, b, c) - angle_at(b, a, c) - angle_at(c, a, b);
    return std::max(0.0, defect) / (-lam_.lambda);
}

HPlane::Ray HPlane::ray_through(const Point& from, const Point& toward) const {
    if (lam_.flat()) {
        double dx = toward.x - from.x, dy = toward.y - from.y;
        double n = std::hypot(dx, dy);
        if (n == 0.0) throw GeometryError("ray through coincident points");
        return {from, {dx / n, dy / n, 0.0}};
    }
    // component of `toward` orthogonal to `from` in the Minkowski metric
    PlanePoint v = add(toward, scale(from, mdot(from, toward)));
    double n = mdot(v, v);
    if (n <= 0.0) throw GeometryError("ray through coincident points");
    return {from, scale(v, 1.0 / std::sqrt(n))};
}

HPlane::Ray HPlane::rotate_ray(const Ray& r, double ccw) const {
    double c = std::cos(ccw), s = std::sin(ccw);
    if (lam_.flat()) {
        return {r.base,
                {c * r.dir.x - s * r.dir.y, s * r.dir.x + c * r.dir.y, 0.0}};
    }
    // lcross(base, dir) is the unit tangent 90 degrees counterclockwise of dir
    PlanePoint perp = lcross(r.base, r.dir);
    return {r.base, add(scale(r.dir, c), scale(perp, s))};
}

HPlane::Point HPlane::advance(const Ray& r, double s) const {
    if (lam_.flat())
        return {r.base.x + s * r.dir.x, r.base.y + s * r.dir.y, 1.0};
    double ks = lam_.k() * s;
    return renormalize_hyperboloid(
        add(scale(r.base, std::cosh(ks)), scale(r.dir, std::sinh(ks))));
}

double HPlane::ray_parameter(const Ray& r, const Point& p) const {
    if (lam_.flat())
        return (p.x - r.base.x) * r.dir.x + (p.y - r.base.y) * r.dir.y;
    // p = base cosh(ks) + dir sinh(ks)  =>  <dir, p> = sinh(ks)
    return std::asinh(mdot(r.dir, p)) / lam_.k();
}

std::optional<HPlane::Point> HPlane::intersect_rays(const Ray& r1, const Ray& r2) const {
    if (lam_.flat()) {
        double det = r1.dir.x * r2.dir.y - r1.dir.y * r2.dir.x;
        if (std::abs(det) < 1e-15) return std::nullopt;
        double bx = r2.base.x - r1.base.x, by = r2.base.y - r1.base.y;
        double s1 = (bx * r2.dir.y - by * r2.dir.x) / det;
        double s2 = (bx * r1.dir.y - by * r1.dir.x) / det;
        if (s1 <= 0.0 || s2 <= 0.0) return std::nullopt;
        return Point{r1.base.x + s1 * r1.dir.x, r1.base.y + s1 * r1.dir.y, 1.0};
    }
    // Each geodesic is the hyperboloid cut by the plane with spacelike
    // normal base x dir; the candidate meeting line is the cross of normals.
    PlanePoint n1 = lcross(r1.base, r1.dir);
    PlanePoint n2 = lcross(r2.base, r2.dir);
    PlanePoint u = lcross(n1, n2);
    double uu = mdot(u, u);
    if (uu >= -1e-300) return std::nullopt; // lightlike/spacelike: no crossing
    PlanePoint p = scale(u, 1.0 / std::sqrt(-uu));
    if (p.z < 0.0) p = scale(p, -1.0);
    // forward on both rays: sinh of the parameter is <dir, p>
    if (mdot(r1.dir, p) <= 0.0 || mdot(r2.dir, p) <= 0.0) return std::nullopt;
    return p;
}

HPlane::Point HPlane::foot_of_perpendicular(const Point& a, const Point& b,
                                            const Point& c) const {
    if (lam_.flat()) {
        double dx = b.x - a.x, dy = b.y - a.y;
        double n2 = dx * dx + dy * dy;
        if (n2 == 0.0) throw GeometryError("degenerate segment");
        double t = ((c.x - a.x) * dx + (c.y - a.y) * dy) / n2;
        return {a.x + t * dx, a.y + t * dy, 1.0};
    }
    Ray r = ray_through(a, b);
    PlanePoint n = normalize_spacelike(lcross(a, r.dir));
    // remove the component of c along the plane normal, then rescale
    PlanePoint f = sub(c, scale(n, mdot(c, n)));
    return renormalize_hyperboloid(f);
}

} // namespace conegeo
