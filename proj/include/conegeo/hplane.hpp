#pragma once

// Concrete model of the simply connected plane of curvature lambda <= 0,
// with enough analytic geometry to shoot rays, intersect them and drop
// perpendiculars. lambda < 0 uses the unit hyperboloid in Minkowski 3-space
// (distances scaled by k = sqrt(-lambda)); lambda = 0 uses plain Cartesian
// coordinates in the same struct with z unused.

#include <optional>

#include "conegeo/constcurv.hpp"

namespace conegeo {

struct PlanePoint {
    double x, y, z;
};

class HPlane {
public:
    explicit HPlane(CurvatureLevel lam) : lam_(lam) {}

    using Point = PlanePoint;

    CurvatureLevel curvature() const { return lam_; }

    Point origin() const;
    Point from_polar(double r, double phi) const;
    // polar coordinates of p about the origin: {r, phi}
    std::pair<double, double> to_polar(const Point& p) const;

    double distance(const Point& p, const Point& q) const;
    // interior angle at `at` of the hinge (p, at, q)
    double angle_at(const Point& at, const Point& p, const Point& q) const;
    double triangle_area(const Point& a, const Point& b, const Point& c) const;

    // A unit-speed geodesic ray: base point plus unit tangent at the base.
    struct Ray {
        Point base;
        Point dir;
    };

    Ray ray_through(const Point& from, const Point& toward) const;
    // ray_through rotated by ccw radians counterclockwise at its base
    Ray rotate_ray(const Ray& r, double ccw) const;
    Point advance(const Ray& r, double s) const;
    double ray_parameter(const Ray& r, const Point& p) const;

    // First intersection of the open forward portions of the two rays.
    std::optional<Point> intersect_rays(const Ray& r1, const Ray& r2) const;

    // Foot of the perpendicular from c onto the full geodesic through a, b.
    Point foot_of_perpendicular(const Point& a, const Point& b, const Point& c) const;

private:
    CurvatureLevel lam_;
};

} // namespace conegeo
