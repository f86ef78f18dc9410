#pragma once

// Metric geometry of the cone C^theta_lambda: the space obtained by gluing
// the edges of a wedge of angle theta cut from the plane of curvature
// lambda <= 0. theta >= 2*pi gives a nonpositively curved cone whose apex
// carries curvature measure 2*pi - theta <= 0.

#include <array>

#include "conegeo/constcurv.hpp"
#include "conegeo/hplane.hpp"
#include "conegeo/rng.hpp"

namespace conegeo {

struct ConeSpec {
    ConeSpec(CurvatureLevel lam, double total_angle)
        : curvature(lam), theta(total_angle) {
        if (!std::isfinite(theta) || theta <= 0.0)
            throw GeometryError("cone angle must be positive");
    }
    CurvatureLevel curvature;
    double theta;

    // curvature measure concentrated at the apex
    double apex_curvature() const { return 2.0 * M_PI - theta; }
    bool nonpositively_curved() const { return theta >= 2.0 * M_PI; }
};

// Point in polar coordinates about the apex; phi is taken modulo theta.
struct ConePoint {
    double r;
    double phi;
};

// Length and area of the disk of radius R centered at the apex.
struct DiskMeasure {
    double perimeter;
    double area;
};

double cone_distance(const ConeSpec& cone, const ConePoint& p, const ConePoint& q);

DiskMeasure vertex_disk(const ConeSpec& cone, double R);

// Right-hand side L^2 / (4 pi + 2 kminus) of the sharp disk inequality,
// where kminus >= 0 is the total negative part of the curvature measure.
double reverse_isoperimetric_rhs(double L, double kminus);

// Gauss-Bonnet defect of the geodesic triangle with the given vertices,
// which must strictly enclose the apex. Exactly zero in exact arithmetic.
double cone_gauss_bonnet_residual(const ConeSpec& cone, const ConePoint& A,
                                  const ConePoint& B, const ConePoint& C);

// Random triangle strictly enclosing the apex: azimuthal gaps kept away
// from 0 and pi, radii in [0.3, 2]. Enclosure forces theta < 3*pi, so the
// cone angle must lie in (2*pi, 2.9*pi]. Draws until a valid gap triple
// comes up, so the rng advances by a data-dependent amount.
std::array<ConePoint, 3> random_apex_triangle(const ConeSpec& cone, Rng& rng);

// Measurement interface for triangles drawn on a cone.
class ConeSurface {
public:
    explicit ConeSurface(const ConeSpec& spec) : spec_(spec), dev_(spec.curvature) {}

    using Point = ConePoint;

    const ConeSpec& spec() const { return spec_; }

    double distance(const Point& p, const Point& q) const;

    // Signed angle at `from` between the direction toward the apex and the
    // direct geodesic toward `to`, positive toward increasing azimuth.
    // Requires the azimuthal gap to be at most pi.
    double bearing(const Point& from, const Point& to) const;

    // Point at arclength s along the direct geodesic p -> q.
    Point point_on_segment(const Point& p, const Point& q, double s) const;

    // Full interior measurements of a triangle that strictly encloses the
    // apex, listed in the order (sides a,b,c / angles alpha,beta,gamma /
    // area) matching the vertex order (A, B, C).
    struct Measured {
        std::array<double, 3> side;
        std::array<double, 3> angle;
        double area;
        // apex-to-vertex distances and the apex angles of the three
        // radial sub-triangles (psi[0] spans side a = BC, etc.)
        std::array<double, 3> apex_dist;
        std::array<double, 3> psi;
        // angle splits induced by the radial segments: at A the interior
        // angle is split into split_toward[0].first (side of B) and
        // split_toward[0].second (side of C), and so on cyclically.
        std::array<std::pair<double, double>, 3> split;
    };
    Measured measure_apex_triangle(const Point& A, const Point& B, const Point& C) const;

private:
    ConeSpec spec_;
    HPlane dev_; // development plane of the same curvature

    // minimal absolute azimuthal difference, in [0, theta/2]
    double wrap_gap(double dphi) const;
};

} // namespace conegeo
