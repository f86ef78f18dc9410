#pragma once

// Comparison-triangle machinery. Two comparisons are implemented for a
// geodesic triangle measured on a surface of curvature <= lambda0:
//
//  * base comparison: a triangle in the plane H_lambda0 with the same base
//    and the same two adjacent angles; its area bounds the measured area
//    from below.
//  * cone comparison: a triangle on a cone of curvature lambda0 with the
//    same three side lengths and the same three angles, found by solving
//    for the apex position; its area bounds the measured area from below.
//
// Vertex/side conventions everywhere: vertices A, B, C carry angles alpha,
// beta, gamma; side a = BC, b = CA, c = AB. The radial segments from the
// cone apex split each angle into two parts, numbered cyclically: part 1
// leans toward the next vertex (alpha1 borders side c = AB, beta1 borders
// a = BC, gamma1 borders b = CA) and part 2 toward the previous one.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "conegeo/cone.hpp"
#include "conegeo/constcurv.hpp"
#include "conegeo/hplane.hpp"

namespace conegeo {

// Side lengths, angles and area of a triangle measured on some surface.
// Unlike PlaneTriangle the data need not be consistent with any constant
// curvature; it only has to describe a geodesic triangle somewhere.
struct TriangleData {
    double a, b, c;
    double alpha, beta, gamma;
    double area;
    std::string source; // "flat", "hyperbolic", "cone", "conformal", "pl"
};

// Validates positivity, the strict triangle inequality and an angle sum
// of at most pi (plus roundoff), as required on nonpositively curved
// surfaces. Throws GeometryError on violation.
TriangleData make_triangle_data(double a, double b, double c, double alpha,
                                double beta, double gamma, double area,
                                std::string source);

TriangleData triangle_data_from_plane(const PlaneTriangle& t, std::string source);
TriangleData triangle_data_from_cone(const ConeSurface::Measured& m);

// Comparison triangle on a cone: curvature lambda0, apex angle theta from
// the solve, apex distances to the three vertices, apex angles of the
// three radial sub-triangles (psi_a spans side a), and the angle splits.
struct ConeTriangle {
    ConeSpec spec;
    double dA, dB, dC;
    double psi_a, psi_b, psi_c;
    double alpha1, alpha2, beta1, beta2, gamma1, gamma2;
    double area;
    bool flat_degenerate;   // angle sum was pi: plane triangle, theta = 2*pi
    double solve_residual;  // largest angle-sum mismatch at return
    int solve_iterations;
};

// Worst violation of the ConeTriangle invariants against the data it was
// solved from: split sums vs angles, psi sum vs theta, area additivity.
double cone_triangle_residual(const ConeTriangle& ct, const TriangleData& data);

struct TriangleReport {
    double area_lhs;  // measured triangle
    double area_rhs;  // comparison triangle
    double margin;    // lhs - rhs, the quantity asserted nonnegative
    std::optional<double> leftover_area_x;
    bool equality;
    std::string status; // "ok", "flat", "no_comparison_triangle"
};

// Plane triangle with prescribed base and adjacent angles in H_lambda0.
// Throws NoSuchTriangle when the data admits none (alpha + beta >= pi, or
// rays too shallow for the base length when lambda0 < 0).
PlaneTriangle comparison_base_angles(double lambda0, double base_c,
                                     double alpha, double beta);

// Compares delta against the base/adjacent-angle triangle in H_lambda0.
// The equality flag additionally requires the remaining side lengths to
// match, since equal areas alone do not certify isometry.
TriangleReport verify_base_angle_inequality(const TriangleData& delta,
                                            double lambda0, double tol = 1e-7);

// Splits a triangle with two acute base angles along the height through C.
// Returns the two halves labeled so the right angle sits at vertex B (the
// foot H): side c is the base piece, side a the height, side b the
// hypotenuse. First element contains the original vertex A.
std::pair<TriangleData, TriangleData> right_triangle_split(
    const HPlane& pl, const PlanePoint& A, const PlanePoint& B,
    const PlanePoint& C);

// Cone version for triangles enclosing the apex whose height through C
// runs through it (each azimuthal gap from C to the base at least pi).
// The height is the apex foot on AB extended radially to C.
std::pair<TriangleData, TriangleData> right_triangle_split(
    const ConeSurface& surf, const ConePoint& A, const ConePoint& B,
    const ConePoint& C);

// Glues two right triangles (right angles at their B vertices) along their
// height sides. Equal heights give the union triangle; otherwise the
// shorter hypotenuse is extended until it meets the other one, which keeps
// the base angles and can only shed area. Throws NoSuchTriangle if the
// hypotenuse extensions diverge.
PlaneTriangle glue_right_triangles(const PlaneTriangle& t1,
                                   const PlaneTriangle& t2, double lambda0);

// Solves for the cone comparison triangle with the same sides and angles
// as `data` on a cone of curvature lambda0: a damped Newton iteration in
// the three apex distances with multistart. Flat data (angle sum pi) with
// lambda0 = 0 returns the plane triangle with theta = 2*pi and the apex
// placed at the centroid. Throws NoConvergence when no solution is found;
// nonexistence is a legal outcome, not a bug.
ConeTriangle cone_comparison_triangle(double lambda0, const TriangleData& data);

// The three corner triangles cut off by the interior rays, plus whatever
// the rays fail to cover.
struct Decomposition {
    TriangleData sub_a, sub_b, sub_c; // opposite A, B, C
    double x_area;                    // area(delta) - sum of the three
    bool rays_concurrent;
};

// Shoots the six interior rays of a triangle realized in the plane `pl`
// (which must match the data: the surface the triangle actually lives on,
// not the comparison curvature) at the split angles of `ct`, intersects
// them pairwise and measures the three corner triangles. Throws
// DecompositionFailed when a required intersection does not exist.
Decomposition decompose_plane_triangle(const HPlane& pl,
                                       const TriangleData& data,
                                       const ConeTriangle& ct);

// Equality-case decomposition on the cone itself: the rays are the radial
// segments, which concur at the apex. Verifies the measured splits match
// `ct` and returns the three radial sub-triangles with x_area = 0.
Decomposition decompose_cone_triangle(const ConeSurface& surf,
                                      const ConePoint& A, const ConePoint& B,
                                      const ConePoint& C,
                                      const ConeTriangle& ct, double tol = 1e-7);

// Full comparison: solve the cone triangle, compare areas, attach the
// leftover area when the caller ran a decomposition. A failed solve is
// reported with status "no_comparison_triangle" rather than thrown.
TriangleReport verify_triangle_theorem(const TriangleData& delta, double lambda0,
                                       std::optional<double> x_area = std::nullopt,
                                       double tol = 1e-7);

} // namespace conegeo
