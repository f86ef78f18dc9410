#pragma once

// Triangle trigonometry in the model plane of constant curvature lambda <= 0.
// For lambda < 0 all formulas are the hyperbolic ones with k = sqrt(-lambda);
// lambda = 0 takes a dedicated Euclidean path instead of a limit.

#include <cmath>

#include "conegeo/errors.hpp"

namespace conegeo {

// Tolerances shared by the closed-form solvers.
inline constexpr double kSolverTol = 1e-12;
inline constexpr double kAcosClampTol = 1e-12;

// A validated curvature value lambda <= 0.
struct CurvatureLevel {
    explicit CurvatureLevel(double lam) : lambda(lam) {
        if (!std::isfinite(lam) || lam > 0.0)
            throw GeometryError("curvature level must be a finite number <= 0");
    }
    double lambda;

    bool flat() const { return lambda == 0.0; }
    // k such that lambda = -k^2 (0 when flat).
    double k() const { return std::sqrt(-lambda); }
};

// acos with a small tolerance for arguments pushed past [-1,1] by roundoff.
// Anything beyond the tolerance indicates invalid data, not roundoff.
double clamped_acos(double x, double tol = kAcosClampTol);

// Stable acosh(1 + y) for y >= 0.
double acosh1p(double y);

// Geodesic triangle in the plane of curvature lambda, fully solved:
// side a is opposite the vertex with angle alpha, etc.
struct PlaneTriangle {
    CurvatureLevel curvature;
    double a, b, c;
    double alpha, beta, gamma;
    double area;
};

// Distance between two points at distances r1, r2 from a hinge point,
// with the given angle between the two segments.
double law_of_cosines(CurvatureLevel lam, double r1, double r2, double angle);

// Angle opposite `opp` in the triangle with sides (opp, s1, s2).
double angle_from_sides(CurvatureLevel lam, double opp, double s1, double s2);

// Area from the stored sides/angles: angle defect over -lambda when curved,
// Heron's formula when flat.
double triangle_area(const PlaneTriangle& t);

// Solvers. Each throws NoSuchTriangle when the data admits no triangle.
PlaneTriangle solve_sss(CurvatureLevel lam, double a, double b, double c);
PlaneTriangle solve_sas(CurvatureLevel lam, double r1, double angle, double r2);
PlaneTriangle solve_asa(CurvatureLevel lam, double alpha, double c, double beta);

// Largest law-of-cosines / angle-sum inconsistency of a solved triangle.
// Solver output keeps this below kSolverTol for well-scaled input.
double plane_triangle_residual(const PlaneTriangle& t);

} // namespace conegeo
