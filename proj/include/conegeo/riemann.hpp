#pragma once

#include <array>
#include <string>
#include <vector>

#include "conegeo/errors.hpp"
#include "conegeo/trianglecmp.hpp"

namespace conegeo {

struct CurvatureCertificate {
    double lambda0 = 0.0;
    double max_curvature = 0.0;
    double margin = 0.0; // lambda0 - max_curvature, nonnegative when certified
    int grid = 0;
    bool ok() const { return margin >= 0.0; }
};

// Conformal chart: metric e^{2u(x,y)} (dx^2 + dy^2) on a disk about the
// origin. Angles in the metric equal Euclidean angles between tangents, and
// the Gaussian curvature is K = -e^{-2u} (laplacian u).
class ConformalSurface {
public:
    static ConformalSurface flat(double radius = 4.0);
    // u = ln(2 / (1 - x^2 - y^2)), K = -1; chart stops just short of the rim
    static ConformalSurface poincare(double radius = 0.985);
    // u = x^2 + y^2, K = -4 e^{-2u} < 0 everywhere
    static ConformalSurface gauss_bump_neg(double radius = 1.6);
    // sampled grid with bicubic evaluation; json: nx, ny, x0, y0, dx, dy,
    // values (row-major, y fastest)
    static ConformalSurface from_grid_json(const std::string& path);
    // "flat" | "poincare" | "gauss-bump-neg" | path of a grid json file
    static ConformalSurface named(const std::string& spec);

    const std::string& name() const { return name_; }
    double domain_radius() const { return radius_; }
    // comparison level this surface is meant to be certified against
    double lambda0_hint() const { return lambda0_hint_; }

    bool inside(double x, double y, double pad = 0.0) const;
    double u_at(double x, double y) const;
    void gradient(double x, double y, double& ux, double& uy) const;
    double laplacian(double x, double y) const;
    double curvature_at(double x, double y) const;

    // proof-by-sampling record: max K over a grid x grid scan of the domain
    CurvatureCertificate certify_lambda0(double lambda0, int grid = 512) const;

private:
    enum class Kind { flat, poincare, bump, grid };
    ConformalSurface(Kind kind, std::string name, double radius, double hint)
        : kind_(kind), name_(std::move(name)), radius_(radius),
          lambda0_hint_(hint) {}

    Kind kind_;
    std::string name_;
    double radius_;
    double lambda0_hint_;

    // sampled grid storage (Kind::grid only); the laplacian is interpolated
    // from a precomputed finite-difference field, since the second
    // derivative of the value interpolant converges too slowly
    int nx_ = 0, ny_ = 0;
    double x0_ = 0.0, y0_ = 0.0, hx_ = 0.0, hy_ = 0.0;
    std::vector<double> values_;
    std::vector<double> lap_values_;
    double grid_value(int i, int j) const;
    double grid_lap(int i, int j) const;
    void grid_eval(double x, double y, double* u, double* ux, double* uy,
                   double* lap) const;
};

struct GeodesicPath {
    // (x, y, dx, dy) at the arclengths in `at`; unit speed in the metric
    std::vector<std::array<double, 4>> samples;
    std::vector<double> at;
    double length = 0.0;
    double speed_drift = 0.0; // max |e^{2u}(dx^2+dy^2) - 1| along the path
    std::array<double, 2> start_dir{}; // Euclidean unit tangents
    std::array<double, 2> end_dir{};
    std::array<double, 2> end_point{};

    // cubic hermite resample at n+1 uniform arclengths
    GeodesicPath resampled(int n) const;
};

// Integrates the geodesic equations with an adaptive Cash-Karp 5(4) stepper
// at tolerance 1e-12; throws DomainExit if the path leaves the chart.
GeodesicPath geodesic_shoot(const ConformalSurface& s, double x, double y,
                            double angle, double length);

// Shooting solve for the unique connecting geodesic (K <= 0, chart simply
// connected): bracket + secant on the signed miss at closest approach.
GeodesicPath geodesic_connect(const ConformalSurface& s, double px, double py,
                              double qx, double qy);

struct SmoothTriangle {
    TriangleData data;
    double curvature_integral = 0.0; // integral of K dA over the triangle
    double kminus_integral = 0.0;    // integral of max(-K, 0) dA
    double gb_residual = 0.0; // |curvature_integral - (angle sum - pi)|
};

SmoothTriangle measure_triangle(const ConformalSurface& s,
                                std::array<double, 2> A,
                                std::array<double, 2> B,
                                std::array<double, 2> C);

struct SmoothDisk {
    double radius = 0.0;
    int rays = 0;
    double perimeter = 0.0;
    double area = 0.0;
    double kminus = 0.0; // integral of max(-K, 0) dA over the swept disk
    double margin = 0.0; // area - L^2 / (4 pi + 2 kminus)
};

SmoothDisk measure_disk(const ConformalSurface& s, double px, double py,
                        double radius, int rays);

} // namespace conegeo
