#include "conegeo/constcurv.hpp"

#include <algorithm>
#include <cmath>

namespace conegeo {

double clamped_acos(double x, double tol) {
    if (x > 1.0) {
        if (x - 1.0 > tol)
            throw GeometryError("acos argument " + std::to_string(x) +
                                " exceeds 1 beyond clamp tolerance");
        x = 1.0;
    } else if (x < -1.0) {
        if (-1.0 - x > tol)
            throw GeometryError("acos argument " + std::to_string(x) +
                                " below -1 beyond clamp tolerance");
        x = -1.0;
    }
    return std::acos(x);
}

double acosh1p(double y) {
    if (y < 0.0) {
        if (y > -1e-14) y = 0.0;
        else throw GeometryError("acosh argument below 1");
    }
    // acosh(1+y) = log(1 + y + sqrt(y (y+2))), stable for small y.
    return std::log1p(y + std::sqrt(y * (y + 2.0)));
}

namespace {

void check_positive_side(double s, const char* name) {
    if (!std::isfinite(s) || s <= 0.0)
        throw GeometryError(std::string(name) + " must be a positive length");
}

// Heron's formula in the numerically stable Kahan arrangement.
double heron(double a, double b, double c) {
    // sort descending so the difference terms below stay accurate
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    double t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    if (t < 0.0) t = 0.0;
    return 0.25 * std::sqrt(t);
}

void check_strict_triangle(double a, double b, double c) {
    if (!(a < b + c && b < a + c && c < a + b))
        throw NoSuchTriangle("side lengths violate the strict triangle inequality");
}

} // namespace

double law_of_cosines(CurvatureLevel lam, double r1, double r2, double angle) {
    check_positive_side(r1, "r1");
    check_positive_side(r2, "r2");
    if (!std::isfinite(angle) || angle < 0.0 || angle > M_PI)
        throw GeometryError("hinge angle must lie in [0, pi]");
    double sh = std::sin(0.5 * angle);
    if (lam.flat()) {
        // c^2 = (r1-r2)^2 + 4 r1 r2 sin^2(angle/2), exact at angle = 0.
        double d = r1 - r2;
        return std::sqrt(d * d + 4.0 * r1 * r2 * sh * sh);
    }
    double k = lam.k();
    double dh = std::sinh(0.5 * k * (r1 - r2));
    double y = 2.0 * dh * dh +
               2.0 * std::sinh(k * r1) * std::sinh(k * r2) * sh * sh;
    return acosh1p(y) / k;
}

double angle_from_sides(CurvatureLevel lam, double opp, double s1, double s2) {
    check_positive_side(opp, "opp");
    check_positive_side(s1, "s1");
    check_positive_side(s2, "s2");
    if (lam.flat()) {
        double cosv = ((s1 - opp) * (s1 + opp) + s2 * s2) / (2.0 * s1 * s2);
        return clamped_acos(cosv);
    }
    double k = lam.k();
    double cosv = (std::cosh(k * s1) * std::cosh(k * s2) - std::cosh(k * opp)) /
                  (std::sinh(k * s1) * std::sinh(k * s2));
    return clamped_acos(cosv);
}

double triangle_area(const PlaneTriangle& t) {
    if (t.curvature.flat()) return heron(t.a, t.b, t.c);
    double defect = M_PI - t.alpha - t.beta - t.gamma;
    return defect / (-t.curvature.lambda);
}

PlaneTriangle solve_sss(CurvatureLevel lam, double a, double b, double c) {
    check_positive_side(a, "a");
    check_positive_side(b, "b");
    check_positive_side(c, "c");
    check_strict_triangle(a, b, c);
    PlaneTriangle t{lam, a, b, c, 0.0, 0.0, 0.0, 0.0};
    t.alpha = angle_from_sides(lam, a, b, c);
    t.beta = angle_from_sides(lam, b, c, a);
    t.gamma = angle_from_sides(lam, c, a, b);
    t.area = triangle_area(t);
    return t;
}

PlaneTriangle solve_sas(CurvatureLevel lam, double r1, double angle, double r2) {
    if (!std::isfinite(angle) || angle <= 0.0 || angle >= M_PI)
        throw NoSuchTriangle("included angle must lie strictly between 0 and pi");
    double third = law_of_cosines(lam, r1, r2, angle);
    // r1, r2 adjacent to the hinge, so the hinge angle is gamma.
    return solve_sss(lam, r1, r2, third);
}

PlaneTriangle solve_asa(CurvatureLevel lam, double alpha, double c, double beta) {
    check_positive_side(c, "c");
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= M_PI ||
        !std::isfinite(beta) || beta <= 0.0 || beta >= M_PI)
        throw NoSuchTriangle("base angles must lie strictly between 0 and pi");
    if (alpha + beta >= M_PI)
        throw NoSuchTriangle("base angles sum to pi or more");

    if (lam.flat()) {
        double gamma = M_PI - alpha - beta;
        double sg = std::sin(gamma);
        double a = c * std::sin(alpha) / sg;
        double b = c * std::sin(beta) / sg;
        PlaneTriangle t{lam, a, b, c, alpha, beta, gamma, 0.0};
        t.area = 0.5 * a * b * sg;
        return t;
    }

    double k = lam.k();
    // Dual law of cosines. cos(gamma) >= 1 means the two rays never meet:
    // for a negatively curved plane the base can be too long for the angles.
    double cg = -std::cos(alpha) * std::cos(beta) +
                std::sin(alpha) * std::sin(beta) * std::cosh(k * c);
    if (cg >= 1.0)
        throw NoSuchTriangle("rays at the given base angles diverge");
    double gamma = clamped_acos(cg);
    double sg = std::sin(gamma);
    double cosh_a = (std::cos(alpha) + std::cos(beta) * cg) / (std::sin(beta) * sg);
    double cosh_b = (std::cos(beta) + std::cos(alpha) * cg) / (std::sin(alpha) * sg);
    PlaneTriangle t{lam, 0.0, 0.0, c, alpha, beta, gamma, 0.0};
    t.a = acosh1p(std::max(0.0, cosh_a - 1.0)) / k;
    t.b = acosh1p(std::max(0.0, cosh_b - 1.0)) / k;
    t.area = triangle_area(t);
    return t;
}

double plane_triangle_residual(const PlaneTriangle& t) {
    double r = 0.0;
    // each vertex hinge must reproduce the opposite side
    r = std::max(r, std::abs(law_of_cosines(t.curvature, t.b, t.c, t.alpha) - t.a));
    r = std::max(r, std::abs(law_of_cosines(t.curvature, t.a, t.c, t.beta) - t.b));
    r = std::max(r, std::abs(law_of_cosines(t.curvature, t.a, t.b, t.gamma) - t.c));
    // angle sum against area
    double sum = t.alpha + t.beta + t.gamma;
    r = std::max(r, std::abs(sum - M_PI - t.curvature.lambda * t.area));
    return r;
}

} // namespace conegeo
