#include <cmath>

#include "conegeo/rng.hpp"
#include "conegeo/trianglecmp.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conegeo;

namespace {

TriangleData random_hyperbolic_data(Rng& rng) {
    HPlane pl{CurvatureLevel(-1.0)};
    for (;;) {
        PlanePoint v[3];
        for (auto& p : v)
            p = pl.from_polar(rng.uniform(0.25, 1.6),
                              rng.uniform(0.0, 2.0 * M_PI));
        double a = pl.distance(v[1], v[2]);
        double b = pl.distance(v[2], v[0]);
        double c = pl.distance(v[0], v[1]);
        if (std::min({a, b, c}) < 0.15) continue;
        double al = pl.angle_at(v[0], v[1], v[2]);
        double be = pl.angle_at(v[1], v[0], v[2]);
        double ga = pl.angle_at(v[2], v[0], v[1]);
        if (std::min({al, be, ga}) < 0.08) continue;
        return make_triangle_data(a, b, c, al, be, ga,
                                  pl.triangle_area(v[0], v[1], v[2]),
                                  "hyperbolic");
    }
}

} // namespace

TEST_CASE("triangle data validation") {
    CHECK_THROWS_AS(make_triangle_data(1, 1, 2.5, 0.5, 0.5, 0.5, 1, "x"),
                    GeometryError); // violates the triangle inequality
    CHECK_THROWS_AS(make_triangle_data(1, 1, 1, 1.2, 1.2, 1.2, 1, "x"),
                    GeometryError); // angle sum above pi
    CHECK_THROWS_AS(make_triangle_data(1, -1, 1, 0.5, 0.5, 0.5, 1, "x"),
                    GeometryError);
    CHECK_THROWS_AS(make_triangle_data(1, 1, 1, 0.5, 0.5, 0.5, 0.0, "x"),
                    GeometryError);
}

TEST_CASE("base angle comparison matches closed forms") {
    PlaneTriangle flat = comparison_base_angles(0.0, 1.0, M_PI / 4, M_PI / 4);
    CHECK(flat.area == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(flat.gamma == doctest::Approx(M_PI / 2).epsilon(1e-14));

    PlaneTriangle hyp = comparison_base_angles(-1.0, 1.0, M_PI / 6, M_PI / 6);
    CHECK(hyp.gamma == doctest::Approx(oracle::asa_pi6_gamma).epsilon(1e-13));
    CHECK(hyp.area == doctest::Approx(oracle::asa_pi6_area).epsilon(1e-12));
    CHECK(hyp.a == doctest::Approx(oracle::asa_pi6_leg).epsilon(1e-13));

    CHECK_THROWS_AS(comparison_base_angles(0.0, 1.0, M_PI / 2, M_PI / 2),
                    NoSuchTriangle);
}

TEST_CASE("base angle inequality: strict, equality, and frozen margin") {
    // equilateral side 2 at curvature -1
    HPlane pl{CurvatureLevel(-1.0)};
    PlaneTriangle eq = solve_sss(CurvatureLevel(-1.0), 2.0, 2.0, 2.0);
    TriangleData data = triangle_data_from_plane(eq, "hyperbolic");

    TriangleReport strict = verify_base_angle_inequality(data, 0.0);
    CHECK(strict.status == "ok");
    CHECK(strict.margin ==
          doctest::Approx(oracle::strict_margin_eq2).epsilon(1e-12));
    CHECK(!strict.equality);

    TriangleReport same = verify_base_angle_inequality(data, -1.0);
    CHECK(std::abs(same.margin) < 1e-9);
    CHECK(same.equality);

    // random triangles: margin strictly positive against the flatter plane,
    // zero against their own curvature
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        TriangleData d = random_hyperbolic_data(rng);
        TriangleReport up = verify_base_angle_inequality(d, 0.0);
        CHECK(up.status == "ok");
        CHECK(up.margin > 0.0);
        TriangleReport self = verify_base_angle_inequality(d, -1.0);
        CHECK(std::abs(self.margin) < 1e-9);
        CHECK(self.equality);
    }
}

TEST_CASE("height split in the plane") {
    // flat equilateral: two 30-60-90 halves
    HPlane fl{CurvatureLevel(0.0)};
    PlanePoint A = fl.origin();
    PlanePoint B = fl.from_polar(1.0, 0.0);
    PlanePoint C = fl.from_polar(1.0, M_PI / 3);
    auto [left, right] = right_triangle_split(fl, A, B, C);
    CHECK(left.c == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(right.c == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(left.a == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-13));
    CHECK(left.beta == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(left.gamma == doctest::Approx(M_PI / 6).epsilon(1e-12));
    CHECK(left.area + right.area ==
          doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-13));

    // hyperbolic equilateral: symmetric halves with the frozen height
    HPlane hy{CurvatureLevel(-1.0)};
    PlanePoint hA = hy.origin();
    PlanePoint hB = hy.from_polar(1.0, 0.0);
    PlanePoint hC = hy.from_polar(1.0, oracle::equilateral1_angle);
    auto [hl, hr] = right_triangle_split(hy, hA, hB, hC);
    CHECK(hl.a == doctest::Approx(oracle::equilateral1_height).epsilon(1e-12));
    CHECK(hl.gamma == doctest::Approx(hr.gamma).epsilon(1e-11));
    CHECK(hl.gamma + hr.gamma ==
          doctest::Approx(oracle::equilateral1_angle).epsilon(1e-11));
    CHECK(hl.area + hr.area ==
          doctest::Approx(oracle::equilateral1_area).epsilon(1e-11));

    // obtuse base angle is rejected
    PlanePoint far = hy.from_polar(2.0, 2.8);
    CHECK_THROWS_AS(right_triangle_split(hy, hA, hB, far), GeometryError);
}

TEST_CASE("gluing right triangles") {
    // equal heights reassemble the split triangle exactly
    PlaneTriangle h1 = solve_asa(CurvatureLevel(-1.0),
                                 oracle::equilateral1_angle, 0.5, M_PI / 2);
    PlaneTriangle glued = glue_right_triangles(h1, h1, -1.0);
    CHECK(glued.c == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(glued.a == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(glued.area == doctest::Approx(oracle::equilateral1_area).epsilon(1e-11));

    // unequal heights: frozen euclidean extension point
    PlaneTriangle t1 = solve_sss(CurvatureLevel(0.0), 1.0, std::sqrt(2.0), 1.0);
    PlaneTriangle t2 = solve_sss(CurvatureLevel(0.0), 2.0, std::sqrt(5.0), 1.0);
    PlaneTriangle ext = glue_right_triangles(t1, t2, 0.0);
    CHECK(ext.c == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ext.b == doctest::Approx(oracle::glue_unequal_side_ao).epsilon(1e-12));
    CHECK(ext.a == doctest::Approx(oracle::glue_unequal_side_bo).epsilon(1e-12));
    CHECK(ext.area == doctest::Approx(oracle::glue_unequal_area).epsilon(1e-12));
    CHECK(ext.area < t1.area + t2.area);
    // base angles survive the extension
    CHECK(ext.alpha == doctest::Approx(t1.alpha).epsilon(1e-12));
    CHECK(ext.beta == doctest::Approx(t2.alpha).epsilon(1e-12));

    CHECK_THROWS_AS(glue_right_triangles(t1, t2, -1.0), GeometryError);
    PlaneTriangle skew = solve_sss(CurvatureLevel(0.0), 1.0, 1.2, 1.0);
    CHECK_THROWS_AS(glue_right_triangles(skew, t2, 0.0), GeometryError);
}

TEST_CASE("split then glue rebuilds the base comparison") {
    // the proof route for the base-angle inequality: split the measured
    // triangle, compare each half over the base pieces, glue; the glued
    // triangle must coincide with the direct base comparison
    Rng rng(53);
    HPlane src{CurvatureLevel(-1.0)};
    int used = 0;
    for (int trial = 0; trial < 120; ++trial) {
        PlanePoint A = src.from_polar(rng.uniform(0.2, 1.4),
                                      rng.uniform(0.0, 2 * M_PI));
        PlanePoint B = src.from_polar(rng.uniform(0.2, 1.4),
                                      rng.uniform(0.0, 2 * M_PI));
        PlanePoint C = src.from_polar(rng.uniform(0.2, 1.4),
                                      rng.uniform(0.0, 2 * M_PI));
        double al = src.angle_at(A, B, C), be = src.angle_at(B, A, C);
        if (src.distance(A, B) < 0.2) continue;
        if (al >= 0.45 * M_PI || be >= 0.45 * M_PI) continue;
        if (src.angle_at(C, A, B) < 0.05) continue;
        auto [da, db] = right_triangle_split(src, A, B, C);
        for (double lambda0 : {0.0, -1.0}) {
            PlaneTriangle ca =
                comparison_base_angles(lambda0, da.c, da.alpha, M_PI / 2);
            PlaneTriangle cb =
                comparison_base_angles(lambda0, db.c, db.alpha, M_PI / 2);
            PlaneTriangle glued = glue_right_triangles(ca, cb, lambda0);
            PlaneTriangle direct = comparison_base_angles(
                lambda0, src.distance(A, B), al, be);
            CHECK(glued.c == doctest::Approx(direct.c).epsilon(1e-10));
            CHECK(glued.area <= ca.area + cb.area + 1e-12);
            CHECK(glued.area == doctest::Approx(direct.area).epsilon(1e-8));
            CHECK(ca.area + cb.area <= da.area + db.area + 1e-12);
        }
        ++used;
    }
    CHECK(used > 40);
}

TEST_CASE("height split through the cone apex") {
    ConeSpec cone(CurvatureLevel(0.0), 2.4 * M_PI);
    ConeSurface surf(cone);
    ConePoint A{1.1, 0.0};
    ConePoint B{0.9, 0.8 * M_PI};
    ConePoint C{1.0, 1.65 * M_PI};
    auto m = surf.measure_apex_triangle(A, B, C);
    REQUIRE(m.angle[0] < M_PI / 2);
    REQUIRE(m.angle[1] < M_PI / 2);

    auto [ta, tb] = right_triangle_split(surf, A, B, C);
    CHECK(ta.c == doctest::Approx(oracle::cone_foot_along).epsilon(1e-10));
    CHECK(ta.c + tb.c == doctest::Approx(oracle::cone_foot_base).epsilon(1e-12));
    CHECK(ta.a ==
          doctest::Approx(oracle::cone_foot_radius + 1.0).epsilon(1e-10));
    CHECK(ta.beta == doctest::Approx(M_PI / 2).epsilon(1e-9));
    CHECK(tb.beta == doctest::Approx(M_PI / 2).epsilon(1e-9));
    CHECK(ta.alpha == doctest::Approx(m.angle[0]).epsilon(1e-12));
    CHECK(tb.alpha == doctest::Approx(m.angle[1]).epsilon(1e-12));
    CHECK(ta.gamma + tb.gamma == doctest::Approx(m.angle[2]).epsilon(1e-12));
    CHECK(ta.area + tb.area == doctest::Approx(m.area).epsilon(1e-12));

    // curved cone: same consistency without frozen values
    ConeSpec hcone(CurvatureLevel(-0.7), 2.3 * M_PI);
    ConeSurface hsurf(hcone);
    ConePoint hA{1.0, 0.0}, hB{1.1, 0.75 * M_PI}, hC{0.9, 1.6 * M_PI};
    auto hm = hsurf.measure_apex_triangle(hA, hB, hC);
    REQUIRE(hm.angle[0] < M_PI / 2);
    REQUIRE(hm.angle[1] < M_PI / 2);
    auto [ha, hb] = right_triangle_split(hsurf, hA, hB, hC);
    CHECK(ha.beta == doctest::Approx(M_PI / 2).epsilon(1e-9));
    CHECK(ha.gamma + hb.gamma == doctest::Approx(hm.angle[2]).epsilon(1e-12));
    CHECK(ha.area + hb.area == doctest::Approx(hm.area).epsilon(1e-12));
    CHECK(ha.c + hb.c == doctest::Approx(hm.side[2]).epsilon(1e-12));
}

TEST_CASE("cone comparison solve round trips forward constructions") {
    for (double lam : {0.0, -1.0}) {
        ConeSpec cone(CurvatureLevel(lam), 2.5 * M_PI);
        ConeSurface surf(cone);
        double third = 2.5 * M_PI / 3.0;
        auto m = surf.measure_apex_triangle({1.0, 0.0}, {1.0, third},
                                            {1.0, 2.0 * third});
        TriangleData data = triangle_data_from_cone(m);
        ConeTriangle ct = cone_comparison_triangle(lam, data);
        CHECK(!ct.flat_degenerate);
        CHECK(ct.spec.theta == doctest::Approx(2.5 * M_PI).epsilon(1e-9));
        CHECK(ct.dA == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(ct.dB == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(ct.dC == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(ct.area == doctest::Approx(data.area).epsilon(1e-9));
        CHECK(cone_triangle_residual(ct, data) < 1e-9);

        TriangleReport rep = verify_triangle_theorem(data, lam);
        CHECK(rep.status == "ok");
        CHECK(rep.equality);
    }
}

TEST_CASE("cone comparison solve: 500 random round trips") {
    Rng rng(67);
    for (int trial = 0; trial < 500; ++trial) {
        double lam = (trial % 2 == 0) ? 0.0 : -1.0;
        double theta = rng.uniform(2.05 * M_PI, 2.9 * M_PI);
        ConeSpec cone(CurvatureLevel(lam), theta);
        ConeSurface surf(cone);
        auto [A, B, C] = random_apex_triangle(cone, rng);
        auto m = surf.measure_apex_triangle(A, B, C);
        TriangleData data = triangle_data_from_cone(m);

        ConeTriangle ct = cone_comparison_triangle(lam, data);
        CHECK(ct.spec.theta == doctest::Approx(theta).epsilon(1e-8));
        CHECK(ct.dA == doctest::Approx(m.apex_dist[0]).epsilon(1e-8));
        CHECK(ct.dB == doctest::Approx(m.apex_dist[1]).epsilon(1e-8));
        CHECK(ct.dC == doctest::Approx(m.apex_dist[2]).epsilon(1e-8));
        CHECK(std::abs(ct.area - data.area) < 1e-8);
        CHECK(cone_triangle_residual(ct, data) < 1e-9);

        double angle_sum = data.alpha + data.beta + data.gamma;
        if (lam == 0.0) {
            CHECK(std::abs(ct.spec.theta - (3.0 * M_PI - angle_sum)) < 1e-8);
        } else {
            CHECK(ct.spec.theta < 3.0 * M_PI - angle_sum);
            CHECK(std::abs(lam * ct.area -
                           (ct.spec.theta + angle_sum - 3.0 * M_PI)) < 1e-8);
        }
    }
}

TEST_CASE("flat data degenerates to the plane triangle") {
    PlaneTriangle pyth = solve_sss(CurvatureLevel(0.0), 3.0, 4.0, 5.0);
    TriangleData data = triangle_data_from_plane(pyth, "flat");
    ConeTriangle ct = cone_comparison_triangle(0.0, data);
    CHECK(ct.flat_degenerate);
    CHECK(ct.spec.theta == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    CHECK(ct.area == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(ct.alpha1 + ct.alpha2 == doctest::Approx(data.alpha).epsilon(1e-12));
    CHECK(ct.psi_a + ct.psi_b + ct.psi_c ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-12));

    TriangleReport rep = verify_triangle_theorem(data, 0.0);
    CHECK(rep.status == "flat");
    CHECK(rep.equality);
    CHECK(std::abs(rep.margin) < 1e-12);

    // no curved cone carries a triangle with angle sum pi
    CHECK_THROWS_AS(cone_comparison_triangle(-1.0, data), NoConvergence);
    TriangleReport none = verify_triangle_theorem(data, -1.0);
    CHECK(none.status == "no_comparison_triangle");
}

TEST_CASE("solved splits reproduce the radial sub-triangles") {
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        TriangleData data = random_hyperbolic_data(rng);
        ConeTriangle ct = cone_comparison_triangle(0.0, data);
        PlaneTriangle ca = comparison_base_angles(0.0, data.a, ct.beta1, ct.gamma2);
        PlaneTriangle cb = comparison_base_angles(0.0, data.b, ct.gamma1, ct.alpha2);
        PlaneTriangle cc = comparison_base_angles(0.0, data.c, ct.alpha1, ct.beta2);
        // each base comparison is one radial sub-triangle of the cone
        CHECK(ca.b == doctest::Approx(ct.dB).epsilon(1e-8));
        CHECK(ca.a == doctest::Approx(ct.dC).epsilon(1e-8));
        CHECK(cb.b == doctest::Approx(ct.dC).epsilon(1e-8));
        CHECK(cb.a == doctest::Approx(ct.dA).epsilon(1e-8));
        CHECK(cc.b == doctest::Approx(ct.dA).epsilon(1e-8));
        CHECK(cc.a == doctest::Approx(ct.dB).epsilon(1e-8));
        CHECK(ca.area + cb.area + cc.area ==
              doctest::Approx(ct.area).epsilon(1e-9));
    }
}

TEST_CASE("interior rays decompose the triangle") {
    // flat data: rays concur at the centroid, nothing is left over
    HPlane fl{CurvatureLevel(0.0)};
    PlaneTriangle pyth = solve_sss(CurvatureLevel(0.0), 3.0, 4.0, 5.0);
    TriangleData fdata = triangle_data_from_plane(pyth, "flat");
    ConeTriangle fct = cone_comparison_triangle(0.0, fdata);
    Decomposition fdec = decompose_plane_triangle(fl, fdata, fct);
    CHECK(fdec.rays_concurrent);
    CHECK(std::abs(fdec.x_area) < 1e-9);
    CHECK(fdec.sub_a.area + fdec.sub_b.area + fdec.sub_c.area ==
          doctest::Approx(6.0).epsilon(1e-9));

    // hyperbolic source against the flat cone: the corner triangles tile the
    // whole triangle. For a source of constant curvature the three rays meet
    // at a single point, so nothing is left over; the leftover region only
    // opens up when the curvature varies across the triangle, which a plane
    // placement cannot represent. The margin still dominates the leftover.
    Rng rng(83);
    HPlane hy{CurvatureLevel(-1.0)};
    for (int trial = 0; trial < 60; ++trial) {
        TriangleData data = random_hyperbolic_data(rng);
        ConeTriangle ct = cone_comparison_triangle(0.0, data);
        Decomposition dec = decompose_plane_triangle(hy, data, ct);
        CHECK(dec.x_area >= -1e-9);
        CHECK(std::abs(dec.x_area) < 1e-9);
        CHECK(dec.rays_concurrent);
        // corner triangles carry the prescribed split angles
        CHECK(dec.sub_a.beta == doctest::Approx(ct.beta1).epsilon(1e-9));
        CHECK(dec.sub_a.gamma == doctest::Approx(ct.gamma2).epsilon(1e-9));
        CHECK(dec.sub_c.beta == doctest::Approx(ct.alpha1).epsilon(1e-9));
        TriangleReport rep = verify_triangle_theorem(data, 0.0, dec.x_area);
        CHECK(rep.status == "ok");
        CHECK(rep.margin > 0.0);
        CHECK(rep.margin >= dec.x_area - 1e-7);
    }
}

TEST_CASE("cone equality decomposition concurs at the apex") {
    ConeSpec cone(CurvatureLevel(-1.0), 2.6 * M_PI);
    ConeSurface surf(cone);
    Rng rng(91);
    auto [A, B, C] = random_apex_triangle(cone, rng);
    auto m = surf.measure_apex_triangle(A, B, C);
    TriangleData data = triangle_data_from_cone(m);
    ConeTriangle ct = cone_comparison_triangle(-1.0, data);

    Decomposition dec = decompose_cone_triangle(surf, A, B, C, ct);
    CHECK(dec.rays_concurrent);
    CHECK(std::abs(dec.x_area) < 1e-10);
    CHECK(dec.sub_a.area + dec.sub_b.area + dec.sub_c.area ==
          doctest::Approx(m.area).epsilon(1e-12));

    // splits that point anywhere else are refused
    ConeTriangle bad = ct;
    bad.alpha1 += 0.05;
    bad.alpha2 -= 0.05;
    CHECK_THROWS_AS(decompose_cone_triangle(surf, A, B, C, bad),
                    DecompositionFailed);
}
