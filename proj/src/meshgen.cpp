#include "conegeo/meshgen.hpp"

#include <algorithm>
#include <cmath>

#include "conegeo/rng.hpp"

namespace conegeo {

PLSurface make_tetrahedron(double edge) {
    std::vector<std::array<int, 3>> faces{
        {0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    std::map<std::pair<int, int>, double> lengths;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) lengths[{a, b}] = edge;
    return PLSurface::build(4, std::move(faces), lengths);
}

namespace {

// shared fan-plus-annuli combinatorics for disk meshes:
// vertex 0 in the middle, then `rings` rings of `sectors` vertices
std::vector<std::array<int, 3>> disk_faces(int rings, int sectors) {
    auto vid = [sectors](int ring, int j) {
        return 1 + (ring - 1) * sectors + (j % sectors);
    };
    std::vector<std::array<int, 3>> faces;
    for (int j = 0; j < sectors; ++j)
        faces.push_back({0, vid(1, j), vid(1, j + 1)});
    for (int i = 1; i < rings; ++i)
        for (int j = 0; j < sectors; ++j) {
            faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            faces.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    return faces;
}

void check_disk_shape(int rings, int sectors) {
    if (rings < 1 || sectors < 3)
        throw GeometryError("disk mesh needs rings >= 1 and sectors >= 3");
}

template <typename PointOf, typename DistOf>
PLSurface assemble_disk(int rings, int sectors, PointOf&& point, DistOf&& dist) {
    auto faces = disk_faces(rings, sectors);
    std::map<std::pair<int, int>, double> lengths;
    for (const auto& f : faces)
        for (int s = 0; s < 3; ++s) {
            int a = f[s], b = f[(s + 1) % 3];
            auto key = a < b ? std::pair{a, b} : std::pair{b, a};
            if (!lengths.count(key))
                lengths[key] = dist(point(key.first), point(key.second));
        }
    return PLSurface::build(1 + rings * sectors, std::move(faces), lengths);
}

} // namespace

PLSurface make_flat_disk(int rings, int sectors, double R) {
    check_disk_shape(rings, sectors);
    std::vector<std::array<double, 2>> coords{{0.0, 0.0}};
    for (int i = 1; i <= rings; ++i)
        for (int j = 0; j < sectors; ++j) {
            double r = R * i / rings;
            double phi = 2.0 * M_PI * j / sectors;
            coords.push_back({r * std::cos(phi), r * std::sin(phi)});
        }
    PLSurface s = assemble_disk(
        rings, sectors, [&](int v) { return coords[v]; },
        [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
            return std::hypot(a[0] - b[0], a[1] - b[1]);
        });
    s.coordinates = coords;
    return s;
}

PLSurface make_cone_disk(const ConeSpec& cone, int rings, int sectors, double R) {
    check_disk_shape(rings, sectors);
    if (cone.theta / sectors >= M_PI)
        throw GeometryError("sector gap must stay below pi for direct edges");
    std::vector<ConePoint> pts{{0.0, 0.0}};
    for (int i = 1; i <= rings; ++i)
        for (int j = 0; j < sectors; ++j)
            pts.push_back({R * i / rings, cone.theta * j / sectors});
    return assemble_disk(
        rings, sectors, [&](int v) { return pts[v]; },
        [&](const ConePoint& a, const ConePoint& b) {
            return cone_distance(cone, a, b);
        });
}

GeneratedMesh random_npc_disk(uint64_t seed) {
    // a draw occasionally lands too close to a certification threshold;
    // retry deterministically with a derived stream
    for (uint64_t attempt = 0;; ++attempt) {
        Rng rng(mix_seed(seed, 0x6d657368 + attempt));

        GeneratedMesh g;
        g.seed = seed;
        g.theta = rng.uniform(2.02 * M_PI, 3.1 * M_PI);
        g.kappa = rng.uniform(0.45, 1.3);
        g.rings = rng.uniform_int(4, 6);
        double target_arc = rng.uniform(0.30, 0.45);
        g.sectors = std::clamp(static_cast<int>(g.theta / target_arc + 0.5), 14, 48);
        g.mesh_radius = rng.uniform(1.0, 1.5);

        ConeSpec cone(CurvatureLevel(-g.kappa * g.kappa), g.theta);

        std::vector<ConePoint> pts{{0.0, 0.0}};
        double slot = g.theta / g.sectors;
        for (int i = 1; i <= g.rings; ++i)
            for (int j = 0; j < g.sectors; ++j) {
                double r = g.mesh_radius * i / g.rings;
                r *= 1.0 + 0.05 * (2.0 * rng.uniform() - 1.0);
                double phi = (j + 0.20 * (2.0 * rng.uniform() - 1.0)) * slot;
                pts.push_back({r, phi});
            }

        PLSurface surf;
        try {
            surf = assemble_disk(
                g.rings, g.sectors, [&](int v) { return pts[v]; },
                [&](const ConePoint& a, const ConePoint& b) {
                    return cone_distance(cone, a, b);
                });
        } catch (const GeometryError&) {
            continue; // jitter produced a degenerate face; redraw
        }

        if (surf.min_face_slack() < 1e-3) continue;

        CurvatureMeasure cm = curvature_measure(surf);
        double slack = std::numeric_limits<double>::infinity();
        for (int v = 0; v < surf.vertex_count(); ++v)
            if (!surf.vertex_on_boundary(v)) slack = std::min(slack, -cm.omega[v]);
        if (!(slack >= 1e-3)) continue;

        g.min_omega_slack = slack;
        g.suggested_radius = g.mesh_radius * rng.uniform(0.55, 0.72) * 0.94;
        g.surf = std::move(surf);
        return g;
    }
}

} // namespace conegeo
