#pragma once

// Mesh builders: fixed reference meshes plus the seeded generator of
// nonpositively curved disk meshes used by the randomized sweeps.

#include <cstdint>

#include "conegeo/cone.hpp"
#include "conegeo/plsurf.hpp"

namespace conegeo {

// Regular tetrahedron boundary (closed surface, chi = 2).
PLSurface make_tetrahedron(double edge = 1.0);

// Flat triangulated disk with planar coordinates attached. Vertex 0 is the
// center; the outer ring is the boundary.
PLSurface make_flat_disk(int rings, int sectors, double R);

// Geodesic disk of radius R around the apex of a cone, triangulated with
// the same combinatorics as make_flat_disk. Vertex 0 is the apex.
PLSurface make_cone_disk(const ConeSpec& cone, int rings, int sectors, double R);

struct GeneratedMesh {
    PLSurface surf;
    uint64_t seed = 0;
    double theta = 0.0;  // apex angle of the generating cone
    double kappa = 0.0;  // sampled from the cone of curvature -kappa^2
    double mesh_radius = 0.0;
    int rings = 0, sectors = 0;
    // min over interior vertices of -omega: certified strict negativity
    double min_omega_slack = 0.0;
    // disk radius that keeps the sublevel disk away from the mesh boundary
    double suggested_radius = 0.0;
};

// Seeded generator: jittered triangulation of a geodesic disk on a
// negatively curved cone, intrinsic edge lengths. Every interior vertex is
// certified to carry strictly negative curvature measure.
GeneratedMesh random_npc_disk(uint64_t seed);

} // namespace conegeo
