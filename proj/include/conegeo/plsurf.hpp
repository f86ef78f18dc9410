#pragma once

// Piecewise linear surfaces: triangle meshes carrying only combinatorics and
// edge lengths. Faces are flat Euclidean triangles; all curvature sits at
// vertices (angle defect) and all boundary turning at boundary vertices.
//
// Geodesic distance is approximated on the Steiner graph: each edge gets n
// extra equally spaced nodes and every face contributes a complete graph on
// the nodes of its boundary, weighted by unfolded straight-line length.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conegeo/errors.hpp"

namespace conegeo {

class PLSurface {
public:
    struct Edge {
        int a, b;      // vertex ids, a < b
        double len;
        int f0 = -1, f1 = -1; // incident faces, f1 = -1 on the boundary
    };

    // Validates and indexes the mesh: a connected 2-manifold, possibly with
    // boundary, every face satisfying the strict triangle inequality.
    static PLSurface build(int vertex_count,
                           std::vector<std::array<int, 3>> faces,
                           const std::map<std::pair<int, int>, double>& lengths);

    int vertex_count() const { return nv_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int euler_characteristic() const { return nv_ - edge_count() + face_count(); }

    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    const std::vector<Edge>& edges() const { return edges_; }
    // edge ids per face: slot s joins corners s and (s+1)%3
    const std::array<int, 3>& face_edges(int f) const { return face_edge_[f]; }
    double edge_length(int a, int b) const;
    bool vertex_on_boundary(int v) const { return boundary_vertex_[v]; }
    bool has_boundary() const { return has_boundary_; }

    // Euclidean corner angle of face f at its corner slot (0, 1 or 2).
    double corner_angle(int f, int corner) const;

    // Unfold face f isometrically into the plane; corner 0 at the origin,
    // corner 1 on the positive x axis, corner 2 in the upper half plane.
    std::array<std::array<double, 2>, 3> unfold(int f) const;

    // Smallest triangle-inequality slack over faces, relative to the
    // face perimeter. Generators keep this comfortably positive.
    double min_face_slack() const;

    // Optional planar vertex coordinates, carried through JSON for meshes
    // that come with an embedding (test oracles use them).
    std::optional<std::vector<std::array<double, 2>>> coordinates;

private:
    int nv_ = 0;
    std::vector<std::array<int, 3>> faces_;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 3>> face_edge_;
    std::vector<bool> boundary_vertex_;
    bool has_boundary_ = false;
};

// Angle sum around each vertex (interior and boundary alike).
std::vector<double> vertex_angle_sums(const PLSurface& s);

struct CurvatureMeasure {
    std::vector<double> omega;   // 2 pi minus angle sum, zero at boundary vertices
    std::vector<double> turning; // pi minus angle sum, zero at interior vertices
    double omega_total() const;
    double omega_minus() const;  // total mass of the negative part
    double turning_total() const;
};

CurvatureMeasure curvature_measure(const PLSurface& s);

// | sum omega + sum turning - 2 pi chi |, zero for any valid closed-up mesh.
double gauss_bonnet_residual(const PLSurface& s);

// Source for a distance field: a mesh vertex, or a point inside a face
// given in barycentric coordinates.
struct BasePoint {
    int vertex = -1;
    int face = -1;
    std::array<double, 3> bary{0.0, 0.0, 0.0};

    static BasePoint at_vertex(int v) { return {v, -1, {}}; }
    static BasePoint in_face(int f, const std::array<double, 3>& b) {
        return {-1, f, b};
    }
};

// Steiner graph of a surface at a given refinement level. Node ids:
// vertices first, then edge e contributes nodes  V + e*n .. V + e*n + n-1
// at fractions (j+1)/(n+1) from the smaller-id endpoint.
struct SteinerGraph {
    int refinement = 0;
    int node_count = 0;
    std::vector<std::pair<int, int>> arcs; // undirected, unordered
    std::vector<double> weight;
};

SteinerGraph build_steiner_graph(const PLSurface& s, int refinement);

struct DistanceField {
    int refinement = 0;
    std::vector<double> dist; // node-indexed, infinity when unreachable
    double vertex_distance(int v) const { return dist[v]; }
};

DistanceField geodesic_distance(const PLSurface& s, const BasePoint& base,
                                int refinement);

// Measure of a sublevel set {distance <= t} of a distance field.
struct SublevelMeasure {
    double area = 0.0;
    double level_length = 0.0;    // length of the level curve {distance = t}
    double boundary_length = 0.0; // portion of the surface boundary absorbed
    double perimeter() const { return level_length + boundary_length; }
};

SublevelMeasure sublevel_disk(const PLSurface& s, const DistanceField& field,
                              double t);

// Lengths of the curves at distance t from the boundary of the disk
// {distance <= R}, sampled at t = R*i/samples for i = 0..samples.
struct LevelSample {
    double t;
    double length;
};
std::vector<LevelSample> level_curve_profile(const PLSurface& s,
                                             const DistanceField& field,
                                             double R, int samples);

// Worst violation of  length(C_t) >= L0 - (2 pi + omega_minus) * t  over the
// profile, ignoring samples where the bound is already nonpositive.
// Nonnegative result means the bound held everywhere.
double check_level_length_bound(const std::vector<LevelSample>& profile,
                                double L0, double omega_minus);

struct DiskReport {
    double radius = 0.0;
    int refinement = 0;
    double perimeter = 0.0;
    double area = 0.0;
    double omega_minus_inside = 0.0; // negative curvature mass strictly inside
    double rhs = 0.0;                // perimeter^2 / (4 pi + 2 omega_minus)
    double margin = 0.0;             // area - rhs, nonnegative in exact geometry
    bool touches_boundary = false;
};

DiskReport verify_disk_inequality(const PLSurface& s, const BasePoint& base,
                                  double R, int refinement);

// JSON mesh exchange: {"vertices": N, "faces": [[i,j,k],...],
// "edge_lengths": {"i-j": len, ...}, "coordinates": [[x,y],...] (optional)}
PLSurface parse_mesh_json(const std::string& text);
std::string mesh_to_json(const PLSurface& s);
PLSurface load_mesh_json(const std::string& path);
void save_mesh_json(const PLSurface& s, const std::string& path);

} // namespace conegeo
