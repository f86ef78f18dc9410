#include "conegeo/plsurf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "conegeo/cone.hpp"
#include "conegeo/constcurv.hpp"

namespace conegeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

} // namespace

PLSurface PLSurface::build(int vertex_count,
                           std::vector<std::array<int, 3>> faces,
                           const std::map<std::pair<int, int>, double>& lengths) {
    if (vertex_count < 3 || faces.empty())
        throw MeshError("mesh needs at least 3 vertices and one face");

    PLSurface s;
    s.nv_ = vertex_count;
    s.faces_ = std::move(faces);

    std::map<std::pair<int, int>, int> edge_id;
    for (int f = 0; f < static_cast<int>(s.faces_.size()); ++f) {
        const auto& fc = s.faces_[f];
        for (int c : fc)
            if (c < 0 || c >= vertex_count)
                throw MeshError("face " + std::to_string(f) + " references vertex " +
                                std::to_string(c) + " out of range");
        if (fc[0] == fc[1] || fc[1] == fc[2] || fc[2] == fc[0])
            throw MeshError("face " + std::to_string(f) + " repeats a vertex");

        std::array<int, 3> fe{};
        for (int slot = 0; slot < 3; ++slot) {
            auto key = ordered(fc[slot], fc[(slot + 1) % 3]);
            auto it = edge_id.find(key);
            int e;
            if (it == edge_id.end()) {
                auto lit = lengths.find(key);
                if (lit == lengths.end())
                    throw MeshError("missing length for edge " +
                                    std::to_string(key.first) + "-" +
                                    std::to_string(key.second));
                double len = lit->second;
                if (!std::isfinite(len) || len <= 0.0)
                    throw MeshError("edge " + std::to_string(key.first) + "-" +
                                    std::to_string(key.second) +
                                    " has a nonpositive length");
                e = static_cast<int>(s.edges_.size());
                s.edges_.push_back({key.first, key.second, len, f, -1});
                edge_id.emplace(key, e);
            } else {
                e = it->second;
                Edge& ed = s.edges_[e];
                if (ed.f1 != -1)
                    throw MeshError("edge " + std::to_string(key.first) + "-" +
                                    std::to_string(key.second) +
                                    " is shared by more than two faces");
                if (ed.f0 == f)
                    throw MeshError("face " + std::to_string(f) +
                                    " uses an edge twice");
                ed.f1 = f;
            }
            fe[slot] = e;
        }
        s.face_edge_.push_back(fe);
    }

    for (const auto& [key, len] : lengths)
        if (edge_id.find(key) == edge_id.end())
            throw MeshError("length given for nonexistent edge " +
                            std::to_string(key.first) + "-" +
                            std::to_string(key.second));

    for (int f = 0; f < s.face_count(); ++f) {
        double l0 = s.edges_[s.face_edge_[f][0]].len;
        double l1 = s.edges_[s.face_edge_[f][1]].len;
        double l2 = s.edges_[s.face_edge_[f][2]].len;
        if (!(l0 < l1 + l2 && l1 < l2 + l0 && l2 < l0 + l1))
            throw MeshError("face " + std::to_string(f) +
                            " violates the strict triangle inequality");
    }

    // all faces reachable through shared edges
    {
        std::vector<char> seen(s.face_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int e : s.face_edge_[f]) {
                int g = s.edges_[e].f0 == f ? s.edges_[e].f1 : s.edges_[e].f0;
                if (g >= 0 && !seen[g]) {
                    seen[g] = 1;
                    ++reached;
                    stack.push_back(g);
                }
            }
        }
        if (reached != s.face_count())
            throw MeshError("mesh is not edge-connected");
    }

    s.boundary_vertex_.assign(vertex_count, false);
    for (const Edge& e : s.edges_)
        if (e.f1 == -1) {
            s.boundary_vertex_[e.a] = true;
            s.boundary_vertex_[e.b] = true;
            s.has_boundary_ = true;
        }

    // umbrella condition: the faces around each vertex form one fan
    {
        std::vector<std::vector<int>> vert_edges(vertex_count);
        for (int e = 0; e < s.edge_count(); ++e) {
            vert_edges[s.edges_[e].a].push_back(e);
            vert_edges[s.edges_[e].b].push_back(e);
        }
        std::vector<int> face_deg(vertex_count, 0);
        for (const auto& fc : s.faces_)
            for (int c : fc) ++face_deg[c];

        for (int v = 0; v < vertex_count; ++v) {
            if (vert_edges[v].empty())
                throw MeshError("vertex " + std::to_string(v) +
                                " belongs to no face");
            // start at a boundary edge when there is one
            int start = vert_edges[v].front();
            for (int e : vert_edges[v])
                if (s.edges_[e].f1 == -1) start = e;
            int visited = 0;
            int e = start, f = s.edges_[e].f0;
            while (f != -1) {
                ++visited;
                // the other edge of f incident to v
                int next = -1;
                for (int fe : s.face_edge_[f]) {
                    if (fe == e) continue;
                    if (s.edges_[fe].a == v || s.edges_[fe].b == v) next = fe;
                }
                e = next;
                int g = s.edges_[e].f0 == f ? s.edges_[e].f1 : s.edges_[e].f0;
                f = (e == start) ? -1 : g; // interior fan closed up
                if (visited > face_deg[v]) break;
            }
            if (visited != face_deg[v])
                throw MeshError("faces around vertex " + std::to_string(v) +
                                " do not form a single fan");
        }
    }

    return s;
}

double PLSurface::edge_length(int a, int b) const {
    auto key = ordered(a, b);
    for (const Edge& e : edges_)
        if (e.a == key.first && e.b == key.second) return e.len;
    throw MeshError("no edge between " + std::to_string(a) + " and " +
                    std::to_string(b));
}

double PLSurface::corner_angle(int f, int corner) const {
    double adj1 = edges_[face_edge_[f][corner]].len;
    double adj2 = edges_[face_edge_[f][(corner + 2) % 3]].len;
    double opp = edges_[face_edge_[f][(corner + 1) % 3]].len;
    return angle_from_sides(CurvatureLevel(0.0), opp, adj1, adj2);
}

std::array<std::array<double, 2>, 3> PLSurface::unfold(int f) const {
    double l0 = edges_[face_edge_[f][0]].len; // corners 0-1
    double l1 = edges_[face_edge_[f][1]].len; // corners 1-2
    double l2 = edges_[face_edge_[f][2]].len; // corners 2-0
    double x = (l0 * l0 + l2 * l2 - l1 * l1) / (2.0 * l0);
    double y2 = l2 * l2 - x * x;
    double y = std::sqrt(std::max(0.0, y2));
    return {{{0.0, 0.0}, {l0, 0.0}, {x, y}}};
}

double PLSurface::min_face_slack() const {
    double worst = kInf;
    for (int f = 0; f < face_count(); ++f) {
        double l0 = edges_[face_edge_[f][0]].len;
        double l1 = edges_[face_edge_[f][1]].len;
        double l2 = edges_[face_edge_[f][2]].len;
        double p = l0 + l1 + l2;
        double slack = std::min({l1 + l2 - l0, l2 + l0 - l1, l0 + l1 - l2});
        worst = std::min(worst, slack / p);
    }
    return worst;
}

std::vector<double> vertex_angle_sums(const PLSurface& s) {
    std::vector<double> sums(s.vertex_count(), 0.0);
    for (int f = 0; f < s.face_count(); ++f)
        for (int c = 0; c < 3; ++c) sums[s.faces()[f][c]] += s.corner_angle(f, c);
    return sums;
}

CurvatureMeasure curvature_measure(const PLSurface& s) {
    CurvatureMeasure m;
    m.omega.assign(s.vertex_count(), 0.0);
    m.turning.assign(s.vertex_count(), 0.0);
    std::vector<double> sums = vertex_angle_sums(s);
    for (int v = 0; v < s.vertex_count(); ++v) {
        if (s.vertex_on_boundary(v))
            m.turning[v] = M_PI - sums[v];
        else
            m.omega[v] = 2.0 * M_PI - sums[v];
    }
    return m;
}

double CurvatureMeasure::omega_total() const {
    double t = 0.0;
    for (double w : omega) t += w;
    return t;
}

double CurvatureMeasure::omega_minus() const {
    double t = 0.0;
    for (double w : omega) t += std::max(0.0, -w);
    return t;
}

double CurvatureMeasure::turning_total() const {
    double t = 0.0;
    for (double w : turning) t += w;
    return t;
}

double gauss_bonnet_residual(const PLSurface& s) {
    CurvatureMeasure m = curvature_measure(s);
    double chi = s.euler_characteristic();
    return std::abs(m.omega_total() + m.turning_total() - 2.0 * M_PI * chi);
}

namespace {

// Boundary nodes of a face in cyclic order together with their positions in
// the face's unfolding: corner, then the Steiner nodes of the edge toward
// the next corner, and so on around.
struct FaceCycle {
    std::vector<int> node;
    std::vector<std::array<double, 2>> pos;
};

FaceCycle face_cycle(const PLSurface& s, int refinement, int f) {
    const int n = refinement;
    const auto& fc = s.faces()[f];
    auto P = s.unfold(f);
    FaceCycle cyc;
    cyc.node.reserve(3 * (n + 1));
    cyc.pos.reserve(3 * (n + 1));
    for (int slot = 0; slot < 3; ++slot) {
        int u = fc[slot], w = fc[(slot + 1) % 3];
        int e = s.face_edges(f)[slot];
        cyc.node.push_back(u);
        cyc.pos.push_back(P[slot]);
        const auto& Pn = P[(slot + 1) % 3];
        for (int m = 1; m <= n; ++m) {
            double frac = static_cast<double>(m) / (n + 1);
            // node j of edge e sits at fraction (j+1)/(n+1) from its
            // smaller endpoint; flip when walking against that orientation
            int j = (u < w) ? m - 1 : n - m;
            cyc.node.push_back(s.vertex_count() + e * n + j);
            cyc.pos.push_back({P[slot][0] + frac * (Pn[0] - P[slot][0]),
                               P[slot][1] + frac * (Pn[1] - P[slot][1])});
        }
    }
    return cyc;
}

double dist2d(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

int total_nodes(const PLSurface& s, int refinement) {
    return s.vertex_count() + s.edge_count() * refinement;
}

} // namespace

SteinerGraph build_steiner_graph(const PLSurface& s, int refinement) {
    if (refinement < 0) throw GeometryError("refinement must be >= 0");
    SteinerGraph g;
    g.refinement = refinement;
    g.node_count = total_nodes(s, refinement);
    for (int f = 0; f < s.face_count(); ++f) {
        FaceCycle cyc = face_cycle(s, refinement, f);
        int m = static_cast<int>(cyc.node.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                g.arcs.emplace_back(cyc.node[i], cyc.node[j]);
                g.weight.push_back(dist2d(cyc.pos[i], cyc.pos[j]));
            }
    }
    return g;
}

DistanceField geodesic_distance(const PLSurface& s, const BasePoint& base,
                                int refinement) {
    SteinerGraph g = build_steiner_graph(s, refinement);

    // CSR adjacency
    std::vector<int> deg(g.node_count, 0);
    for (const auto& [a, b] : g.arcs) {
        ++deg[a];
        ++deg[b];
    }
    std::vector<int> off(g.node_count + 1, 0);
    for (int i = 0; i < g.node_count; ++i) off[i + 1] = off[i] + deg[i];
    std::vector<int> adj(off.back());
    std::vector<double> w(off.back());
    std::vector<int> cursor = off;
    for (size_t k = 0; k < g.arcs.size(); ++k) {
        auto [a, b] = g.arcs[k];
        adj[cursor[a]] = b;
        w[cursor[a]++] = g.weight[k];
        adj[cursor[b]] = a;
        w[cursor[b]++] = g.weight[k];
    }

    DistanceField field;
    field.refinement = refinement;
    field.dist.assign(g.node_count, kInf);

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

    if (base.vertex >= 0) {
        if (base.vertex >= s.vertex_count())
            throw GeometryError("base vertex out of range");
        field.dist[base.vertex] = 0.0;
        heap.emplace(0.0, base.vertex);
    } else {
        if (base.face < 0 || base.face >= s.face_count())
            throw GeometryError("base face out of range");
        double bsum = base.bary[0] + base.bary[1] + base.bary[2];
        if (!(bsum > 0.0))
            throw GeometryError("barycentric weights must have positive sum");
        auto P = s.unfold(base.face);
        std::array<double, 2> p{0.0, 0.0};
        for (int c = 0; c < 3; ++c) {
            p[0] += base.bary[c] / bsum * P[c][0];
            p[1] += base.bary[c] / bsum * P[c][1];
        }
        FaceCycle cyc = face_cycle(s, refinement, base.face);
        for (size_t i = 0; i < cyc.node.size(); ++i) {
            double d = dist2d(p, cyc.pos[i]);
            if (d < field.dist[cyc.node[i]]) {
                field.dist[cyc.node[i]] = d;
                heap.emplace(d, cyc.node[i]);
            }
        }
    }

    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > field.dist[u]) continue;
        for (int k = off[u]; k < off[u + 1]; ++k) {
            double nd = d + w[k];
            if (nd < field.dist[adj[k]]) {
                field.dist[adj[k]] = nd;
                heap.emplace(nd, adj[k]);
            }
        }
    }
    return field;
}

namespace {

double shoelace(const std::vector<std::array<double, 2>>& poly) {
    double a = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(a);
}

} // namespace

SublevelMeasure sublevel_disk(const PLSurface& s, const DistanceField& field,
                              double t) {
    if (!(t >= 0.0)) throw GeometryError("sublevel value must be >= 0");
    const int n = field.refinement;
    if (static_cast<int>(field.dist.size()) != total_nodes(s, n))
        throw GeometryError("distance field does not match this surface");

    SublevelMeasure out;
    std::vector<std::array<double, 2>> poly;

    // March the level around each face boundary. Crossings split the cycle
    // into inside and outside arcs; the level curve inside the face is the
    // non-crossing pairing of crossing points with least total chord length.
    // A level that grazes the face can cut off several corners at once, and
    // pairing each inside arc with its own closing chord would then replace
    // two short corner cuts by a pair of face-spanning chords, inflating the
    // level length by O(edge) no matter how fine the refinement. Faces are
    // convex, so all chords stay inside them.
    for (int f = 0; f < s.face_count(); ++f) {
        FaceCycle cyc = face_cycle(s, n, f);
        int m = static_cast<int>(cyc.node.size());
        std::vector<char> in(m);
        int outside = -1;
        for (int i = 0; i < m; ++i) {
            in[i] = field.dist[cyc.node[i]] <= t;
            if (!in[i]) outside = i;
        }
        if (outside < 0) { // fully absorbed face
            double a = 0.0;
            for (int i = 0; i < m; ++i) {
                const auto& p = cyc.pos[i];
                const auto& q = cyc.pos[(i + 1) % m];
                a += p[0] * q[1] - q[0] * p[1];
            }
            out.area += 0.5 * std::abs(a);
            continue;
        }

        auto crossing = [&](int i, int j) {
            double di = field.dist[cyc.node[i]];
            double dj = field.dist[cyc.node[j]];
            double span = dj - di;
            double u = span != 0.0 ? (t - di) / span : 0.5;
            return std::array<double, 2>{
                cyc.pos[i][0] + u * (cyc.pos[j][0] - cyc.pos[i][0]),
                cyc.pos[i][1] + u * (cyc.pos[j][1] - cyc.pos[i][1])};
        };

        // inside arcs in cyclic order, each stored as entry crossing,
        // inside nodes, exit crossing; starting the walk at an outside
        // node keeps every arc contiguous
        std::vector<std::vector<std::array<double, 2>>> arc;
        bool open = false;
        for (int k = 0; k < m; ++k) {
            int i = (outside + k) % m, j = (outside + k + 1) % m;
            if (!in[i] && in[j]) {
                arc.emplace_back();
                arc.back().push_back(crossing(i, j));
                open = true;
            } else if (open && in[i] && !in[j]) {
                arc.back().push_back(cyc.pos[i]);
                arc.back().push_back(crossing(i, j));
                open = false;
            } else if (open && in[i]) {
                arc.back().push_back(cyc.pos[i]);
            }
        }
        int narc = static_cast<int>(arc.size());
        if (narc == 0) continue;

        // crossing points in cyclic order: x[2r] enters arc r, x[2r+1]
        // leaves it; chords pair entries with exits (odd index gap)
        int nx = 2 * narc;
        std::vector<std::array<double, 2>> x(nx);
        for (int r = 0; r < narc; ++r) {
            x[2 * r] = arc[r].front();
            x[2 * r + 1] = arc[r].back();
        }
        auto cd = [&](int a, int b) { return dist2d(x[a], x[b]); };

        // min total chord length over non-crossing pairings, interval DP
        std::vector<std::vector<double>> best(nx, std::vector<double>(nx, 0.0));
        std::vector<std::vector<int>> pick(nx, std::vector<int>(nx, -1));
        for (int len = 2; len <= nx; len += 2)
            for (int i = 0; i + len - 1 < nx; ++i) {
                int j = i + len - 1;
                best[i][j] = kInf;
                for (int k = i + 1; k <= j; k += 2) {
                    double c = cd(i, k) + (k > i + 1 ? best[i + 1][k - 1] : 0.0)
                               + (k < j ? best[k + 1][j] : 0.0);
                    if (c < best[i][j]) {
                        best[i][j] = c;
                        pick[i][j] = k;
                    }
                }
            }
        std::vector<int> match(nx, -1);
        std::vector<std::pair<int, int>> stack{{0, nx - 1}};
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            if (i >= j) continue;
            int k = pick[i][j];
            match[i] = k;
            match[k] = i;
            stack.emplace_back(i + 1, k - 1);
            stack.emplace_back(k + 1, j);
        }

        // assemble components: follow each arc to its exit, jump along the
        // matched chord to the entry of the next arc, repeat until closed
        std::vector<char> done(narc, 0);
        for (int r0 = 0; r0 < narc; ++r0) {
            if (done[r0]) continue;
            poly.clear();
            int r = r0;
            do {
                done[r] = 1;
                poly.insert(poly.end(), arc[r].begin(), arc[r].end());
                int exit = 2 * r + 1;
                out.level_length += cd(exit, match[exit]);
                r = match[exit] / 2;
            } while (r != r0);
            out.area += shoelace(poly);
        }
    }

    // portions of the surface boundary absorbed into the sublevel set
    for (int e = 0; e < s.edge_count(); ++e) {
        const PLSurface::Edge& ed = s.edges()[e];
        if (ed.f1 != -1) continue;
        double seg = ed.len / (n + 1);
        int prev = ed.a;
        for (int m = 0; m <= n; ++m) {
            int next = (m == n) ? ed.b : s.vertex_count() + e * n + m;
            double da = field.dist[prev], db = field.dist[next];
            bool ina = da <= t, inb = db <= t;
            if (ina && inb)
                out.boundary_length += seg;
            else if (ina != inb) {
                double span = db - da;
                double u = span != 0.0 ? (t - da) / span : 0.5;
                out.boundary_length += seg * (ina ? u : 1.0 - u);
            }
            prev = next;
        }
    }
    return out;
}

std::vector<LevelSample> level_curve_profile(const PLSurface& s,
                                             const DistanceField& field,
                                             double R, int samples) {
    if (samples < 1) throw GeometryError("need at least one profile sample");
    std::vector<LevelSample> prof;
    prof.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        double t = R * i / samples;
        SublevelMeasure m = sublevel_disk(s, field, R - t);
        prof.push_back({t, m.level_length});
    }
    return prof;
}

double check_level_length_bound(const std::vector<LevelSample>& profile,
                                double L0, double omega_minus) {
    double worst = kInf;
    for (const LevelSample& ls : profile) {
        double bound = L0 - (2.0 * M_PI + omega_minus) * ls.t;
        if (bound <= 0.0) continue;
        worst = std::min(worst, ls.length - bound);
    }
    return std::isfinite(worst) ? worst : 0.0;
}

DiskReport verify_disk_inequality(const PLSurface& s, const BasePoint& base,
                                  double R, int refinement) {
    if (!(R > 0.0)) throw GeometryError("disk radius must be positive");
    DistanceField field = geodesic_distance(s, base, refinement);
    SublevelMeasure m = sublevel_disk(s, field, R);
    CurvatureMeasure cm = curvature_measure(s);

    DiskReport rep;
    rep.radius = R;
    rep.refinement = refinement;
    rep.perimeter = m.perimeter();
    rep.area = m.area;
    for (int v = 0; v < s.vertex_count(); ++v)
        if (!s.vertex_on_boundary(v) && field.dist[v] < R)
            rep.omega_minus_inside += std::max(0.0, -cm.omega[v]);

    for (int v = 0; v < s.vertex_count(); ++v)
        if (s.vertex_on_boundary(v) && field.dist[v] < R) rep.touches_boundary = true;
    for (int e = 0; e < s.edge_count(); ++e) {
        if (s.edges()[e].f1 != -1) continue;
        for (int j = 0; j < refinement; ++j)
            if (field.dist[s.vertex_count() + e * refinement + j] < R)
                rep.touches_boundary = true;
    }

    rep.rhs = reverse_isoperimetric_rhs(rep.perimeter, rep.omega_minus_inside);
    rep.margin = rep.area - rep.rhs;
    return rep;
}

PLSurface parse_mesh_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw MeshError(std::string("mesh JSON parse failure: ") + ex.what());
    }
    try {
        int nv = j.at("vertices").get<int>();
        std::vector<std::array<int, 3>> faces;
        for (const auto& fj : j.at("faces"))
            faces.push_back({fj.at(0).get<int>(), fj.at(1).get<int>(),
                             fj.at(2).get<int>()});
        std::map<std::pair<int, int>, double> lengths;
        for (const auto& [key, val] : j.at("edge_lengths").items()) {
            int a = -1, b = -1;
            if (std::sscanf(key.c_str(), "%d-%d", &a, &b) != 2)
                throw MeshError("bad edge key '" + key + "'");
            lengths[ordered(a, b)] = val.get<double>();
        }
        PLSurface s = PLSurface::build(nv, std::move(faces), lengths);
        if (j.contains("coordinates")) {
            std::vector<std::array<double, 2>> coords;
            for (const auto& cj : j.at("coordinates"))
                coords.push_back({cj.at(0).get<double>(), cj.at(1).get<double>()});
            if (static_cast<int>(coords.size()) != nv)
                throw MeshError("coordinate count does not match vertex count");
            s.coordinates = std::move(coords);
        }
        return s;
    } catch (const nlohmann::json::exception& ex) {
        throw MeshError(std::string("mesh JSON missing or mistyped field: ") +
                        ex.what());
    }
}

std::string mesh_to_json(const PLSurface& s) {
    nlohmann::json j;
    j["vertices"] = s.vertex_count();
    auto faces = nlohmann::json::array();
    for (const auto& f : s.faces()) faces.push_back({f[0], f[1], f[2]});
    j["faces"] = std::move(faces);
    auto lens = nlohmann::json::object();
    for (const auto& e : s.edges())
        lens[std::to_string(e.a) + "-" + std::to_string(e.b)] = e.len;
    j["edge_lengths"] = std::move(lens);
    if (s.coordinates) {
        auto coords = nlohmann::json::array();
        for (const auto& c : *s.coordinates) coords.push_back({c[0], c[1]});
        j["coordinates"] = std::move(coords);
    }
    return j.dump(2);
}

PLSurface load_mesh_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MeshError("cannot open mesh file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_mesh_json(ss.str());
}

void save_mesh_json(const PLSurface& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MeshError("cannot write mesh file " + path);
    out << mesh_to_json(s) << "\n";
}

} // namespace conegeo
