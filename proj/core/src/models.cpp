#include "cubix/models.hpp"

#include <map>
#include <stdexcept>

#include "cubix/surface.hpp"

namespace cubix {

namespace {

// Build a quad complex from per-face vertex walks with consistent
// orientation: each directed side (u,v) must be matched by exactly one
// reverse side (v,u); unmatched sides become boundary. Only usable when a
// vertex pair determines at most one gluing.
QuadGMap from_face_walks(const std::vector<std::array<int, 4>>& faces) {
    size_t nf = faces.size();
    QuadGMap g(8 * nf);
    for (size_t f = 0; f < nf; ++f) {
        Dart base = static_cast<Dart>(8 * f);
        for (int s = 0; s < 4; ++s) {
            g.set0(base + 2 * s, base + 2 * s + 1);
            g.set1(base + 2 * s + 1, base + (2 * s + 2) % 8);
        }
    }
    std::map<std::pair<int, int>, std::pair<Dart, Dart>> sides;  // (u,v) -> darts (at u, at v)
    for (size_t f = 0; f < nf; ++f) {
        for (int s = 0; s < 4; ++s) {
            int u = faces[f][s], v = faces[f][(s + 1) % 4];
            Dart du = static_cast<Dart>(8 * f + 2 * s), dv = du + 1;
            auto rev = sides.find({v, u});
            if (rev != sides.end()) {
                g.set2(du, rev->second.second);
                g.set2(dv, rev->second.first);
                sides.erase(rev);
            } else if (sides.count({u, v})) {
                throw std::invalid_argument("from_face_walks: inconsistent side orientations");
            } else {
                sides[{u, v}] = {du, dv};
            }
        }
    }
    return g;  // leftover sides stay a2-fixed (boundary)
}

// Grid conventions: face (i,j) occupies darts [8f, 8f+8), f = j*m + i.
// Side s uses darts (8f+2s, 8f+2s+1); sides 0..3 = bottom, right, top, left.
// Dart 8f+2s sits at corner s, dart 8f+2s+1 at corner s+1 (corners
// (i,j), (i+1,j), (i+1,j+1), (i,j+1)).
QuadGMap grid_faces(int m, int n) {
    QuadGMap g(static_cast<size_t>(8) * m * n);
    for (int f = 0; f < m * n; ++f) {
        Dart base = static_cast<Dart>(8 * f);
        for (int s = 0; s < 4; ++s) {
            g.set0(base + 2 * s, base + 2 * s + 1);
            g.set1(base + 2 * s + 1, base + (2 * s + 2) % 8);
        }
    }
    return g;
}

inline Dart gd(int m, int i, int j, int k) { return static_cast<Dart>(8 * (j * m + i) + k); }

void glue_right_left(QuadGMap& g, int m, int i, int j, int i2, int j2) {
    g.set2(gd(m, i, j, 2), gd(m, i2, j2, 7));
    g.set2(gd(m, i, j, 3), gd(m, i2, j2, 6));
}

void glue_top_bottom(QuadGMap& g, int m, int i, int j, int i2, int j2) {
    g.set2(gd(m, i, j, 4), gd(m, i2, j2, 1));
    g.set2(gd(m, i, j, 5), gd(m, i2, j2, 0));
}

void check_params(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid parameters must be positive");
}

std::vector<int> row_edge_cycle(const QuadGMap& g, const CellIndex& c, int m, int j, int side_dart) {
    std::vector<int> cyc;
    for (int i = 0; i < m; ++i) cyc.push_back(c.edge_of[gd(m, i, j, side_dart)]);
    return cyc;
}

}  // namespace

Model cube_sphere() {
    // vertex v = x + 2y + 4z
    std::vector<std::array<int, 4>> faces = {
        {0, 2, 3, 1},  // bottom
        {4, 5, 7, 6},  // top
        {0, 1, 5, 4},  // front
        {2, 6, 7, 3},  // back
        {0, 4, 6, 2},  // left
        {1, 3, 7, 5},  // right
    };
    return {from_face_walks(faces), {}};
}

Model pillow_sphere() {
    QuadGMap g = grid_faces(2, 1);
    for (int d = 0; d < 8; ++d) g.set2(static_cast<Dart>(d), static_cast<Dart>(8 + d));
    return {g, {}};
}

Model beak_sphere() {
    QuadGMap g = grid_faces(1, 1);
    g.set2(1, 2);
    g.set2(0, 3);
    g.set2(5, 6);
    g.set2(4, 7);
    return {g, {}};
}

Model grid_torus(int m, int n) {
    check_params(m, n);
    QuadGMap g = grid_faces(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            glue_right_left(g, m, i, j, (i + 1) % m, j);
            glue_top_bottom(g, m, i, j, i, (j + 1) % n);
        }
    CellIndex c = cell_index(g);
    std::vector<int> rho_a = row_edge_cycle(g, c, m, 0, 0);
    std::vector<int> rho_b;
    for (int j = 0; j < n; ++j) rho_b.push_back(c.edge_of[gd(m, 0, j, 6)]);
    return {g, {rho_a, rho_b}};
}

Model klein_grid(int m, int n) {
    check_params(m, n);
    QuadGMap g = grid_faces(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) glue_right_left(g, m, i, j, (i + 1) % m, j);
    for (int i = 0; i < m; ++i) {
        if (n > 1)
            for (int j = 0; j + 1 < n; ++j) glue_top_bottom(g, m, i, j, i, j + 1);
        // mirrored wrap: corner (x, n) identifies with (m - x, 0)
        g.set2(gd(m, i, n - 1, 4), gd(m, (m - 1 - i + m) % m, 0, 0));
        g.set2(gd(m, i, n - 1, 5), gd(m, (m - 1 - i + m) % m, 0, 1));
    }
    CellIndex c = cell_index(g);
    std::vector<int> rho_a = row_edge_cycle(g, c, m, 0, 0);
    std::vector<int> rho_b;
    for (int j = 0; j < n; ++j) rho_b.push_back(c.edge_of[gd(m, 0, j, 6)]);
    return {g, {rho_a, rho_b}};
}

Model rp2_min() {
    QuadGMap g = grid_faces(1, 1);
    g.set2(0, 4);
    g.set2(1, 5);
    g.set2(2, 6);
    g.set2(3, 7);
    CellIndex c = cell_index(g);
    return {g, {{c.edge_of[0], c.edge_of[2]}}};
}

Model disk_grid(int m, int n) {
    check_params(m, n);
    QuadGMap g = grid_faces(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            if (i + 1 < m) glue_right_left(g, m, i, j, i + 1, j);
            if (j + 1 < n) glue_top_bottom(g, m, i, j, i, j + 1);
        }
    return {g, {}};
}

Model annulus_grid(int m, int n) {
    check_params(m, n);
    QuadGMap g = grid_faces(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            glue_right_left(g, m, i, j, (i + 1) % m, j);
            if (j + 1 < n) glue_top_bottom(g, m, i, j, i, j + 1);
        }
    Model md{g, {}};
    if (n >= 2) {
        CellIndex c = cell_index(g);
        md.reference_cycles.push_back(row_edge_cycle(g, c, m, 1, 0));  // interior core circle
    }
    return md;
}

Model moebius_strip(int n) {
    check_params(n, 1);
    int m = n;
    QuadGMap g = grid_faces(m, 2);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i) {
            if (i + 1 < m) glue_right_left(g, m, i, j, i + 1, j);
        }
    for (int i = 0; i < m; ++i) glue_top_bottom(g, m, i, 0, i, 1);
    // mirrored wrap: corner (m, y) identifies with (0, 2 - y)
    for (int j = 0; j < 2; ++j) {
        g.set2(gd(m, m - 1, j, 2), gd(m, 0, 1 - j, 6));
        g.set2(gd(m, m - 1, j, 3), gd(m, 0, 1 - j, 7));
    }
    CellIndex c = cell_index(g);
    return {g, {row_edge_cycle(g, c, m, 1, 0)}};  // middle horizontal row
}

Model standard_model(const std::string& name, const std::vector<int>& params) {
    auto p = [&](size_t k) -> int {
        if (params.size() <= k) throw std::invalid_argument("model " + name + ": missing parameter");
        if (params[k] < 1) throw std::invalid_argument("model " + name + ": parameters must be positive");
        return params[k];
    };
    if (name == "cube_sphere") return cube_sphere();
    if (name == "pillow_sphere") return pillow_sphere();
    if (name == "beak_sphere") return beak_sphere();
    if (name == "rp2_min") return rp2_min();
    if (name == "grid_torus") return grid_torus(p(0), p(1));
    if (name == "klein_grid") return klein_grid(p(0), p(1));
    if (name == "disk_grid") return disk_grid(p(0), p(1));
    if (name == "annulus_grid") return annulus_grid(p(0), p(1));
    if (name == "moebius_strip") return moebius_strip(p(0));
    throw std::invalid_argument("unknown model: " + name);
}

std::vector<std::string> model_names() {
    return {"cube_sphere", "pillow_sphere", "beak_sphere", "rp2_min",
            "grid_torus", "klein_grid", "disk_grid", "annulus_grid", "moebius_strip"};
}

}  // namespace cubix
