#include "cubix/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubix {

std::array<int, 2> SubdividedComplex::spokes_at_edge(int e) const {
    std::array<int, 2> out{-1, -1};
    int found = 0;
    for (int s = 2 * E; s < n1() && found < 2; ++s) {
        if (one_cells[s][0] == V + e || one_cells[s][1] == V + e) out[found++] = s;
    }
    if (found != 2) throw std::logic_error("spokes_at_edge: expected exactly two spokes");
    return out;
}

SubdividedComplex subdivide(const GMap2& g, const CellIndex& cells) {
    SubdividedComplex s;
    s.V = cells.V;
    s.E = cells.E;
    s.F = cells.F;
    size_t n = g.n_darts();

    // half-edges: a2-orbits, numbered by smallest dart
    s.halfedge_of_dart.assign(n, -1);
    {
        int next = 0;
        for (size_t d = 0; d < n; ++d) {
            if (s.halfedge_of_dart[d] >= 0) continue;
            s.halfedge_of_dart[d] = next;
            s.halfedge_of_dart[g.a2[d]] = next;
            s.one_cells.push_back({cells.vertex_of[d], s.V + cells.edge_of[d]});
            s.one_src.push_back(cells.edge_of[d]);
            ++next;
        }
        if (next != 2 * s.E) throw std::logic_error("subdivide: half-edge count mismatch");
    }
    // spokes: a0-pairs, numbered by smallest dart, after the half-edges
    s.spoke_of_dart.assign(n, -1);
    {
        int next = 2 * s.E;
        for (size_t d = 0; d < n; ++d) {
            if (s.spoke_of_dart[d] >= 0) continue;
            s.spoke_of_dart[d] = next;
            s.spoke_of_dart[g.a0[d]] = next;
            s.one_cells.push_back({s.V + cells.edge_of[d], s.V + s.E + cells.face_of[d]});
            s.one_src.push_back(cells.face_of[d]);
            ++next;
        }
        if (next != 2 * s.E + 4 * s.F) throw std::logic_error("subdivide: spoke count mismatch");
    }
    // quarter squares: a1-pairs
    {
        std::vector<uint8_t> done(n, 0);
        for (size_t d = 0; d < n; ++d) {
            if (done[d]) continue;
            Dart dd = static_cast<Dart>(d);
            Dart e = g.a1[dd];
            done[dd] = done[e] = 1;
            s.two_cells.push_back({s.halfedge_of_dart[dd], s.spoke_of_dart[dd],
                                   s.spoke_of_dart[e], s.halfedge_of_dart[e]});
            s.two_src.push_back(cells.face_of[d]);
        }
    }

    s.zero_on_boundary.assign(s.n0(), 0);
    s.one_on_boundary.assign(s.n1(), 0);
    for (size_t d = 0; d < n; ++d) {
        if (g.a2[d] == static_cast<Dart>(d)) {
            s.zero_on_boundary[cells.vertex_of[d]] = 1;
            s.zero_on_boundary[s.V + cells.edge_of[d]] = 1;
            s.one_on_boundary[s.halfedge_of_dart[d]] = 1;
        }
    }
    return s;
}

}  // namespace cubix
