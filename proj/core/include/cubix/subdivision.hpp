#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cubix/gmap.hpp"

namespace cubix {

enum class CellKind : uint8_t { Vertex, EdgeMid, FaceCenter, HalfEdge, Spoke, QuarterFace };

/// Midpoint subdivision of a quad complex: each square splits into four.
///
/// 0-cells: [0,V) original vertices, [V,V+E) edge midpoints,
///          [V+E,V+E+F) face centers.
/// 1-cells: [0,2E) half-edges, [2E,2E+4F) spokes (center to edge midpoint).
/// 2-cells: [0,4F) quarter squares, one per face corner.
struct SubdividedComplex {
    int V = 0, E = 0, F = 0;

    std::vector<std::array<int, 2>> one_cells;   // endpoints (0-cell ids)
    std::vector<std::array<int, 4>> two_cells;   // side 1-cell ids, repeats allowed

    std::vector<uint8_t> zero_on_boundary;
    std::vector<uint8_t> one_on_boundary;        // only half-edges can be flagged

    // provenance: original cell each subdivided cell came from
    std::vector<int> one_src;                    // half-edge -> edge id, spoke -> face id
    std::vector<int> two_src;                    // quarter -> face id

    std::vector<int> halfedge_of_dart;           // per dart of the source complex
    std::vector<int> spoke_of_dart;

    int n0() const { return V + E + F; }
    int n1() const { return static_cast<int>(one_cells.size()); }
    int n2() const { return static_cast<int>(two_cells.size()); }
    int euler() const { return n0() - n1() + n2(); }

    int half_edge_count() const { return 2 * E; }
    int spoke_count() const { return 4 * F; }
    bool is_spoke(int c) const { return c >= 2 * E; }

    /// The two spoke 1-cells meeting the midpoint of edge e.
    std::array<int, 2> spokes_at_edge(int e) const;
};

SubdividedComplex subdivide(const GMap2& g, const CellIndex& cells);

}  // namespace cubix
