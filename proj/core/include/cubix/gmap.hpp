#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cubix {

using Dart = uint32_t;
inline constexpr Dart kNoDart = UINT32_MAX;

/// 2-dimensional generalized map: a dart set with three involutions.
/// A dart is a mutually incident (vertex, edge, face) triple. a0 swaps
/// the two darts of an edge side, a1 swaps the two darts of a face
/// corner, a2 crosses an edge to the neighboring face. a2(d) == d marks
/// a boundary dart.
///
/// Cells are orbits: vertices = <a1,a2>, edges = <a0,a2>, faces = <a0,a1>.
struct GMap2 {
    std::vector<Dart> a0, a1, a2;

    GMap2() = default;
    explicit GMap2(size_t n) : a0(n), a1(n), a2(n) {
        for (size_t d = 0; d < n; ++d) a0[d] = a1[d] = a2[d] = static_cast<Dart>(d);
    }

    size_t n_darts() const { return a0.size(); }
    Dart alpha(int i, Dart d) const { return i == 0 ? a0[d] : (i == 1 ? a1[d] : a2[d]); }

    void set0(Dart d, Dart e) { a0[d] = e; a0[e] = d; }
    void set1(Dart d, Dart e) { a1[d] = e; a1[e] = d; }
    void set2(Dart d, Dart e) { a2[d] = e; a2[e] = d; }

    bool operator==(const GMap2&) const = default;
};

/// A cubication is a GMap2 that passes validate(): all faces are squares.
using QuadGMap = GMap2;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
    std::string to_string() const;
};

/// Generalized-map axioms: involutions, a0/a1 fixed-point free, a0∘a2 an
/// involution, no edge folded onto itself (a2(d) != a0(d)).
ValidationReport validate_gmap(const GMap2& g);

/// Cubication validity: validate_gmap plus every face orbit has 8 darts.
ValidationReport validate(const GMap2& g);

bool is_connected(const GMap2& g);

/// Orbit ids for a generator subset of {a0,a1,a2}; `use[i]` selects alpha_i.
/// Ids are assigned in order of each orbit's smallest dart.
std::vector<int> orbit_ids(const GMap2& g, const std::array<bool, 3>& use, int* count = nullptr);

/// Cached cell indexing of a valid complex. Cell k of each dimension is
/// the k-th orbit ordered by smallest dart.
struct CellIndex {
    int V = 0, E = 0, F = 0;
    std::vector<int> vertex_of, edge_of, face_of;  // per dart
    std::vector<Dart> vertex_rep, edge_rep, face_rep;
    std::vector<uint8_t> edge_on_boundary;    // per edge
    std::vector<uint8_t> vertex_on_boundary;  // per vertex
};

CellIndex cell_index(const GMap2& g);

/// (V, E, F) orbit counts.
std::array<int, 3> cell_counts(const GMap2& g);

GMap2 relabel(const GMap2& g, const std::vector<Dart>& perm);

/// Interior edges of a cycle given as an edge-id set; true when every
/// vertex meets the set an even number of times.
bool is_mod2_cycle(const GMap2& g, const CellIndex& cells, const std::vector<int>& edge_set);

}  // namespace cubix
