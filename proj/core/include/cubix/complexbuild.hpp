#pragma once

#include <vector>

#include "cubix/gmap.hpp"

namespace cubix {

/// One side of a polygon walk: which edge label it traverses and whether
/// against the edge's own direction.
struct PolygonSide {
    int edge_label;
    bool reversed = false;
};

/// A complex assembled from polygon boundary walks. Each edge label must
/// appear in exactly one or two sides overall; single-use labels become
/// boundary edges. side_dart(f, i) is the walk-entry dart of side i of
/// polygon f; edge_orbit_of_label maps labels to edge ids of the result.
struct BuiltComplex {
    GMap2 map;
    std::vector<std::vector<Dart>> side_dart;
    std::vector<int> edge_of_label;  // indexed by edge label
};

/// Glues polygons along equal edge labels, matching walk directions
/// head-to-head and tail-to-tail. Throws std::invalid_argument when a
/// label is used more than twice or a slot would glue to itself.
BuiltComplex build_from_polygons(const std::vector<std::vector<PolygonSide>>& faces);

}  // namespace cubix
