#pragma once

#include <string>
#include <vector>

#include "cubix/gmap.hpp"

namespace cubix {

/// Homeomorphism type of a compact connected surface.
/// orientable: chi = 2 - 2*genus - boundary_count
/// non-orientable: chi = 2 - genus - boundary_count (genus = crosscap number)
struct SurfaceClass {
    int euler = 2;
    bool orientable = true;
    int boundary_count = 0;
    int genus = 0;

    std::string name() const;
    bool operator==(const SurfaceClass&) const = default;
};

/// Combinatorial type of the boundary cubication: one polygon per boundary
/// component, determined by its edge count. Stored as a sorted multiset.
struct BoundarySignature {
    std::vector<int> polygon_sizes;  // sorted ascending

    bool empty() const { return polygon_sizes.empty(); }
    int total_edges() const;
    std::string to_string() const;  // e.g. "4,8" or "-" when closed
    bool operator==(const BoundarySignature&) const = default;
};

/// Throws std::invalid_argument on a disconnected complex.
SurfaceClass classify_surface(const GMap2& g);

BoundarySignature boundary_signature(const GMap2& g);

/// Parse a surface name ("sphere", "torus", "disk", "annulus", "moebius",
/// "klein", "rp2", "genus2", "nonorientable3", ...) into a closed-form class
/// with the given boundary count where applicable.
SurfaceClass surface_by_name(const std::string& name);

}  // namespace cubix
