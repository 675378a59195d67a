#pragma once

#include <string>
#include <vector>

#include "cubix/gmap.hpp"

namespace cubix {

/// A generated complex together with reference cycles: interior-edge cycles
/// forming (part of) a basis of the mod-2 first homology, by edge id.
struct Model {
    QuadGMap map;
    std::vector<std::vector<int>> reference_cycles;
};

Model cube_sphere();
Model pillow_sphere();
Model beak_sphere();                 // one square, adjacent sides folded together
Model grid_torus(int m, int n);
Model klein_grid(int m, int n);
Model rp2_min();                     // one square, antipodal boundary gluing
Model disk_grid(int m, int n);
Model annulus_grid(int m, int n);    // m columns around the core, n rows across
Model moebius_strip(int n);          // n columns, two rows, mirrored wrap

/// Catalog lookup by name with positional integer params.
Model standard_model(const std::string& name, const std::vector<int>& params);

std::vector<std::string> model_names();

}  // namespace cubix
