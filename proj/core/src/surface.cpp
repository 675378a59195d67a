#include "cubix/surface.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cubix {

std::string SurfaceClass::name() const {
    if (orientable) {
        if (boundary_count == 0) {
            if (genus == 0) return "sphere";
            if (genus == 1) return "torus";
            return "genus" + std::to_string(genus);
        }
        if (genus == 0 && boundary_count == 1) return "disk";
        if (genus == 0 && boundary_count == 2) return "annulus";
        return "genus" + std::to_string(genus) + "+b" + std::to_string(boundary_count);
    }
    if (boundary_count == 0) {
        if (genus == 1) return "rp2";
        if (genus == 2) return "klein";
        return "nonorientable" + std::to_string(genus);
    }
    if (genus == 1 && boundary_count == 1) return "moebius";
    return "nonorientable" + std::to_string(genus) + "+b" + std::to_string(boundary_count);
}

int BoundarySignature::total_edges() const {
    return std::accumulate(polygon_sizes.begin(), polygon_sizes.end(), 0);
}

std::string BoundarySignature::to_string() const {
    if (polygon_sizes.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < polygon_sizes.size(); ++i) {
        if (i) os << ",";
        os << polygon_sizes[i];
    }
    return os.str();
}

static bool two_colorable(const GMap2& g) {
    size_t n = g.n_darts();
    std::vector<int> color(n, -1);
    std::vector<Dart> stack;
    for (size_t s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(static_cast<Dart>(s));
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                Dart e = g.alpha(i, d);
                if (e == d) continue;  // boundary darts are unconstrained
                if (color[e] < 0) {
                    color[e] = 1 - color[d];
                    stack.push_back(e);
                } else if (color[e] == color[d]) {
                    return false;
                }
            }
        }
    }
    return true;
}

BoundarySignature boundary_signature(const GMap2& g) {
    BoundarySignature sig;
    size_t n = g.n_darts();
    std::vector<uint8_t> visited(n, 0);
    for (size_t s = 0; s < n; ++s) {
        Dart start = static_cast<Dart>(s);
        if (visited[s] || g.a2[start] != start) continue;
        // walk one boundary polygon; each step covers one boundary edge
        int edges = 0;
        Dart d = start;
        do {
            visited[d] = 1;
            visited[g.a0[d]] = 1;
            ++edges;
            // pivot around the far vertex to the next boundary dart
            Dart e = g.a1[g.a0[d]];
            while (g.a2[e] != e) e = g.a1[g.a2[e]];
            d = e;
        } while (d != start);
        sig.polygon_sizes.push_back(edges);
    }
    std::sort(sig.polygon_sizes.begin(), sig.polygon_sizes.end());
    return sig;
}

SurfaceClass classify_surface(const GMap2& g) {
    if (!is_connected(g)) throw std::invalid_argument("classify_surface: complex is disconnected");
    auto [v, e, f] = cell_counts(g);
    SurfaceClass s;
    s.euler = v - e + f;
    s.orientable = two_colorable(g);
    s.boundary_count = static_cast<int>(boundary_signature(g).polygon_sizes.size());
    if (s.orientable)
        s.genus = (2 - s.euler - s.boundary_count) / 2;
    else
        s.genus = 2 - s.euler - s.boundary_count;
    return s;
}

SurfaceClass surface_by_name(const std::string& name) {
    SurfaceClass s;
    auto set = [&](int chi, bool ori, int b, int gen) {
        s.euler = chi;
        s.orientable = ori;
        s.boundary_count = b;
        s.genus = gen;
    };
    if (name == "sphere") set(2, true, 0, 0);
    else if (name == "torus") set(0, true, 0, 1);
    else if (name == "disk") set(1, true, 1, 0);
    else if (name == "annulus") set(0, true, 2, 0);
    else if (name == "rp2") set(1, false, 0, 1);
    else if (name == "klein") set(0, false, 0, 2);
    else if (name == "moebius") set(0, false, 1, 1);
    else if (name.rfind("genus", 0) == 0) {
        int gen = std::stoi(name.substr(5));
        set(2 - 2 * gen, true, 0, gen);
    } else if (name.rfind("nonorientable", 0) == 0) {
        int gen = std::stoi(name.substr(13));
        set(2 - gen, false, 0, gen);
    } else {
        throw std::invalid_argument("unknown surface name: " + name);
    }
    return s;
}

}  // namespace cubix
