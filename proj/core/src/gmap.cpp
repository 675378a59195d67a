#include "cubix/gmap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubix {

std::string ValidationReport::to_string() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i];
    }
    return os.str();
}

static bool in_range(const std::vector<Dart>& a, size_t n) {
    for (Dart v : a)
        if (v >= n) return false;
    return true;
}

ValidationReport validate_gmap(const GMap2& g) {
    ValidationReport r;
    size_t n = g.n_darts();
    if (g.a1.size() != n || g.a2.size() != n) {
        r.fail("involution arrays disagree on length");
        return r;
    }
    if (!in_range(g.a0, n) || !in_range(g.a1, n) || !in_range(g.a2, n)) {
        r.fail("dart index out of range");
        return r;
    }
    for (size_t d = 0; d < n; ++d) {
        if (g.a0[g.a0[d]] != d) r.fail("a0 not an involution at dart " + std::to_string(d));
        if (g.a1[g.a1[d]] != d) r.fail("a1 not an involution at dart " + std::to_string(d));
        if (g.a2[g.a2[d]] != d) r.fail("a2 not an involution at dart " + std::to_string(d));
        if (!r.ok) return r;
    }
    for (size_t d = 0; d < n; ++d) {
        if (g.a0[d] == d) r.fail("a0 not fixed-point-free at dart " + std::to_string(d));
        if (g.a1[d] == d) r.fail("a1 not fixed-point-free at dart " + std::to_string(d));
        if (g.a2[d] == g.a0[d]) r.fail("edge folded onto itself at dart " + std::to_string(d));
    }
    for (size_t d = 0; d < n && r.ok; ++d) {
        Dart x = g.a0[g.a2[g.a0[g.a2[d]]]];
        if (x != d) r.fail("a0∘a2 not an involution at dart " + std::to_string(d));
    }
    return r;
}

ValidationReport validate(const GMap2& g) {
    ValidationReport r = validate_gmap(g);
    if (!r.ok) return r;
    size_t n = g.n_darts();
    std::vector<uint8_t> seen(n, 0);
    for (size_t d = 0; d < n; ++d) {
        if (seen[d]) continue;
        // walk the face orbit: alternate a0, a1
        size_t len = 0;
        Dart cur = static_cast<Dart>(d);
        do {
            seen[cur] = 1;
            seen[g.a0[cur]] = 1;
            cur = g.a1[g.a0[cur]];
            len += 2;
        } while (cur != d && len <= n);
        if (len != 8) r.fail("non-quad face at dart " + std::to_string(d) + " (orbit size " + std::to_string(len) + ")");
    }
    return r;
}

bool is_connected(const GMap2& g) {
    size_t n = g.n_darts();
    if (n == 0) return true;
    std::vector<uint8_t> seen(n, 0);
    std::vector<Dart> stack{0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (int i = 0; i < 3; ++i) {
            Dart e = g.alpha(i, d);
            if (!seen[e]) {
                seen[e] = 1;
                ++cnt;
                stack.push_back(e);
            }
        }
    }
    return cnt == n;
}

std::vector<int> orbit_ids(const GMap2& g, const std::array<bool, 3>& use, int* count) {
    size_t n = g.n_darts();
    std::vector<int> id(n, -1);
    int next = 0;
    std::vector<Dart> stack;
    for (size_t s = 0; s < n; ++s) {
        if (id[s] >= 0) continue;
        id[s] = next;
        stack.push_back(static_cast<Dart>(s));
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                if (!use[i]) continue;
                Dart e = g.alpha(i, d);
                if (id[e] < 0) {
                    id[e] = next;
                    stack.push_back(e);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return id;
}

CellIndex cell_index(const GMap2& g) {
    CellIndex c;
    c.vertex_of = orbit_ids(g, {false, true, true}, &c.V);
    c.edge_of = orbit_ids(g, {true, false, true}, &c.E);
    c.face_of = orbit_ids(g, {true, true, false}, &c.F);
    c.vertex_rep.assign(c.V, kNoDart);
    c.edge_rep.assign(c.E, kNoDart);
    c.face_rep.assign(c.F, kNoDart);
    c.edge_on_boundary.assign(c.E, 0);
    c.vertex_on_boundary.assign(c.V, 0);
    for (size_t d = 0; d < g.n_darts(); ++d) {
        Dart dd = static_cast<Dart>(d);
        if (c.vertex_rep[c.vertex_of[d]] == kNoDart) c.vertex_rep[c.vertex_of[d]] = dd;
        if (c.edge_rep[c.edge_of[d]] == kNoDart) c.edge_rep[c.edge_of[d]] = dd;
        if (c.face_rep[c.face_of[d]] == kNoDart) c.face_rep[c.face_of[d]] = dd;
        if (g.a2[d] == dd) {
            c.edge_on_boundary[c.edge_of[d]] = 1;
            c.vertex_on_boundary[c.vertex_of[d]] = 1;
        }
    }
    return c;
}

std::array<int, 3> cell_counts(const GMap2& g) {
    int v = 0, e = 0, f = 0;
    orbit_ids(g, {false, true, true}, &v);
    orbit_ids(g, {true, false, true}, &e);
    orbit_ids(g, {true, true, false}, &f);
    return {v, e, f};
}

GMap2 relabel(const GMap2& g, const std::vector<Dart>& perm) {
    size_t n = g.n_darts();
    if (perm.size() != n) throw std::invalid_argument("relabel: permutation length mismatch");
    GMap2 h(n);
    for (size_t d = 0; d < n; ++d) {
        h.a0[perm[d]] = perm[g.a0[d]];
        h.a1[perm[d]] = perm[g.a1[d]];
        h.a2[perm[d]] = perm[g.a2[d]];
    }
    return h;
}

bool is_mod2_cycle(const GMap2& g, const CellIndex& cells, const std::vector<int>& edge_set) {
    // Incidence of edge e at vertex v, counted with multiplicity: number of
    // a2-orbit ends of e lying at v. Loop edges contribute 2 at one vertex.
    std::vector<int> inc(cells.V, 0);
    std::vector<uint8_t> in_set(cells.E, 0);
    for (int e : edge_set) {
        if (e < 0 || e >= cells.E) return false;
        in_set[e] = 1;
    }
    std::vector<uint8_t> dart_done(g.n_darts(), 0);
    for (size_t d = 0; d < g.n_darts(); ++d) {
        if (dart_done[d]) continue;
        // one "end" of an edge = one a2-orbit {d, a2 d} of its darts
        Dart dd = static_cast<Dart>(d);
        dart_done[dd] = 1;
        dart_done[g.a2[dd]] = 1;
        if (in_set[cells.edge_of[dd]]) inc[cells.vertex_of[dd]] += 1;
    }
    for (int v = 0; v < cells.V; ++v)
        if (inc[v] % 2 != 0) return false;
    return true;
}

}  // namespace cubix
