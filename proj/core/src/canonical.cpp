#include "cubix/canonical.hpp"

#include <cstring>
#include <stdexcept>

namespace cubix {

namespace {

// Breadth-first labeling from start dart s; emits, per label in order, the
// labels of the three neighbors (plus an optional flag byte per dart).
// Returns false and leaves `best` untouched when the transcript would be
// lexicographically greater than `best`.
bool transcript_from(const GMap2& g, const std::vector<uint8_t>* flag, Dart s,
                     std::vector<uint32_t>& out, const std::vector<uint32_t>* best) {
    size_t n = g.n_darts();
    static thread_local std::vector<uint32_t> lab;
    static thread_local std::vector<Dart> order;
    lab.assign(n, UINT32_MAX);
    order.clear();
    order.reserve(n);
    lab[s] = 0;
    order.push_back(s);
    out.clear();
    size_t emitted = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        Dart d = order[i];
        for (int k = 0; k < 3; ++k) {
            Dart e = g.alpha(k, d);
            if (lab[e] == UINT32_MAX) {
                lab[e] = static_cast<uint32_t>(order.size());
                order.push_back(e);
            }
            out.push_back(lab[e]);
            if (best && emitted < best->size()) {
                if (out.back() > (*best)[emitted]) return false;
                if (out.back() < (*best)[emitted]) best = nullptr;  // now strictly smaller
            }
            ++emitted;
        }
        if (flag) {
            out.push_back((*flag)[d]);
            if (best && emitted < best->size()) {
                if (out.back() > (*best)[emitted]) return false;
                if (out.back() < (*best)[emitted]) best = nullptr;
            }
            ++emitted;
        }
    }
    if (order.size() != n) throw std::invalid_argument("canonical_code: complex is disconnected");
    return true;
}

std::string serialize(size_t n, const std::vector<uint32_t>& t) {
    std::string s;
    s.reserve(4 + 2 * t.size());
    auto put16 = [&s](uint32_t v) {
        s.push_back(static_cast<char>(v & 0xff));
        s.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put16(static_cast<uint32_t>(n));
    put16(static_cast<uint32_t>(t.size() / (n ? n : 1)));  // words per dart (3 or 4)
    for (uint32_t v : t) put16(v);
    return s;
}

std::string code_impl(const GMap2& g, const std::vector<uint8_t>* flag) {
    size_t n = g.n_darts();
    if (n == 0) return serialize(0, {});
    std::vector<uint32_t> best, cur;
    transcript_from(g, flag, 0, best, nullptr);
    for (size_t s = 1; s < n; ++s) {
        if (transcript_from(g, flag, static_cast<Dart>(s), cur, &best) && cur < best) best.swap(cur);
    }
    return serialize(n, best);
}

}  // namespace

std::string canonical_code(const GMap2& g) { return code_impl(g, nullptr); }

std::string canonical_code_flagged(const GMap2& g, const std::vector<uint8_t>& flag) {
    return code_impl(g, &flag);
}

GMap2 decode_canonical(const std::string& code) {
    auto get16 = [&code](size_t i) -> uint32_t {
        return static_cast<uint8_t>(code[2 * i]) | (static_cast<uint32_t>(static_cast<uint8_t>(code[2 * i + 1])) << 8);
    };
    if (code.size() < 4) throw std::invalid_argument("decode_canonical: truncated code");
    size_t n = get16(0);
    size_t words = get16(1);
    if (words < 3 || code.size() != 4 + 2 * words * n)
        throw std::invalid_argument("decode_canonical: malformed code");
    GMap2 g(n);
    for (size_t d = 0; d < n; ++d) {
        g.a0[d] = get16(2 + words * d + 0);
        g.a1[d] = get16(2 + words * d + 1);
        g.a2[d] = get16(2 + words * d + 2);
    }
    return g;
}

std::optional<std::vector<Dart>> extend_isomorphism(const GMap2& g, const GMap2& h, Dart anchor) {
    size_t n = g.n_darts();
    if (h.n_darts() != n) return std::nullopt;
    std::vector<Dart> m(n, kNoDart);
    std::vector<uint8_t> hit(n, 0);
    std::vector<Dart> stack;
    m[0] = anchor;
    if (hit[anchor]) return std::nullopt;
    hit[anchor] = 1;
    stack.push_back(0);
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (int k = 0; k < 3; ++k) {
            Dart e = g.alpha(k, d);
            Dart img = h.alpha(k, m[d]);
            if (m[e] == kNoDart) {
                if (hit[img]) return std::nullopt;
                m[e] = img;
                hit[img] = 1;
                stack.push_back(e);
            } else if (m[e] != img) {
                return std::nullopt;
            }
        }
    }
    for (Dart v : m)
        if (v == kNoDart) return std::nullopt;  // disconnected source
    return m;
}

}  // namespace cubix
