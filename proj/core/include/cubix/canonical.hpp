#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubix/gmap.hpp"

namespace cubix {

/// Relabeling-invariant byte string identifying a connected complex up to
/// isomorphism: the lexicographically least breadth-first transcript over
/// all start darts, visiting a0, a1, a2 in that order.
/// Throws std::invalid_argument on a disconnected complex.
std::string canonical_code(const GMap2& g);

/// Same transcript with one extra user byte per dart folded in (used by the
/// enumerator to distinguish open sides from finalized boundary).
std::string canonical_code_flagged(const GMap2& g, const std::vector<uint8_t>& flag);

/// Rebuild the canonical representative from its code.
GMap2 decode_canonical(const std::string& code);

inline bool is_isomorphic(const GMap2& g, const GMap2& h) {
    if (g.n_darts() != h.n_darts()) return false;
    return canonical_code(g) == canonical_code(h);
}

/// Extend `m(root) = anchor` to a full involution-commuting bijection, or
/// nullopt when none exists. Both maps must be connected.
std::optional<std::vector<Dart>> extend_isomorphism(const GMap2& g, const GMap2& h, Dart anchor);

}  // namespace cubix
