#pragma once

// Single-word subset masks over a small ground set {1..N}; element i is bit i-1.

#include <bit>
#include <cstdint>
#include <vector>

#include "sunflower/vertex_set.hpp"

namespace sunflower::detail {

using SetMask = std::uint64_t;

inline SetMask mask_of(const VertexSet& s) {
    SetMask m = 0;
    for (Vertex v : s) m |= SetMask{1} << (v - 1);
    return m;
}

inline VertexSet set_of(SetMask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return VertexSet::from_sorted(std::move(out));
}

inline int size_of(SetMask m) { return std::popcount(m); }

inline SetMask full_mask(int N) { return N >= 64 ? ~SetMask{0} : (SetMask{1} << N) - 1; }

/// All k-subsets of {1..N} as masks, in lexicographic order of their members.
inline std::vector<SetMask> k_subset_masks(int N, int k) {
    std::vector<SetMask> out;
    for (const auto& s : subsets_of_size(VertexSet::range(1, N), static_cast<std::size_t>(k))) {
        out.push_back(mask_of(s));
    }
    return out;
}

}  // namespace sunflower::detail
