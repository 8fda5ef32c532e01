#pragma once

// Fixed-width vertex bitsets used by the search kernels. Vertex v (1-based)
// occupies bit v-1. Hypergraphs wider than the word budget fall back to
// sorted VertexSets through the same free-function interface.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "sunflower/vertex_set.hpp"

#ifndef SUNFLOWER_MASK_WORDS
#define SUNFLOWER_MASK_WORDS 4
#endif

namespace sunflower::detail {

inline constexpr int kMaskWords = SUNFLOWER_MASK_WORDS;
inline constexpr int kMaskVertices = 64 * kMaskWords;

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    static Bits of(const VertexSet& s) {
        Bits b;
        for (Vertex v : s) b.set(v);
        return b;
    }
    void set(Vertex v) { w[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63); }
    [[nodiscard]] bool test(Vertex v) const { return (w[(v - 1) >> 6] >> ((v - 1) & 63)) & 1U; }
    friend bool operator==(const Bits&, const Bits&) = default;
};

template <int W>
inline bool intersects(const Bits<W>& a, const Bits<W>& b) {
    for (int i = 0; i < W; ++i)
        if (a.w[i] & b.w[i]) return true;
    return false;
}

template <int W>
inline void unite_into(Bits<W>& a, const Bits<W>& b) {
    for (int i = 0; i < W; ++i) a.w[i] |= b.w[i];
}

template <int W>
inline int popcount(const Bits<W>& a) {
    int c = 0;
    for (int i = 0; i < W; ++i) c += std::popcount(a.w[i]);
    return c;
}

template <int W>
inline bool empty(const Bits<W>& a) {
    for (int i = 0; i < W; ++i)
        if (a.w[i]) return false;
    return true;
}

/// Wide fallback: the sorted vertex list itself.
struct Wide {
    VertexSet s;
    static Wide of(const VertexSet& v) { return Wide{v}; }
};

inline bool intersects(const Wide& a, const Wide& b) { return !a.s.disjoint_from(b.s); }
inline void unite_into(Wide& a, const Wide& b) { a.s = a.s.unite(b.s); }
inline int popcount(const Wide& a) { return static_cast<int>(a.s.size()); }
inline bool empty(const Wide& a) { return a.s.empty(); }

/// Calls `f.template operator()<Mask>()` with the narrowest mask type able to
/// hold vertices {1..n}.
template <class F>
decltype(auto) dispatch_width(int n, F&& f) {
    if (n <= 64) return f.template operator()<Bits<1>>();
    if constexpr (kMaskWords >= 2) {
        if (n <= 128) return f.template operator()<Bits<2>>();
    }
    if constexpr (kMaskWords >= 4) {
        if (n <= 256) return f.template operator()<Bits<4>>();
    }
    if constexpr (kMaskWords >= 8) {
        if (n <= 512) return f.template operator()<Bits<8>>();
    }
    return f.template operator()<Wide>();
}

template <class Mask>
std::vector<Mask> to_masks(std::span<const VertexSet> sets) {
    std::vector<Mask> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(Mask::of(s));
    return out;
}

}  // namespace sunflower::detail
