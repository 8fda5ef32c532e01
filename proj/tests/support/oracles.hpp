#pragma once

// Brute-force reference implementations. Deliberately share no code with the
// library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sunflower/hypergraph.hpp"
#include "sunflower/vertex_set.hpp"

namespace oracle {

using sunflower::Hypergraph;
using sunflower::VertexSet;
using Mask = std::uint64_t;

inline Mask mask(const VertexSet& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << (v - 1);
    return m;
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline std::vector<Mask> masks(const Hypergraph& h) {
    std::vector<Mask> out;
    for (const auto& e : h.edges()) out.push_back(mask(e));
    return out;
}

/// Does some k-subset of edges have all pairwise intersections equal to one
/// t-set? Tries every k-subset.
inline bool has_sunflower(const std::vector<Mask>& edges, int t, std::size_t k) {
    const std::size_t m = edges.size();
    if (m < k) return false;
    std::vector<std::size_t> idx(k);
    std::vector<std::size_t> stack;
    bool found = false;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (found) return;
        if (stack.size() == k) {
            const Mask kernel = edges[stack[0]] & edges[stack[1]];
            if (popcount(kernel) != t) return;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b)
                    if ((edges[stack[a]] & edges[stack[b]]) != kernel) return;
            found = true;
            return;
        }
        for (std::size_t i = from; i < m; ++i) {
            stack.push_back(i);
            self(self, i + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

inline bool has_sunflower(const Hypergraph& h, int t, std::size_t k) { return has_sunflower(masks(h), t, k); }

/// Maximum matching size by trying all subsets (m <= ~16).
inline std::size_t max_matching(const std::vector<Mask>& edges) {
    const std::size_t m = edges.size();
    std::size_t best = 0;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
        Mask used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!((sub >> i) & 1U)) continue;
            if (used & edges[i]) ok = false;
            used |= edges[i];
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(popcount(sub)));
    }
    return best;
}

/// ex(n, S(r,t,k)) by enumerating edge subsets of the C(n,r) candidates.
/// Freeness is inherited by subsets, so a subset is only extended while it
/// stays free; every free subset is visited, with no symmetry reduction.
inline std::size_t naive_turan(int n, int r, int t, std::size_t k) {
    std::vector<Mask> all;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (popcount(m) == r) all.push_back(m);
    }
    std::size_t best = 0;
    std::vector<Mask> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        best = std::max(best, chosen.size());
        for (std::size_t i = from; i < all.size(); ++i) {
            chosen.push_back(all[i]);
            if (!has_sunflower(chosen, t, k)) self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

inline Hypergraph random_hypergraph(std::mt19937_64& gen, int n, int r, double density) {
    std::vector<VertexSet> edges;
    std::bernoulli_distribution keep(density);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (popcount(m) != r || !keep(gen)) continue;
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1U) v.push_back(i + 1);
        edges.emplace_back(v);
    }
    return Hypergraph(n, r, std::move(edges));
}

}  // namespace oracle
