#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sunflower/vertex_set.hpp"

namespace sunflower {

/// An r-uniform hypergraph on {1..n}. Edges are kept sorted lexicographically
/// and duplicate-free; the value is immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Empty r-graph on n vertices; r > n is accepted and stays edgeless.
    Hypergraph(int n, int r);
    /// Validates arity and range, canonicalizes order, rejects duplicates.
    Hypergraph(int n, int r, std::vector<VertexSet> edges);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int r() const noexcept { return r_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] bool empty() const noexcept { return edges_.empty(); }
    [[nodiscard]] std::span<const VertexSet> edges() const noexcept { return edges_; }
    [[nodiscard]] const VertexSet& edge(std::size_t i) const { return edges_[i]; }
    [[nodiscard]] bool contains(const VertexSet& e) const noexcept;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    struct Canonical {};
    Hypergraph(Canonical, int n, int r, std::vector<VertexSet> edges);
    friend Hypergraph make_canonical(int n, int r, std::vector<VertexSet> edges);

    int n_ = 0;
    int r_ = 0;
    std::vector<VertexSet> edges_;
};

/// Skips validation; `edges` must already be sorted, distinct, r-sets in range.
Hypergraph make_canonical(int n, int r, std::vector<VertexSet> edges);

/// Every r-subset of {1..n}.
Hypergraph complete_hypergraph(int n, int r);

/// Complete r-graph on the first `m` vertices, hosted on {1..n}.
Hypergraph complete_on_prefix(int n, int m, int r);

/// The (r-|S|)-uniform graph {e \ S : S ⊆ e ∈ E(H)} on the same vertex set.
Hypergraph link_graph(const Hypergraph& h, const VertexSet& s);

/// Number of edges of H containing S, by direct scan.
std::size_t degree(const Hypergraph& h, const VertexSet& s);

/// Distinct t-subsets of edges of H, in lexicographic order.
std::vector<VertexSet> edge_subsets(const Hypergraph& h, std::size_t t);

}  // namespace sunflower
