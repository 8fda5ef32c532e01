#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sunflower/combinatorics.hpp"
#include "sunflower/hypergraph.hpp"

namespace sunflower {

/// A copy of S(r,t,k): kernel of size t and k pairwise-disjoint petals of size
/// r-t, each disjoint from the kernel, such that kernel ∪ petal is an edge.
struct SunflowerWitness {
    VertexSet kernel;
    std::vector<VertexSet> petals;
    int t = 0;
    std::size_t k = 0;

    [[nodiscard]] std::vector<VertexSet> edges() const;
    friend bool operator==(const SunflowerWitness&, const SunflowerWitness&) = default;
};

/// Full check of the witness invariants against a host hypergraph.
bool is_valid_witness(const Hypergraph& h, const SunflowerWitness& w);

/// Exact detection. Kernels are drawn from t-subsets of edges and visited in
/// lexicographic order; for each, the petals are the lexicographically least
/// k-matching of the link. `nullopt` certifies S(r,t,k)-freeness. With more
/// than one thread the kernels are fanned out, and the result is still the
/// least successful kernel.
std::optional<SunflowerWitness> find_sunflower(const Hypergraph& h, int t, std::size_t k,
                                               unsigned threads = 1);

struct MultiFreeness {
    bool free = true;
    std::optional<SunflowerWitness> witness;  // first violation, kernel sizes ascending
};

/// Freeness from S(r,t,k) for every t in `kernel_sizes`.
MultiFreeness is_free_multi(const Hypergraph& h, std::span<const int> kernel_sizes, std::size_t k,
                            unsigned threads = 1);

struct LinkLevel {
    int set_size = 0;             // |S|
    std::size_t sets_checked = 0; // S with nonempty link
    std::size_t max_link = 0;     // max |L_S|
    BigInt link_bound;            // (rk)^(r-|S|)
    std::size_t max_cover = 0;    // largest greedy cover of L_S (|S| < r)
    std::size_t cover_bound = 0;  // (r-|S|)(k-1)
    std::size_t violations = 0;
};

/// Link-size recursion for hypergraphs avoiding S(r,s,k) for all ell <= s < r.
struct StarBoundReport {
    std::optional<SunflowerWitness> precondition_violation;
    std::vector<LinkLevel> levels;  // |S| = ell..r
    std::size_t edge_count = 0;
    BigInt total_bound;             // n^ell (rk)^(r-ell)
    bool holds = false;
};

StarBoundReport forbidden_star_edge_bound(const Hypergraph& h, int ell, std::size_t k,
                                          unsigned threads = 1);

}  // namespace sunflower
