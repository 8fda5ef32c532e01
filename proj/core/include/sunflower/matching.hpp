#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "sunflower/hypergraph.hpp"

namespace sunflower {

enum class DichotomyBranch {
    matching,
    cover,
    /// the link is {∅} and k >= 2: no vertex set can meet the empty edge
    uncoverable_degenerate,
};

/// Outcome of growing a maximal disjoint edge collection: either k disjoint
/// edges, or the union of the collection's vertices, which meets every edge.
struct MatchingOrCover {
    DichotomyBranch branch = DichotomyBranch::cover;
    std::vector<VertexSet> matching;
    VertexSet cover;

    [[nodiscard]] bool is_matching() const noexcept { return branch == DichotomyBranch::matching; }
    [[nodiscard]] bool is_cover() const noexcept { return branch == DichotomyBranch::cover; }
};

/// Greedy in canonical edge order. Requires k >= 1.
MatchingOrCover greedy_matching_or_cover(const Hypergraph& link, std::size_t k);

/// Checks the returned object against its own invariant: a matching branch
/// holds k pairwise-disjoint edges of `link`; a cover branch meets every edge
/// and has at most (k-1)·u vertices.
bool dichotomy_is_sound(const Hypergraph& link, std::size_t k, const MatchingOrCover& result);

struct MatchingResult {
    std::vector<VertexSet> edges;
    std::vector<std::size_t> indices;  // positions in link.edges()
    std::uint64_t nodes = 0;

    [[nodiscard]] std::size_t size() const noexcept { return edges.size(); }
};

inline constexpr std::size_t kMaximum = std::numeric_limits<std::size_t>::max();

/// Exact maximum matching, stopping early once `goal` disjoint edges are found.
/// The returned matching is the lexicographically least one of its size.
MatchingResult max_matching_exact(const Hypergraph& link, std::size_t goal = kMaximum);

}  // namespace sunflower
