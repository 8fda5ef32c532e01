#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sunflower/combinatorics.hpp"
#include "sunflower/hypergraph.hpp"

namespace sunflower {

// Lower-bound constructions of S(r,t,k)-free r-graphs.

/// B-part size max(k-1, t+1) of the small-kernel construction.
int small_kernel_b_size(int t, std::size_t k);

/// The vertex set splits into A = {1..n-s} and B = {n-s+1..n}; edges are the
/// r-sets with exactly r-t-1 vertices in A and t+1 in B.
/// Requires r >= 2t+1 >= 1, k >= 2 and n >= s + r - t - 1.
Hypergraph small_kernel(int n, int r, int t, std::size_t k);

/// C(n-s, r-t-1) * C(s, t+1).
BigInt small_kernel_edge_count(int n, int r, int t, std::size_t k);

/// Stage vertex budget (r-t)k + t - 1.
int stage_budget(int r, int t, std::size_t k);

/// Largest stage count for which the union bound
///   stages * C(r,t) * (s/n)^t <= 1/2
/// holds, i.e. floor(n^t / (2 C(r,t) s^t)). `nullopt` means unbounded (t = 0).
std::optional<std::uint64_t> stage_count(int n, int r, int t, std::size_t k);

struct StagePlan {
    int s = 0;
    std::uint64_t stages = 1;
    std::uint64_t seed = 0;
    unsigned retry_cap = 1000;
};

struct StageRecord {
    std::vector<Vertex> samples;  // the s draws, with repetition
    VertexSet vertices;           // V_i, distinct sampled vertices
    std::size_t qualifying = 0;   // distinct r-sets kept
    unsigned attempts = 0;
};

struct LargeKernelResult {
    Hypergraph graph;
    StagePlan plan;
    std::vector<StageRecord> stages;
    std::vector<std::uint32_t> stage_of_edge;  // parallel to graph.edges()
};

struct LargeKernelOptions {
    unsigned retry_cap = 1000;
    /// Caps the stage count below stage_count(); nullopt runs them all.
    std::optional<std::uint64_t> max_stages;
};

/// Multi-stage random construction for 2t >= r > t, k >= 2, k r^2 <= n.
/// Each stage draws s vertices with replacement, keeps every r-subset of the
/// draws whose vertices are distinct and meet each earlier stage set in at
/// most t-1 vertices, and is accepted once at least ceil(C(s,r)/4) distinct
/// r-sets survive. Throws BudgetExhausted naming the stage when retries run out.
LargeKernelResult large_kernel(int n, int r, int t, std::size_t k, std::uint64_t seed,
                               const LargeKernelOptions& options = {});

/// Largest |e ∩ f| over edges from different stages; post-hoc check.
std::size_t max_cross_stage_intersection(const LargeKernelResult& result);

/// Complete r-graph on min(n, t + k(r-t) - 1) vertices.
Hypergraph clique_bound(int n, int r, int t, std::size_t k);

}  // namespace sunflower
