#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sunflower/combinatorics.hpp"
#include "sunflower/hypergraph.hpp"

namespace sunflower {

enum class TuranStatus { exact, lower_bound_only, budget_exhausted };

std::string to_string(TuranStatus status);

struct TuranResult {
    int n = 0, r = 0, t = 0;
    std::size_t k = 0;
    std::optional<std::size_t> exact_max;
    Hypergraph lower_witness;  // S(r,t,k)-free, |edges| = best known lower bound
    TuranStatus status = TuranStatus::exact;
    std::uint64_t nodes = 0;
};

struct TuranOptions {
    std::uint64_t node_budget = 50'000'000;
    /// Largest C(n,r) handled by exact search.
    std::uint64_t ceiling = 28;
    std::uint64_t seed = 0;  // greedy fallback only
};

/// Branch and bound over subsets of the C(n,r) candidate edges in colex
/// order, with the first edge fixed to {1..r}. Adding an edge only checks
/// kernels inside it. Throws InvalidArgument when C(n,r) exceeds the ceiling
/// or n > 64; a spent budget returns the best set found so far.
TuranResult exact_turan(int n, int r, int t, std::size_t k, const TuranOptions& options = {});

/// Adds candidate edges in seeded random order, skipping any that would
/// complete a copy of S(r,t,k). Free by construction; n <= 64.
Hypergraph greedy_lower(int n, int r, int t, std::size_t k, std::uint64_t seed);

/// Exact search when within the ceiling, otherwise the best of greedy and
/// the constructions that apply, reported as lower-bound-only.
TuranResult estimate_turan(int n, int r, int t, std::size_t k, const TuranOptions& options = {});

enum class BoundRegime { small_kernel, large_kernel };

std::string to_string(BoundRegime regime);

struct BoundEnvelope {
    BoundRegime regime = BoundRegime::small_kernel;
    bool balanced = false;    // r = 2t+1, where both formulas agree
    BigInt value;             // formula of the applicable regime
    BigInt small_formula;     // n^{r-t-1} k^{t+1}
    BigInt large_formula;     // n^t k^{r-t}
};

/// n^{r-t-1} k^{t+1} when 2t+1 <= r, else n^t k^{r-t}. Constants are not
/// modelled; callers report count / value as a ratio.
BoundEnvelope bound_envelope(int n, int r, int t, std::size_t k);

}  // namespace sunflower
