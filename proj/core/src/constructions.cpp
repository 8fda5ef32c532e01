#include "sunflower/constructions.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sunflower/errors.hpp"
#include "sunflower/rng.hpp"

namespace sunflower {

namespace {

void require(bool cond, const std::string& inequality) {
    if (!cond) throw InvalidArgument("parameter constraint violated: " + inequality);
}

std::string params(int n, int r, int t, std::size_t k) {
    return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ", t=" + std::to_string(t) +
           ", k=" + std::to_string(k) + ")";
}

/// Membership bitmap over {1..n} for one stage vertex set.
class StageMembership {
public:
    StageMembership(int n, const VertexSet& vs) : words_((static_cast<std::size_t>(n) + 63) / 64) {
        for (Vertex v : vs) words_[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    }
    [[nodiscard]] bool has(Vertex v) const {
        return (words_[(v - 1) / 64] >> ((v - 1) % 64)) & 1U;
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace

int small_kernel_b_size(int t, std::size_t k) {
    return std::max(static_cast<int>(k) - 1, t + 1);
}

Hypergraph small_kernel(int n, int r, int t, std::size_t k) {
    require(t >= 0, "t >= 0 " + params(n, r, t, k));
    require(r >= 2 * t + 1, "r >= 2t+1 " + params(n, r, t, k));
    require(k >= 2, "k >= 2 " + params(n, r, t, k));
    const int s = small_kernel_b_size(t, k);
    require(n >= s + (r - t - 1), "n >= s + (r-t-1) with s = max(k-1, t+1) " + params(n, r, t, k));

    const VertexSet a = VertexSet::range(1, n - s);
    const VertexSet b = VertexSet::range(n - s + 1, n);
    const auto a_parts = subsets_of_size(a, static_cast<std::size_t>(r - t - 1));
    const auto b_parts = subsets_of_size(b, static_cast<std::size_t>(t + 1));
    std::vector<VertexSet> edges;
    edges.reserve(a_parts.size() * b_parts.size());
    for (const auto& pa : a_parts) {
        for (const auto& pb : b_parts) {
            // every A id precedes every B id, so concatenation stays sorted
            std::vector<Vertex> e(pa.begin(), pa.end());
            e.insert(e.end(), pb.begin(), pb.end());
            edges.push_back(VertexSet::from_sorted(std::move(e)));
        }
    }
    return make_canonical(n, r, std::move(edges));
}

BigInt small_kernel_edge_count(int n, int r, int t, std::size_t k) {
    const int s = small_kernel_b_size(t, k);
    return binomial(n - s, r - t - 1) * binomial(s, t + 1);
}

int stage_budget(int r, int t, std::size_t k) {
    return (r - t) * static_cast<int>(k) + t - 1;
}

std::optional<std::uint64_t> stage_count(int n, int r, int t, std::size_t k) {
    if (t == 0) return std::nullopt;
    require(t > 0 && r > t && n > 0 && k >= 1, "0 <= t < r, n >= 1, k >= 1 " + params(n, r, t, k));
    const int s = stage_budget(r, t, k);
    const BigInt numer = power(BigInt(n), static_cast<unsigned>(t));
    const BigInt denom = 2 * binomial(r, t) * power(BigInt(s), static_cast<unsigned>(t));
    const BigInt q = numer / denom;
    if (q > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    return q.convert_to<std::uint64_t>();
}

LargeKernelResult large_kernel(int n, int r, int t, std::size_t k, std::uint64_t seed,
                               const LargeKernelOptions& options) {
    require(t >= 0 && r > t, "r > t >= 0 " + params(n, r, t, k));
    require(2 * t >= r, "2t >= r " + params(n, r, t, k));
    require(k >= 2, "k >= 2 " + params(n, r, t, k));
    require(static_cast<long long>(k) * r * r <= n, "k <= n / r^2 " + params(n, r, t, k));
    require(options.retry_cap >= 1, "retry_cap >= 1");

    LargeKernelResult result;
    result.plan.s = stage_budget(r, t, k);
    result.plan.seed = seed;
    result.plan.retry_cap = options.retry_cap;
    // t >= 1 here, so the count is finite
    result.plan.stages = *stage_count(n, r, t, k);
    if (options.max_stages) result.plan.stages = std::min(result.plan.stages, *options.max_stages);
    SUNFLOWER_ENSURE(result.plan.stages >= 1, "stage count below one " + params(n, r, t, k));

    const int s = result.plan.s;
    const std::uint64_t tuples = binomial_u64(s, r);
    const std::uint64_t threshold = (tuples + 3) / 4;

    Rng rng(seed);
    std::vector<StageMembership> earlier;
    std::vector<std::pair<VertexSet, std::uint32_t>> all_edges;
    std::vector<Vertex> positions(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) positions[static_cast<std::size_t>(i)] = i;

    for (std::uint64_t stage = 0; stage < result.plan.stages; ++stage) {
        StageRecord record;
        std::vector<VertexSet> kept;
        bool accepted = false;
        for (unsigned attempt = 1; attempt <= options.retry_cap && !accepted; ++attempt) {
            record.attempts = attempt;
            record.samples.assign(static_cast<std::size_t>(s), 0);
            for (auto& v : record.samples) v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))) + 1;
            kept.clear();
            for_each_combination(positions, static_cast<std::size_t>(r), [&](std::span<const Vertex> pos) {
                std::vector<Vertex> tuple;
                tuple.reserve(pos.size());
                for (Vertex p : pos) tuple.push_back(record.samples[static_cast<std::size_t>(p)]);
                std::sort(tuple.begin(), tuple.end());
                if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) return;
                for (const auto& vj : earlier) {
                    int inside = 0;
                    for (Vertex v : tuple) inside += vj.has(v) ? 1 : 0;
                    if (inside > t - 1) return;
                }
                kept.push_back(VertexSet::from_sorted(std::move(tuple)));
            });
            std::sort(kept.begin(), kept.end());
            kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
            accepted = kept.size() >= threshold;
        }
        if (!accepted) {
            throw BudgetExhausted("large-kernel stage " + std::to_string(stage + 1) + " of " +
                                  std::to_string(result.plan.stages) + " found no acceptable sample in " +
                                  std::to_string(options.retry_cap) + " attempts");
        }
        auto distinct = record.samples;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        record.vertices = VertexSet::from_sorted(std::move(distinct));
        record.qualifying = kept.size();
        earlier.emplace_back(n, record.vertices);
        for (auto& e : kept) all_edges.emplace_back(std::move(e), static_cast<std::uint32_t>(stage));
        result.stages.push_back(std::move(record));
    }

    std::sort(all_edges.begin(), all_edges.end());
    // a repeat across stages would meet an earlier stage set in r > t-1 vertices
    const auto dup = std::adjacent_find(all_edges.begin(), all_edges.end(),
                                        [](const auto& a, const auto& b) { return a.first == b.first; });
    SUNFLOWER_ENSURE(dup == all_edges.end(), "large-kernel produced a cross-stage duplicate");

    std::vector<VertexSet> edges;
    edges.reserve(all_edges.size());
    for (auto& [e, stage] : all_edges) {
        edges.push_back(std::move(e));
        result.stage_of_edge.push_back(stage);
    }
    result.graph = make_canonical(n, r, std::move(edges));
    SUNFLOWER_ENSURE(max_cross_stage_intersection(result) + 1 <= static_cast<std::size_t>(t),
                     "cross-stage intersection exceeds t-1");
    return result;
}

std::size_t max_cross_stage_intersection(const LargeKernelResult& result) {
    const auto edges = result.graph.edges();
    std::size_t worst = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (result.stage_of_edge[i] == result.stage_of_edge[j]) continue;
            worst = std::max(worst, edges[i].intersect(edges[j]).size());
        }
    }
    return worst;
}

Hypergraph clique_bound(int n, int r, int t, std::size_t k) {
    require(k >= 2, "k >= 2");
    require(r > t && t >= 0, "r > t >= 0");
    require(n >= r, "n >= r");
    const long long order = static_cast<long long>(t) + static_cast<long long>(k) * (r - t) - 1;
    const int m = static_cast<int>(std::min<long long>(n, order));
    return complete_on_prefix(n, m, r);
}

}  // namespace sunflower
