#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bits.hpp"

namespace sunflower::detail {

/// Greedy maximal disjoint collection over `cand` (indices into `edges`) in the
/// given order; returns its size and the union of its vertices.
template <class Mask>
std::size_t greedy_disjoint(std::span<const Mask> edges, std::span<const std::uint32_t> cand,
                            Mask& used, std::size_t stop_at) {
    std::size_t taken = 0;
    for (auto i : cand) {
        if (!intersects(used, edges[i])) {
            unite_into(used, edges[i]);
            if (++taken >= stop_at) break;
        }
    }
    return taken;
}

/// Exact maximum matching by branch and bound. Edges are branched on in their
/// given order (include-first), so the first matching of the best size found
/// is the lexicographically least one by index sequence. The bound combines
/// the greedy cover (every matching edge meets the g*u cover vertices, and
/// disjoint edges meet distinct ones) with a vertex-count bound.
template <class Mask>
class MatchingSearch {
public:
    MatchingSearch(std::span<const Mask> edges, int uniformity, std::size_t goal)
        : edges_(edges), u_(uniformity), goal_(goal) {}

    std::vector<std::uint32_t> run() {
        best_.clear();
        current_.clear();
        nodes_ = 0;
        if (edges_.empty() || goal_ == 0) return best_;
        if (u_ == 0) {
            // only the empty edge exists; it is disjoint from nothing but itself
            best_.push_back(0);
            return best_;
        }
        std::vector<std::uint32_t> cand(edges_.size());
        for (std::uint32_t i = 0; i < cand.size(); ++i) cand[i] = i;
        dfs(cand);
        return best_;
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::size_t upper_bound(std::span<const std::uint32_t> cand) const {
        Mask used{};
        const std::size_t g = greedy_disjoint(edges_, cand, used, cand.size());
        Mask all{};
        for (auto i : cand) unite_into(all, edges_[i]);
        const std::size_t by_vertices = static_cast<std::size_t>(popcount(all)) / static_cast<std::size_t>(u_);
        return std::min({cand.size(), g * static_cast<std::size_t>(u_), by_vertices});
    }

    bool done() const { return best_.size() >= goal_; }

    void dfs(const std::vector<std::uint32_t>& cand) {
        ++nodes_;
        if (current_.size() > best_.size()) best_ = current_;
        if (done() || cand.empty()) return;
        if (current_.size() + upper_bound(cand) <= best_.size()) return;
        std::vector<std::uint32_t> next;
        next.reserve(cand.size());
        for (std::size_t a = 0; a < cand.size(); ++a) {
            // remaining suffix cannot beat the incumbent
            if (current_.size() + (cand.size() - a) <= best_.size()) return;
            const auto i = cand[a];
            next.clear();
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                if (!intersects(edges_[i], edges_[cand[b]])) next.push_back(cand[b]);
            }
            current_.push_back(i);
            dfs(next);
            current_.pop_back();
            if (done()) return;
        }
    }

    std::span<const Mask> edges_;
    int u_;
    std::size_t goal_;
    std::vector<std::uint32_t> best_;
    std::vector<std::uint32_t> current_;
    std::uint64_t nodes_ = 0;
};

inline constexpr std::size_t kNoGoal = std::numeric_limits<std::size_t>::max();

}  // namespace sunflower::detail
