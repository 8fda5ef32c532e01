#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sunflower/vertex_set.hpp"

namespace sunflower {

/// A family of subsets of {1..N}. Members are kept duplicate-free and sorted
/// by (size, lexicographic).
class SetSystem {
public:
    SetSystem() = default;
    /// Throws InvalidArgument on out-of-range members; duplicates collapse.
    SetSystem(int N, std::vector<VertexSet> family);

    [[nodiscard]] int ground_size() const noexcept { return N_; }
    [[nodiscard]] const std::vector<VertexSet>& family() const noexcept { return family_; }
    [[nodiscard]] std::size_t size() const noexcept { return family_.size(); }
    [[nodiscard]] bool contains(const VertexSet& s) const;

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
    int N_ = 0;
    std::vector<VertexSet> family_;
};

/// Closes a family under pairwise intersection.
SetSystem intersection_closure(const SetSystem& sys);

enum class SystemViolation {
    none,
    not_intersection_closed,  // witness pair A, B with A ∩ B missing
    uncovered_t_set,          // witness: the lexicographically least uncovered t-set
    member_size_residue,      // witness: a member with |A| ≡ N (mod t+1)
};

struct SystemCheck {
    SystemViolation violation = SystemViolation::none;
    VertexSet first;   // A, the uncovered t-set, or the offending member
    VertexSet second;  // B for closure violations

    [[nodiscard]] bool ok() const noexcept { return violation == SystemViolation::none; }
};

/// Checks, in order: intersection closure, t-set coverage, the size residue
/// |A| ≢ N (mod t+1). Reports the first violation found.
SystemCheck is_system(const SetSystem& sys, int t);

bool is_intersection_closed(const SetSystem& sys);
bool covers_all_t_sets(const SetSystem& sys, int t);

enum class SearchStatus { sat, unsat, budget_exhausted };

struct SystemSearchResult {
    SearchStatus status = SearchStatus::unsat;
    std::optional<SetSystem> system;  // set when status == sat
    std::uint64_t nodes = 0;
};

/// Complete search for a (t+1,t)-system on {1..N}. Branches on the
/// lexicographically least uncovered t-set, trying allowed supersets in
/// size-ascending order; each decision is closed under intersection to a
/// fixed point and pruned when a forced member has a forbidden size or was
/// already refuted by an earlier sibling. Requires t >= 1, t <= N <= 20.
SystemSearchResult search_system(int t, int N, std::uint64_t node_budget);

inline constexpr std::uint64_t kDefaultSystemBudget = 20'000'000;

}  // namespace sunflower
