#include "sunflower/turan.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "set_masks.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/rng.hpp"

namespace sunflower {

using detail::SetMask;

namespace {

constexpr std::uint64_t kMaxGreedyCandidates = std::uint64_t{1} << 22;

void check_parameters(int n, int r, int t, std::size_t k) {
    if (n < 0 || r < 0) throw InvalidArgument("n and r must be non-negative");
    if (t < 0 || t >= r) throw InvalidArgument("kernel size must satisfy 0 <= t < r");
    if (k < 2) throw InvalidArgument("k must be at least 2");
    if (n > 64) throw InvalidArgument("Turán search supports n <= 64");
}

std::vector<int> bits_of(SetMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// r-subsets of [n] as masks, ascending numerically, i.e. colex order.
std::vector<SetMask> colex_candidates(int n, int r) {
    std::vector<SetMask> out;
    for (const auto& s : subsets_of_size(VertexSet::range(1, n), static_cast<std::size_t>(r))) {
        out.push_back(detail::mask_of(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_disjoint(const std::vector<SetMask>& petals, std::size_t from, SetMask used, std::size_t need) {
    if (need == 0) return true;
    for (std::size_t i = from; i + need <= petals.size(); ++i) {
        if ((petals[i] & used) == 0 && has_disjoint(petals, i + 1, used | petals[i], need - 1)) return true;
    }
    return false;
}

/// A growing S(r,t,k)-free edge set.
class FreeEdges {
public:
    FreeEdges(int t, std::size_t k) : t_(t), k_(k) {}

    /// Whether e can join without completing a sunflower; any new copy uses e,
    /// so only kernels inside e are examined.
    [[nodiscard]] bool addable(SetMask e) const {
        const auto vertices = bits_of(e);
        std::vector<SetMask> petals;
        bool ok = true;
        for_each_combination(std::span<const int>(vertices), static_cast<std::size_t>(t_),
                             [&](std::span<const int> pick) {
                                 if (!ok) return;
                                 SetMask kernel = 0;
                                 for (int b : pick) kernel |= SetMask{1} << b;
                                 const SetMask rest = e & ~kernel;
                                 petals.clear();
                                 for (SetMask f : edges_) {
                                     if ((f & kernel) == kernel && (f & rest) == 0) petals.push_back(f & ~kernel);
                                 }
                                 if (petals.size() + 1 >= k_ && has_disjoint(petals, 0, 0, k_ - 1)) ok = false;
                             });
        return ok;
    }

    void push(SetMask e) { edges_.push_back(e); }
    void pop() { edges_.pop_back(); }
    [[nodiscard]] const std::vector<SetMask>& edges() const noexcept { return edges_; }

private:
    int t_;
    std::size_t k_;
    std::vector<SetMask> edges_;
};

Hypergraph to_hypergraph(int n, int r, const std::vector<SetMask>& masks) {
    std::vector<VertexSet> edges;
    edges.reserve(masks.size());
    for (SetMask m : masks) edges.push_back(detail::set_of(m));
    std::sort(edges.begin(), edges.end());
    return make_canonical(n, r, std::move(edges));
}

class TuranSearch {
public:
    TuranSearch(std::vector<SetMask> candidates, int t, std::size_t k, std::uint64_t budget)
        : candidates_(std::move(candidates)), current_(t, k), budget_(budget) {}

    void run() {
        if (candidates_.empty()) return;
        current_.push(candidates_.front());
        descend(1);
    }

    [[nodiscard]] const std::vector<SetMask>& best() const noexcept { return best_; }
    [[nodiscard]] bool exhausted() const noexcept { return exhausted_; }
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void descend(std::size_t from) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (current_.edges().size() > best_.size()) best_ = current_.edges();
        for (std::size_t j = from; j < candidates_.size() && !exhausted_; ++j) {
            if (current_.edges().size() + (candidates_.size() - j) <= best_.size()) return;
            if (!current_.addable(candidates_[j])) continue;
            current_.push(candidates_[j]);
            descend(j + 1);
            current_.pop();
        }
    }

    std::vector<SetMask> candidates_;
    FreeEdges current_;
    std::vector<SetMask> best_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

std::string to_string(TuranStatus status) {
    switch (status) {
        case TuranStatus::exact: return "exact";
        case TuranStatus::lower_bound_only: return "lower-bound-only";
        case TuranStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

std::string to_string(BoundRegime regime) {
    return regime == BoundRegime::small_kernel ? "small-kernel" : "large-kernel";
}

TuranResult exact_turan(int n, int r, int t, std::size_t k, const TuranOptions& options) {
    check_parameters(n, r, t, k);
    const BigInt candidates = binomial(n, r);
    if (candidates > options.ceiling) {
        throw InvalidArgument("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                              to_string(candidates) + " candidate edges exceed the exact-search ceiling " +
                              std::to_string(options.ceiling));
    }
    TuranSearch search(colex_candidates(n, r), t, k, options.node_budget);
    search.run();

    TuranResult out{n, r, t, k, std::nullopt, to_hypergraph(n, r, search.best()),
                    TuranStatus::exact, search.nodes()};
    if (search.exhausted()) out.status = TuranStatus::budget_exhausted;
    else out.exact_max = search.best().size();
    return out;
}

Hypergraph greedy_lower(int n, int r, int t, std::size_t k, std::uint64_t seed) {
    check_parameters(n, r, t, k);
    if (n < r) return Hypergraph(n, r);
    if (binomial(n, r) > kMaxGreedyCandidates) {
        throw InvalidArgument("greedy construction is limited to 2^22 candidate edges");
    }
    auto candidates = colex_candidates(n, r);
    Rng rng(seed);
    rng.shuffle(candidates.begin(), candidates.end());
    FreeEdges kept(t, k);
    for (SetMask e : candidates) {
        if (kept.addable(e)) kept.push(e);
    }
    return to_hypergraph(n, r, kept.edges());
}

TuranResult estimate_turan(int n, int r, int t, std::size_t k, const TuranOptions& options) {
    check_parameters(n, r, t, k);
    if (binomial(n, r) <= options.ceiling) return exact_turan(n, r, t, k, options);

    TuranResult out{n, r, t, k, std::nullopt, greedy_lower(n, r, t, k, options.seed),
                    TuranStatus::lower_bound_only, 0};
    auto consider = [&](auto&& build) {
        try {
            Hypergraph h = build();
            if (h.edge_count() > out.lower_witness.edge_count()) out.lower_witness = std::move(h);
        } catch (const InvalidArgument&) {
            // construction does not apply at these parameters
        } catch (const BudgetExhausted&) {
        }
    };
    consider([&] { return small_kernel(n, r, t, k); });
    consider([&] { return large_kernel(n, r, t, k, options.seed).graph; });
    consider([&] { return clique_bound(n, r, t, k); });
    return out;
}

BoundEnvelope bound_envelope(int n, int r, int t, std::size_t k) {
    if (n < 0) throw InvalidArgument("n must be non-negative");
    if (t < 0 || t >= r) throw InvalidArgument("kernel size must satisfy 0 <= t < r");
    if (k < 2) throw InvalidArgument("k must be at least 2");
    BoundEnvelope out;
    const BigInt nn(n), kk(k);
    out.small_formula = power(nn, static_cast<unsigned>(r - t - 1)) * power(kk, static_cast<unsigned>(t + 1));
    out.large_formula = power(nn, static_cast<unsigned>(t)) * power(kk, static_cast<unsigned>(r - t));
    out.balanced = r == 2 * t + 1;
    out.regime = 2 * t + 1 <= r ? BoundRegime::small_kernel : BoundRegime::large_kernel;
    out.value = out.regime == BoundRegime::small_kernel ? out.small_formula : out.large_formula;
    return out;
}

}  // namespace sunflower
