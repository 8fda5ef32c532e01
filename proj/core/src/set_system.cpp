#include "sunflower/set_system.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "set_masks.hpp"
#include "sunflower/errors.hpp"

namespace sunflower {

using detail::SetMask;

namespace {

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<SetMask> masks_of(const SetSystem& sys) {
    std::vector<SetMask> out;
    out.reserve(sys.size());
    for (const auto& s : sys.family()) out.push_back(detail::mask_of(s));
    return out;
}

void require_small_ground(int N) {
    if (N < 0 || N > 63) throw InvalidArgument("ground set size must lie in 0..63");
}

}  // namespace

SetSystem::SetSystem(int N, std::vector<VertexSet> family) : N_(N) {
    require_small_ground(N);
    for (const auto& s : family) {
        if (!s.within(N)) throw InvalidArgument("member " + s.to_string() + " leaves {1..N}");
    }
    std::sort(family.begin(), family.end(), size_lex_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    family_ = std::move(family);
}

bool SetSystem::contains(const VertexSet& s) const {
    return std::binary_search(family_.begin(), family_.end(), s, size_lex_less);
}

SetSystem intersection_closure(const SetSystem& sys) {
    std::set<SetMask> closed;
    std::vector<SetMask> pending = masks_of(sys);
    while (!pending.empty()) {
        const SetMask x = pending.back();
        pending.pop_back();
        if (!closed.insert(x).second) continue;
        for (SetMask y : closed) {
            if (!closed.count(x & y)) pending.push_back(x & y);
        }
    }
    std::vector<VertexSet> out;
    for (auto m : closed) out.push_back(detail::set_of(m));
    return SetSystem(sys.ground_size(), std::move(out));
}

bool is_intersection_closed(const SetSystem& sys) {
    const auto members = masks_of(sys);
    std::vector<SetMask> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!std::binary_search(sorted.begin(), sorted.end(), members[i] & members[j])) return false;
        }
    }
    return true;
}

bool covers_all_t_sets(const SetSystem& sys, int t) {
    if (t < 0 || t > sys.ground_size()) return false;
    const auto members = masks_of(sys);
    for (SetMask tset : detail::k_subset_masks(sys.ground_size(), t)) {
        if (std::none_of(members.begin(), members.end(),
                         [&](SetMask a) { return (a & tset) == tset; })) {
            return false;
        }
    }
    return true;
}

SystemCheck is_system(const SetSystem& sys, int t) {
    const int N = sys.ground_size();
    if (t < 0 || t > N) throw InvalidArgument("is_system needs 0 <= t <= N");
    SystemCheck out;
    const auto& fam = sys.family();
    const auto members = masks_of(sys);
    std::vector<SetMask> sorted = members;
    std::sort(sorted.begin(), sorted.end());

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!std::binary_search(sorted.begin(), sorted.end(), members[i] & members[j])) {
                out.violation = SystemViolation::not_intersection_closed;
                out.first = fam[i];
                out.second = fam[j];
                return out;
            }
        }
    }
    for (SetMask tset : detail::k_subset_masks(N, t)) {
        if (std::none_of(members.begin(), members.end(),
                         [&](SetMask a) { return (a & tset) == tset; })) {
            out.violation = SystemViolation::uncovered_t_set;
            out.first = detail::set_of(tset);
            return out;
        }
    }
    const auto modulus = static_cast<std::size_t>(t + 1);
    for (const auto& a : fam) {
        if (a.size() % modulus == static_cast<std::size_t>(N) % modulus) {
            out.violation = SystemViolation::member_size_residue;
            out.first = a;
            return out;
        }
    }
    return out;
}

namespace {

class SystemSearch {
public:
    SystemSearch(int t, int N, std::uint64_t budget)
        : t_(t), N_(N), budget_(budget), in_family_(std::size_t{1} << N, 0),
          excluded_(std::size_t{1} << N, 0), allowed_(static_cast<std::size_t>(N) + 1, false) {
        for (int size = 0; size <= N; ++size) {
            allowed_[static_cast<std::size_t>(size)] = size % (t + 1) != N % (t + 1);
        }
        tsets_ = detail::k_subset_masks(N, t);
        const SetMask full = detail::full_mask(N);
        for (SetMask tset : tsets_) {
            std::vector<SetMask> sups;
            const SetMask free = full & ~tset;
            // enumerate subsets of the complement
            for (SetMask extra = free;; extra = (extra - 1) & free) {
                const SetMask cand = tset | extra;
                if (allowed_[static_cast<std::size_t>(detail::size_of(cand))]) sups.push_back(cand);
                if (extra == 0) break;
            }
            std::sort(sups.begin(), sups.end(), [](SetMask a, SetMask b) {
                if (detail::size_of(a) != detail::size_of(b)) return detail::size_of(a) < detail::size_of(b);
                return detail::set_of(a) < detail::set_of(b);
            });
            candidates_.push_back(std::move(sups));
        }
    }

    SystemSearchResult run() {
        SystemSearchResult out;
        const Outcome o = dfs();
        out.nodes = nodes_;
        if (o == Outcome::found) {
            out.status = SearchStatus::sat;
            std::vector<VertexSet> fam;
            for (SetMask m : family_) fam.push_back(detail::set_of(m));
            out.system = SetSystem(N_, std::move(fam));
            SUNFLOWER_ENSURE(is_system(*out.system, t_).ok(), "search returned a non-system");
        } else if (o == Outcome::exhausted) {
            out.status = SearchStatus::budget_exhausted;
        } else {
            out.status = SearchStatus::unsat;
        }
        return out;
    }

private:
    enum class Outcome { found, refuted, exhausted };

    bool covered(SetMask tset) const {
        return std::any_of(family_.begin(), family_.end(), [&](SetMask a) { return (a & tset) == tset; });
    }

    /// Adds `a` and its intersections with the current family. False when a
    /// forced member has a forbidden size or was refuted by a sibling.
    bool add_closed(SetMask a) {
        const std::size_t base = family_.size();
        auto push = [&](SetMask x) {
            if (in_family_[x]) return true;
            if (!allowed_[static_cast<std::size_t>(detail::size_of(x))] || excluded_[x]) return false;
            in_family_[x] = 1;
            family_.push_back(x);
            return true;
        };
        if (!push(a)) return false;
        for (std::size_t i = 0; i < base; ++i) {
            if (!push(a & family_[i])) return false;
        }
        return true;
    }

    void rollback(std::size_t mark) {
        while (family_.size() > mark) {
            in_family_[family_.back()] = 0;
            family_.pop_back();
        }
    }

    Outcome dfs() {
        if (++nodes_ > budget_) return Outcome::exhausted;
        std::size_t branch = tsets_.size();
        for (std::size_t i = 0; i < tsets_.size(); ++i) {
            if (covered(tsets_[i])) continue;
            if (branch == tsets_.size()) branch = i;
            const auto& cands = candidates_[i];
            if (std::none_of(cands.begin(), cands.end(), [&](SetMask c) { return !excluded_[c]; })) {
                return Outcome::refuted;
            }
        }
        if (branch == tsets_.size()) return Outcome::found;

        std::vector<SetMask> excluded_here;
        Outcome result = Outcome::refuted;
        for (SetMask cand : candidates_[branch]) {
            if (excluded_[cand]) continue;
            const std::size_t mark = family_.size();
            if (add_closed(cand)) {
                const Outcome o = dfs();
                if (o == Outcome::found) return o;
                if (o == Outcome::exhausted) {
                    result = o;
                    rollback(mark);
                    break;
                }
            }
            rollback(mark);
            excluded_[cand] = 1;
            excluded_here.push_back(cand);
        }
        for (SetMask c : excluded_here) excluded_[c] = 0;
        return result;
    }

    int t_;
    int N_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint8_t> in_family_;
    std::vector<std::uint8_t> excluded_;
    std::vector<bool> allowed_;
    std::vector<SetMask> tsets_;
    std::vector<std::vector<SetMask>> candidates_;
    std::vector<SetMask> family_;
};

}  // namespace

SystemSearchResult search_system(int t, int N, std::uint64_t node_budget) {
    if (t < 1) throw InvalidArgument("system search needs t >= 1");
    if (N < t) throw InvalidArgument("system search needs N >= t");
    if (N > 20) throw InvalidArgument("system search supports N <= 20");
    return SystemSearch(t, N, node_budget).run();
}

}  // namespace sunflower
