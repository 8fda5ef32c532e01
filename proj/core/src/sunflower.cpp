#include "sunflower/sunflower.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "bits.hpp"
#include "matching_kernel.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/matching.hpp"

namespace sunflower {

std::vector<VertexSet> SunflowerWitness::edges() const {
    std::vector<VertexSet> out;
    out.reserve(petals.size());
    for (const auto& p : petals) out.push_back(kernel.unite(p));
    return out;
}

bool is_valid_witness(const Hypergraph& h, const SunflowerWitness& w) {
    if (w.t < 0 || w.kernel.size() != static_cast<std::size_t>(w.t)) return false;
    if (w.petals.size() != w.k || w.k < 1) return false;
    const auto petal_size = static_cast<std::size_t>(h.r() - w.t);
    for (std::size_t i = 0; i < w.k; ++i) {
        const auto& p = w.petals[i];
        if (p.size() != petal_size || !p.disjoint_from(w.kernel)) return false;
        if (!h.contains(w.kernel.unite(p))) return false;
        for (std::size_t j = i + 1; j < w.k; ++j) {
            if (!p.disjoint_from(w.petals[j])) return false;
            // distinct edges; only possible to fail with empty petals
            if (p == w.petals[j]) return false;
        }
    }
    return true;
}

namespace {

struct KernelGroup {
    VertexSet kernel;
    std::vector<std::uint32_t> edges;  // indices into h.edges(), ascending
};

std::vector<KernelGroup> kernel_groups(const Hypergraph& h, std::size_t t, std::size_t min_degree) {
    std::vector<std::pair<VertexSet, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < h.edge_count(); ++i) {
        for_each_combination(h.edge(i).members(), t, [&](std::span<const Vertex> pick) {
            pairs.emplace_back(VertexSet::from_sorted({pick.begin(), pick.end()}), i);
        });
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<KernelGroup> groups;
    for (std::size_t a = 0; a < pairs.size();) {
        std::size_t b = a;
        while (b < pairs.size() && pairs[b].first == pairs[a].first) ++b;
        if (b - a >= min_degree) {
            KernelGroup g{pairs[a].first, {}};
            for (std::size_t c = a; c < b; ++c) g.edges.push_back(pairs[c].second);
            groups.push_back(std::move(g));
        }
        a = b;
    }
    return groups;
}

template <class Mask>
std::optional<std::vector<std::uint32_t>> petals_for(const Hypergraph& h, const KernelGroup& g,
                                                     std::size_t k) {
    std::vector<Mask> link;
    link.reserve(g.edges.size());
    for (auto i : g.edges) link.push_back(Mask::of(h.edge(i).minus(g.kernel)));
    detail::MatchingSearch<Mask> search(link, h.r() - static_cast<int>(g.kernel.size()), k);
    auto picked = search.run();
    if (picked.size() < k) return std::nullopt;
    std::vector<std::uint32_t> out;
    for (auto local : picked) out.push_back(g.edges[local]);
    return out;
}

}  // namespace

std::optional<SunflowerWitness> find_sunflower(const Hypergraph& h, int t, std::size_t k,
                                               unsigned threads) {
    if (t < 0 || t >= h.r()) throw InvalidArgument("kernel size must satisfy 0 <= t < r");
    if (k < 2) throw InvalidArgument("sunflowers need k >= 2 petals");
    if (h.edge_count() < k) return std::nullopt;

    const auto groups = kernel_groups(h, static_cast<std::size_t>(t), k);
    if (groups.empty()) return std::nullopt;

    auto solve = [&](std::size_t gi) {
        return detail::dispatch_width(h.n(), [&]<class Mask>() {
            return petals_for<Mask>(h, groups[gi], k);
        });
    };

    std::size_t found_index = groups.size();
    std::vector<std::uint32_t> found_edges;
    if (threads <= 1 || groups.size() < 2) {
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            if (auto hit = solve(gi)) {
                found_index = gi;
                found_edges = std::move(*hit);
                break;
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{groups.size()};
        std::vector<std::optional<std::vector<std::uint32_t>>> hits(groups.size());
        auto worker = [&] {
            for (;;) {
                const std::size_t gi = next.fetch_add(1);
                if (gi >= groups.size() || gi > best.load()) return;
                if (auto hit = solve(gi)) {
                    hits[gi] = std::move(hit);
                    std::size_t cur = best.load();
                    while (gi < cur && !best.compare_exchange_weak(cur, gi)) {}
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned n_workers = std::min<unsigned>(threads, static_cast<unsigned>(groups.size()));
        for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        found_index = best.load();
        if (found_index < groups.size()) found_edges = std::move(*hits[found_index]);
    }
    if (found_index == groups.size()) return std::nullopt;

    SunflowerWitness w;
    w.kernel = groups[found_index].kernel;
    w.t = t;
    w.k = k;
    for (auto i : found_edges) w.petals.push_back(h.edge(i).minus(w.kernel));
    SUNFLOWER_ENSURE(is_valid_witness(h, w), "detector produced an invalid witness");
    return w;
}

MultiFreeness is_free_multi(const Hypergraph& h, std::span<const int> kernel_sizes, std::size_t k,
                            unsigned threads) {
    std::vector<int> sizes(kernel_sizes.begin(), kernel_sizes.end());
    for (int t : sizes) {
        if (t < 0 || t >= h.r()) {
            throw InvalidArgument("kernel size " + std::to_string(t) + " outside 0..r-1");
        }
    }
    if (k < 2) throw InvalidArgument("sunflowers need k >= 2 petals");
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (int t : sizes) {
        if (auto w = find_sunflower(h, t, k, threads)) return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

StarBoundReport forbidden_star_edge_bound(const Hypergraph& h, int ell, std::size_t k,
                                          unsigned threads) {
    const int r = h.r();
    if (ell < 0 || ell >= r) throw InvalidArgument("level must satisfy 0 <= ell < r");
    if (k < 2) throw InvalidArgument("sunflowers need k >= 2 petals");

    StarBoundReport report;
    report.edge_count = h.edge_count();
    const BigInt rk = BigInt(r) * BigInt(k);
    report.total_bound = power(BigInt(h.n()), static_cast<unsigned>(ell)) *
                         power(rk, static_cast<unsigned>(r - ell));

    std::vector<int> sizes;
    for (int s = ell; s < r; ++s) sizes.push_back(s);
    auto multi = is_free_multi(h, sizes, k, threads);
    if (!multi.free) {
        report.precondition_violation = std::move(multi.witness);
        return report;
    }

    bool ok = true;
    for (int size = ell; size <= r; ++size) {
        LinkLevel level;
        level.set_size = size;
        level.link_bound = power(rk, static_cast<unsigned>(r - size));
        level.cover_bound = static_cast<std::size_t>(r - size) * (k - 1);
        for (const auto& s : edge_subsets(h, static_cast<std::size_t>(size))) {
            ++level.sets_checked;
            const Hypergraph link = link_graph(h, s);
            level.max_link = std::max(level.max_link, link.edge_count());
            bool bad = BigInt(link.edge_count()) > level.link_bound;
            if (size < r) {
                auto mc = greedy_matching_or_cover(link, k);
                if (!mc.is_cover()) {
                    bad = true;
                } else {
                    level.max_cover = std::max(level.max_cover, mc.cover.size());
                    bad = bad || mc.cover.size() > level.cover_bound;
                }
            }
            if (bad) ++level.violations;
        }
        ok = ok && level.violations == 0;
        report.levels.push_back(std::move(level));
    }
    report.holds = ok && BigInt(report.edge_count) <= report.total_bound;
    return report;
}

}  // namespace sunflower
