#include "sunflower/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "sunflower/errors.hpp"

namespace sunflower {

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    // r > n is allowed; such a graph can only be empty.
    if (r < 0) throw InvalidArgument("uniformity must be non-negative");
}

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges) : Hypergraph(n, r) {
    for (const auto& e : edges) {
        if (e.size() != static_cast<std::size_t>(r)) {
            throw InvalidArgument("edge " + e.to_string() + " does not have " +
                                  std::to_string(r) + " vertices");
        }
        if (!e.within(n)) {
            throw InvalidArgument("edge " + e.to_string() + " leaves {1.." + std::to_string(n) +
                                  "}");
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) throw InvalidArgument("duplicate edge " + dup->to_string());
    edges_ = std::move(edges);
}

Hypergraph::Hypergraph(Canonical, int n, int r, std::vector<VertexSet> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {}

Hypergraph make_canonical(int n, int r, std::vector<VertexSet> edges) {
    return Hypergraph(Hypergraph::Canonical{}, n, r, std::move(edges));
}

bool Hypergraph::contains(const VertexSet& e) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph complete_hypergraph(int n, int r) { return complete_on_prefix(n, n, r); }

Hypergraph complete_on_prefix(int n, int m, int r) {
    if (r < 0 || r > n) throw InvalidArgument("complete hypergraph needs 0 <= r <= n");
    if (m < 0 || m > n) throw InvalidArgument("prefix size must lie in [0, n]");
    // lexicographic combination order is already canonical
    return make_canonical(n, r, subsets_of_size(VertexSet::range(1, m), static_cast<std::size_t>(r)));
}

Hypergraph link_graph(const Hypergraph& h, const VertexSet& s) {
    if (s.size() > static_cast<std::size_t>(h.r())) {
        throw InvalidArgument("link set " + s.to_string() + " is larger than the uniformity");
    }
    if (!s.within(h.n())) throw InvalidArgument("link set " + s.to_string() + " out of range");
    std::vector<VertexSet> out;
    for (const auto& e : h.edges()) {
        if (s.is_subset_of(e)) out.push_back(e.minus(s));
    }
    // removing a common subset preserves lexicographic order
    return make_canonical(h.n(), h.r() - static_cast<int>(s.size()), std::move(out));
}

std::size_t degree(const Hypergraph& h, const VertexSet& s) {
    return static_cast<std::size_t>(std::count_if(
        h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return s.is_subset_of(e); }));
}

std::vector<VertexSet> edge_subsets(const Hypergraph& h, std::size_t t) {
    std::vector<VertexSet> out;
    for (const auto& e : h.edges()) {
        for_each_combination(e.members(), t, [&](std::span<const Vertex> pick) {
            out.push_back(VertexSet::from_sorted({pick.begin(), pick.end()}));
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sunflower
