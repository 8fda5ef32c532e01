#include "sunflower/reduction.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <thread>

#include "set_masks.hpp"
#include "sunflower/matching.hpp"

namespace sunflower {

using detail::SetMask;

struct TypeDomain {
    int t = 0;
    int ground = 1;
    std::vector<VertexSet> subsets;
    std::vector<SetMask> masks;
    std::vector<std::int32_t> rank;           // dense over all masks of [ground]
    std::vector<std::vector<int>> outside;    // coordinates not in subset i, ascending
};

namespace {

constexpr int kMaxTypeT = 9;

std::shared_ptr<const TypeDomain> domain_for(int t) {
    if (t < 0 || t > kMaxTypeT) {
        throw InvalidArgument("type functions support 0 <= t <= " + std::to_string(kMaxTypeT));
    }
    static std::mutex lock;
    static std::map<int, std::shared_ptr<const TypeDomain>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[t];
    if (!slot) {
        auto d = std::make_shared<TypeDomain>();
        d->t = t;
        d->ground = 2 * t + 1;
        d->subsets = subsets_of_size(VertexSet::range(1, d->ground), static_cast<std::size_t>(t));
        d->rank.assign(std::size_t{1} << d->ground, -1);
        for (std::size_t i = 0; i < d->subsets.size(); ++i) {
            const SetMask m = detail::mask_of(d->subsets[i]);
            d->masks.push_back(m);
            d->rank[m] = static_cast<std::int32_t>(i);
            std::vector<int> out;
            for (int c = 1; c <= d->ground; ++c) {
                if (!((m >> (c - 1)) & 1U)) out.push_back(c);
            }
            d->outside.push_back(std::move(out));
        }
        slot = std::move(d);
    }
    return slot;
}

/// C(J) as a mask, optionally recording the chain.
SetMask extend(const TypeFunction& f, SetMask start, std::vector<SetMask>* chain,
               std::vector<SetMask>* aux) {
    const auto& masks = f.domain_masks();
    const auto& images = f.images();
    SetMask cur = start;
    if (chain) chain->push_back(cur);
    for (;;) {
        bool grew = false;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if ((masks[i] & ~cur) != 0) continue;
            const SetMask bit = SetMask{1} << (images[i] - 1);
            if (cur & bit) continue;
            cur |= bit;
            if (chain) chain->push_back(cur);
            if (aux) aux->push_back(masks[i]);
            grew = true;
            break;
        }
        if (!grew) return cur;
    }
}

std::vector<SetMask> extract_masks(const TypeFunction& f) {
    const int ground = f.ground_size();
    const SetMask full = detail::full_mask(ground);
    const auto& masks = f.domain_masks();
    const auto& images = f.images();
    std::vector<SetMask> out;
    for (SetMask c = 0; c < full; ++c) {
        bool closed = true;
        for (std::size_t i = 0; i < masks.size() && closed; ++i) {
            if ((masks[i] & ~c) == 0 && !((c >> (images[i] - 1)) & 1U)) closed = false;
        }
        if (closed) out.push_back(c);
    }
    return out;
}

}  // namespace

TypeFunction::TypeFunction(int t, std::vector<int> images)
    : t_(t), images_(std::move(images)), domain_(domain_for(t)) {
    if (images_.size() != domain_->subsets.size()) {
        throw InvalidArgument("type function needs one image per t-subset of [2t+1]");
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const int v = images_[i];
        if (v < 1 || v > domain_->ground || domain_->subsets[i].contains(v)) {
            throw InvalidArgument("type function maps " + domain_->subsets[i].to_string() + " to " +
                                  std::to_string(v) + ", which is not outside it in [2t+1]");
        }
    }
}

TypeFunction TypeFunction::from_index(int t, std::uint64_t index) {
    const auto d = domain_for(t);
    if (BigInt(index) >= family_size(t)) throw InvalidArgument("type index out of range");
    std::vector<int> images;
    images.reserve(d->subsets.size());
    for (std::size_t i = 0; i < d->subsets.size(); ++i) {
        images.push_back(d->outside[i][index % static_cast<std::uint64_t>(t + 1)]);
        index /= static_cast<std::uint64_t>(t + 1);
    }
    return TypeFunction(t, std::move(images));
}

TypeFunction TypeFunction::random(int t, Rng& rng) {
    const auto d = domain_for(t);
    std::vector<int> images;
    images.reserve(d->subsets.size());
    for (std::size_t i = 0; i < d->subsets.size(); ++i) {
        images.push_back(d->outside[i][rng.below(static_cast<std::uint64_t>(t + 1))]);
    }
    return TypeFunction(t, std::move(images));
}

BigInt TypeFunction::family_size(int t) {
    return power(BigInt(t + 1), static_cast<unsigned>(binomial_u64(2 * t + 1, t)));
}

const std::vector<VertexSet>& TypeFunction::domain() const { return domain_->subsets; }

const std::vector<std::uint64_t>& TypeFunction::domain_masks() const { return domain_->masks; }

int TypeFunction::image_of_mask(std::uint64_t subset) const {
    if (subset >= domain_->rank.size() || domain_->rank[subset] < 0) {
        throw InvalidArgument("type function queried outside its domain");
    }
    return images_[static_cast<std::size_t>(domain_->rank[subset])];
}

int TypeFunction::operator()(const VertexSet& subset) const {
    if (!subset.within(ground_size())) throw InvalidArgument("type function queried outside [2t+1]");
    return image_of_mask(detail::mask_of(subset));
}

ExtendingTrace extending_sequence(const TypeFunction& f, const VertexSet& start) {
    if (start.size() != static_cast<std::size_t>(f.t()) || !start.within(f.ground_size())) {
        throw InvalidArgument("extending sequence must start from a t-subset of [2t+1]");
    }
    std::vector<SetMask> chain, aux;
    const SetMask end = extend(f, detail::mask_of(start), &chain, &aux);
    ExtendingTrace trace;
    trace.start = start;
    for (auto m : chain) trace.chain.push_back(detail::set_of(m));
    for (auto m : aux) trace.aux.push_back(detail::set_of(m));
    trace.terminal = detail::set_of(end);
    return trace;
}

SetSystem extract_family(const TypeFunction& f) {
    std::vector<VertexSet> members;
    for (auto m : extract_masks(f)) members.push_back(detail::set_of(m));
    return SetSystem(f.ground_size(), std::move(members));
}

SunflowerFound::SunflowerFound(SunflowerWitness w)
    : InvalidArgument("hypergraph contains a sunflower with kernel " + w.kernel.to_string()),
      witness_(std::move(w)) {}

CoverMap::CoverMap(int t, std::size_t k, std::map<VertexSet, VertexSet> covers)
    : t_(t), k_(k), covers_(std::move(covers)) {}

const VertexSet& CoverMap::operator()(const VertexSet& s) const {
    static const VertexSet empty;
    const auto it = covers_.find(s);
    return it == covers_.end() ? empty : it->second;
}

CoverMap cover_map(const Hypergraph& h, std::size_t k) {
    if (h.r() % 2 == 0) throw InvalidArgument("cover map needs odd uniformity r = 2t+1");
    if (k < 2) throw InvalidArgument("cover map needs k >= 2");
    const int t = (h.r() - 1) / 2;
    std::map<VertexSet, VertexSet> covers;
    for (const auto& s : edge_subsets(h, static_cast<std::size_t>(t))) {
        auto mc = greedy_matching_or_cover(link_graph(h, s), k);
        if (mc.is_matching()) {
            throw SunflowerFound(SunflowerWitness{s, std::move(mc.matching), t, k});
        }
        SUNFLOWER_ENSURE(mc.cover.size() <= (k - 1) * static_cast<std::size_t>(t + 1),
                         "greedy cover exceeds (k-1)(t+1)");
        covers.emplace(s, std::move(mc.cover));
    }
    return CoverMap(t, k, std::move(covers));
}

TypeFunction edge_type(const VertexSet& edge, const CoverMap& phi) {
    const int t = phi.t();
    const int ground = 2 * t + 1;
    if (edge.size() != static_cast<std::size_t>(ground)) {
        throw InvalidArgument("edge type needs a (2t+1)-edge");
    }
    const auto d = domain_for(t);
    std::vector<int> images;
    images.reserve(d->subsets.size());
    for (std::size_t i = 0; i < d->subsets.size(); ++i) {
        std::vector<Vertex> part;
        for (int c : d->subsets[i]) part.push_back(edge[static_cast<std::size_t>(c - 1)]);
        const VertexSet& cover = phi(VertexSet::from_sorted(std::move(part)));
        int chosen = 0;
        for (int c : d->outside[i]) {
            if (cover.contains(edge[static_cast<std::size_t>(c - 1)])) {
                chosen = c;
                break;
            }
        }
        SUNFLOWER_ENSURE(chosen != 0, "cover of " + d->subsets[i].to_string() + " misses edge " +
                                          edge.to_string());
        images.push_back(chosen);
    }
    return TypeFunction(t, std::move(images));
}

namespace {

struct FunctionVerdict {
    bool reaching = false;
    bool system = false;
    bool invariant_ok = true;
};

FunctionVerdict judge(const TypeFunction& f, const TypeDomain& d) {
    FunctionVerdict v;
    const SetMask full = detail::full_mask(d.ground);
    const auto family = extract_masks(f);
    std::vector<std::uint8_t> member(std::size_t{1} << d.ground, 0);
    for (auto m : family) member[m] = 1;

    for (auto a : family) {
        for (auto b : family) {
            if (!member[a & b]) v.invariant_ok = false;
        }
    }
    for (auto start : d.masks) {
        std::vector<SetMask> chain;
        const SetMask end = extend(f, start, &chain, nullptr);
        if (chain.size() - 1 > static_cast<std::size_t>(d.t + 1)) v.invariant_ok = false;
        if (detail::size_of(end) < d.t + 1) v.invariant_ok = false;
        if (end == full) v.reaching = true;
        else if (!member[end]) v.invariant_ok = false;
    }
    std::vector<VertexSet> members;
    for (auto m : family) members.push_back(detail::set_of(m));
    v.system = is_system(SetSystem(d.ground, std::move(members)), d.t).ok();
    // every C(J) proper makes the extracted family a system
    if (!v.reaching && !v.system) v.invariant_ok = false;
    return v;
}

}  // namespace

DichotomyReport dichotomy_check(int t, const DichotomyOptions& options) {
    const auto d = domain_for(t);
    DichotomyReport report;
    report.t = t;
    report.mode = options.mode;

    std::vector<TypeFunction> sampled;
    std::uint64_t total = 0;
    if (options.mode == DichotomyMode::exhaustive) {
        if (t > 2) throw InvalidArgument("exhaustive dichotomy mode is limited to t <= 2");
        total = TypeFunction::family_size(t).convert_to<std::uint64_t>();
    } else {
        Rng rng(options.seed);
        sampled.reserve(options.samples);
        for (std::uint64_t i = 0; i < options.samples; ++i) sampled.push_back(TypeFunction::random(t, rng));
        total = options.samples;
    }

    struct Partial {
        std::uint64_t reaching = 0, stuck = 0, systems = 0, failures = 0;
        std::vector<std::pair<std::uint64_t, SetSystem>> examples;
    };
    auto run_range = [&](std::uint64_t begin, std::uint64_t end, std::uint64_t stride, Partial& part) {
        for (std::uint64_t i = begin; i < end; i += stride) {
            const TypeFunction f = options.mode == DichotomyMode::exhaustive ? TypeFunction::from_index(t, i)
                                                                              : sampled[i];
            const auto v = judge(f, *d);
            if (v.reaching) ++part.reaching;
            else ++part.stuck;
            if (!v.invariant_ok) ++part.failures;
            if (v.system) {
                ++part.systems;
                if (part.examples.size() < 4) part.examples.emplace_back(i, extract_family(f));
            }
        }
    };

    const unsigned workers = std::max(1U, options.threads);
    std::vector<Partial> parts(workers);
    if (workers == 1) {
        run_range(0, total, 1, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] { run_range(w, total, workers, parts[w]); });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::pair<std::uint64_t, SetSystem>> examples;
    for (auto& p : parts) {
        report.reaching += p.reaching;
        report.stuck += p.stuck;
        report.systems_extracted += p.systems;
        report.invariant_failures += p.failures;
        for (auto& e : p.examples) examples.push_back(std::move(e));
    }
    std::sort(examples.begin(), examples.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < examples.size() && i < 4; ++i) report.counterexamples.push_back(examples[i].second);
    report.examined = total;
    return report;
}

BigInt count_type_tuples(int n, int t, std::size_t k) {
    if (n < 2 || k < 2 || t < 0) throw InvalidArgument("tuple bound needs n, k >= 2 and t >= 0");
    return power(BigInt(n), static_cast<unsigned>(t)) *
           power(BigInt(k - 1) * (t + 1), static_cast<unsigned>(t + 1));
}

std::vector<std::vector<Vertex>> enumerate_type_tuples(int n, const TypeFunction& f,
                                                       const ExtendingTrace& trace,
                                                       const CoverMap& phi) {
    const int ground = f.ground_size();
    if (!trace.reaches_all(ground)) throw InvalidArgument("tuple enumeration needs C(J) = [2t+1]");
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> tuple(static_cast<std::size_t>(ground), 0);
    const auto& start = trace.start.vector();

    // coordinate added at each step of the chain
    std::vector<int> added;
    for (std::size_t i = 1; i < trace.chain.size(); ++i) {
        added.push_back(trace.chain[i].minus(trace.chain[i - 1])[0]);
    }

    auto extend_step = [&](auto&& self, std::size_t step) -> void {
        if (step == added.size()) {
            out.push_back(tuple);
            return;
        }
        std::vector<Vertex> part;
        for (int c : trace.aux[step]) part.push_back(tuple[static_cast<std::size_t>(c - 1)]);
        std::sort(part.begin(), part.end());
        if (std::adjacent_find(part.begin(), part.end()) != part.end()) return;
        const VertexSet& cover = phi(VertexSet::from_sorted(std::move(part)));
        for (Vertex v : cover) {
            tuple[static_cast<std::size_t>(added[step] - 1)] = v;
            self(self, step + 1);
        }
        tuple[static_cast<std::size_t>(added[step] - 1)] = 0;
    };
    auto choose_start = [&](auto&& self, std::size_t pos) -> void {
        if (pos == start.size()) {
            extend_step(extend_step, 0);
            return;
        }
        for (Vertex v = 1; v <= n; ++v) {
            bool used = false;
            for (std::size_t q = 0; q < pos; ++q) used = used || tuple[static_cast<std::size_t>(start[q] - 1)] == v;
            if (used) continue;
            tuple[static_cast<std::size_t>(start[pos] - 1)] = v;
            self(self, pos + 1);
        }
        tuple[static_cast<std::size_t>(start[pos] - 1)] = 0;
    };
    choose_start(choose_start, 0);
    return out;
}

TypeTupleReport check_type_tuples(const Hypergraph& h, std::size_t k) {
    const CoverMap phi = cover_map(h, k);
    const int t = phi.t();
    TypeTupleReport report;
    report.bound = count_type_tuples(std::max(h.n(), 2), t, k);
    report.total_edges = h.edge_count();

    std::map<std::vector<int>, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        classes[edge_type(h.edge(i), phi).images()].push_back(i);
    }
    for (auto& [images, members] : classes) {
        TypeClassReport cls{TypeFunction(t, images), members.size(), std::nullopt, 0, false};
        for (const auto& j : cls.type.domain()) {
            auto trace = extending_sequence(cls.type, j);
            if (!trace.reaches_all(2 * t + 1)) continue;
            cls.reaching = j;
            auto tuples = enumerate_type_tuples(h.n(), cls.type, trace, phi);
            std::sort(tuples.begin(), tuples.end());
            tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
            cls.tuples = tuples.size();
            cls.contained = std::all_of(members.begin(), members.end(), [&](std::size_t e) {
                const auto& v = h.edge(e).vector();
                return std::binary_search(tuples.begin(), tuples.end(), v);
            });
            break;
        }
        report.classes.push_back(std::move(cls));
    }
    return report;
}

}  // namespace sunflower
