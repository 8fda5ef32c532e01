#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sunflower/combinatorics.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/hypergraph.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/set_system.hpp"
#include "sunflower/sunflower.hpp"

namespace sunflower {

// Edge types for balanced hypergraphs (r = 2t+1). Coordinates of an edge are
// 1..2t+1 in ascending vertex order; a type assigns each t-set of coordinates
// one coordinate outside it.

struct TypeDomain;

/// f : C([2t+1], t) -> [2t+1] with f(I) ∉ I. Supports 0 <= t <= 9.
class TypeFunction {
public:
    /// images[i] is f of the i-th t-subset in lexicographic order (1-based).
    TypeFunction(int t, std::vector<int> images);

    /// Decodes a mixed-radix index in [0, (t+1)^C(2t+1,t)): digit i picks the
    /// digit-th coordinate outside the i-th t-subset, ascending.
    static TypeFunction from_index(int t, std::uint64_t index);
    static TypeFunction random(int t, Rng& rng);
    /// (t+1)^C(2t+1,t)
    static BigInt family_size(int t);

    [[nodiscard]] int t() const noexcept { return t_; }
    [[nodiscard]] int ground_size() const noexcept { return 2 * t_ + 1; }
    /// The t-subsets of {1..2t+1}, lexicographic.
    [[nodiscard]] const std::vector<VertexSet>& domain() const;
    [[nodiscard]] const std::vector<int>& images() const noexcept { return images_; }
    [[nodiscard]] int operator()(const VertexSet& subset) const;

    // mask-level access for the search kernels
    [[nodiscard]] int image_of_mask(std::uint64_t subset) const;
    [[nodiscard]] const std::vector<std::uint64_t>& domain_masks() const;

    friend bool operator==(const TypeFunction& a, const TypeFunction& b) {
        return a.t_ == b.t_ && a.images_ == b.images_;
    }

private:
    int t_;
    std::vector<int> images_;
    std::shared_ptr<const TypeDomain> domain_;
};

struct ExtendingTrace {
    VertexSet start;
    std::vector<VertexSet> chain;  // J_0 = start, J_1, ...
    std::vector<VertexSet> aux;    // I_1, I_2, ... (I_{i+1} ⊆ J_i)
    VertexSet terminal;            // C(J)

    [[nodiscard]] bool reaches_all(int ground) const noexcept {
        return terminal.size() == static_cast<std::size_t>(ground);
    }
};

/// Repeatedly adds f(I) for the lexicographically least t-subset I of the
/// current set with f(I) outside it; stops when no such I exists.
ExtendingTrace extending_sequence(const TypeFunction& f, const VertexSet& start);

/// {C ⊊ [2t+1] : f(I) ∈ C for every t-subset I of C}.
SetSystem extract_family(const TypeFunction& f);

/// Raised when a link has k disjoint edges, so no cover of the promised size
/// exists; carries the sunflower.
class SunflowerFound : public InvalidArgument {
public:
    explicit SunflowerFound(SunflowerWitness w);
    [[nodiscard]] const SunflowerWitness& witness() const noexcept { return witness_; }

private:
    SunflowerWitness witness_;
};

/// S ↦ Φ(S): the greedy cover of the link of every t-set S with nonempty link.
class CoverMap {
public:
    CoverMap(int t, std::size_t k, std::map<VertexSet, VertexSet> covers);
    [[nodiscard]] int t() const noexcept { return t_; }
    [[nodiscard]] std::size_t k() const noexcept { return k_; }
    /// Empty for sets with empty link.
    [[nodiscard]] const VertexSet& operator()(const VertexSet& s) const;
    [[nodiscard]] const std::map<VertexSet, VertexSet>& covers() const noexcept { return covers_; }

private:
    int t_;
    std::size_t k_;
    std::map<VertexSet, VertexSet> covers_;
};

/// Requires H to be (2t+1)-uniform. Throws SunflowerFound when some greedy
/// collection reaches k disjoint link edges.
CoverMap cover_map(const Hypergraph& h, std::size_t k);

/// f_e(I) = least coordinate j ∉ I whose vertex lies in Φ(e_I).
TypeFunction edge_type(const VertexSet& edge, const CoverMap& phi);

enum class DichotomyMode { exhaustive, sampled };

struct DichotomyOptions {
    DichotomyMode mode = DichotomyMode::exhaustive;
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct DichotomyReport {
    int t = 0;
    DichotomyMode mode = DichotomyMode::exhaustive;
    std::uint64_t examined = 0;
    std::uint64_t reaching = 0;          // some J has C(J) = [2t+1]
    std::uint64_t stuck = 0;             // every C(J) is proper
    std::uint64_t systems_extracted = 0; // extract_family(f) passed is_system
    std::uint64_t invariant_failures = 0;
    std::vector<SetSystem> counterexamples;  // at most a few, for reporting
};

/// Exhaustive mode is limited to t <= 2. For each f, records whether some J
/// reaches [2t+1] and whether extract_family(f) is a (t+1,t)-system, and
/// re-checks the closure invariants of the extending sequences.
DichotomyReport dichotomy_check(int t, const DichotomyOptions& options = {});

/// n^t ((k-1)(t+1))^{t+1}
BigInt count_type_tuples(int n, int t, std::size_t k);

struct TypeClassReport {
    TypeFunction type;
    std::size_t edges = 0;                // |E_f|
    std::optional<VertexSet> reaching;    // least J with C(J) = [2t+1]
    std::size_t tuples = 0;               // |T|, when reaching
    bool contained = false;               // E_f ⊆ T
};

struct TypeTupleReport {
    BigInt bound;
    std::size_t total_edges = 0;
    std::vector<TypeClassReport> classes;  // distinct types, ordered by images
};

/// Groups the edges of a (2t+1)-uniform H by type and, for each type with a
/// reaching J, enumerates the tuple set T and checks that it contains E_f.
TypeTupleReport check_type_tuples(const Hypergraph& h, std::size_t k);

/// The tuples generated by following type f from start J, using covers Φ.
std::vector<std::vector<Vertex>> enumerate_type_tuples(int n, const TypeFunction& f,
                                                       const ExtendingTrace& trace,
                                                       const CoverMap& phi);

}  // namespace sunflower
