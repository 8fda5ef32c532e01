#include "app.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/frankl_katona.hpp"
#include "sunflower/hg_format.hpp"
#include "sunflower/matching.hpp"
#include "sunflower/reduction.hpp"
#include "sunflower/residues.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/set_system.hpp"
#include "sunflower/sunflower.hpp"
#include "sunflower/turan.hpp"

namespace sunflower::cli {

namespace {

struct Options {
    int n = -1, r = -1, t = -1, N = -1, ell = -1, m = -1;
    std::size_t k = 0;
    std::int64_t a = -1;
    std::int64_t max_a = 300;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> stages;
    std::uint64_t ceiling = TuranOptions{}.ceiling;
    std::vector<int> kernel_sizes;
    std::string kind;
    std::string input;
    std::string out;
    bool json = false;
    int n_min = 4;
};

/// Report sink: stdout, or the --out file.
class Sink {
public:
    Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InvalidArgument("cannot open output file " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

void header(std::ostream& os, const std::string& command, const Options& o) {
    os << "# sunflower " << command << " seed=" << o.seed << '\n';
}

void emit(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

std::string petals_text(const SunflowerWitness& w) {
    std::string s;
    for (const auto& p : w.petals) s += (s.empty() ? "" : " ") + p.to_string();
    return s;
}

// ---------------------------------------------------------------- find

int cmd_find(const Options& o, std::ostream& out) {
    const auto h = read_hypergraph(o.input);
    std::optional<SunflowerWitness> w;
    if (!o.kernel_sizes.empty()) {
        w = is_free_multi(h, o.kernel_sizes, o.k, o.threads).witness;
    } else {
        w = find_sunflower(h, o.t, o.k, o.threads);
    }
    spdlog::debug("find: n={} r={} edges={}", h.n(), h.r(), h.edge_count());
    Sink sink(out, o.out);
    if (o.json) {
        emit(*sink, to_json(w));
    } else {
        header(*sink, "find", o);
        if (w) {
            *sink << "sunflower t=" << w->t << " k=" << w->k << " kernel=" << w->kernel.to_string()
                  << " petals=" << petals_text(*w) << '\n';
        } else {
            *sink << "free\n";
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- construct

int cmd_construct(const Options& o, std::ostream& out) {
    Hypergraph h;
    Json stages = nullptr;
    BigInt theoretical;
    if (o.kind == "small-kernel") {
        h = small_kernel(o.n, o.r, o.t, o.k);
        theoretical = small_kernel_edge_count(o.n, o.r, o.t, o.k);
    } else if (o.kind == "large-kernel") {
        LargeKernelOptions opts;
        opts.max_stages = o.stages;
        auto res = large_kernel(o.n, o.r, o.t, o.k, o.seed, opts);
        SUNFLOWER_ENSURE(max_cross_stage_intersection(res) + 1 <= static_cast<std::size_t>(o.t),
                         "cross-stage intersection exceeds t-1");
        stages = res.stages.size();
        theoretical = BigInt(res.stages.size()) * ((binomial(res.plan.s, o.r) + 3) / 4);
        h = std::move(res.graph);
    } else {
        h = clique_bound(o.n, o.r, o.t, o.k);
        theoretical = binomial(std::min(o.n, o.t + static_cast<int>(o.k) * (o.r - o.t) - 1), o.r);
    }
    const Json sidecar{{"construction", o.kind},
                       {"parameters", Json{{"n", o.n}, {"r", o.r}, {"t", o.t}, {"k", o.k}}},
                       {"seed", o.seed},
                       {"stages", stages},
                       {"edge_count", h.edge_count()},
                       {"theoretical_lower_bound", big(theoretical)}};
    if (!o.out.empty()) {
        write_hypergraph(o.out, h);
        std::ofstream side(o.out + ".json");
        if (!side) throw InvalidArgument("cannot write " + o.out + ".json");
        emit(side, sidecar);
    }
    if (o.json) {
        emit(out, sidecar);
    } else if (o.out.empty()) {
        header(out, "construct " + o.kind, o);
        out << serialize_hypergraph(h);
    } else {
        header(out, "construct " + o.kind, o);
        out << "edges=" << h.edge_count() << " written=" << o.out << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- exact

Json turan_row(const TuranResult& res) {
    const auto env = bound_envelope(res.n, res.r, res.t, res.k);
    Json exact = nullptr;
    if (res.exact_max) exact = *res.exact_max;
    return Json{{"n", res.n},
                {"r", res.r},
                {"t", res.t},
                {"k", res.k},
                {"exact", exact},
                {"lower", res.lower_witness.edge_count()},
                {"upper_trivial", big(binomial(res.n, res.r))},
                {"envelope", big(env.value)},
                {"regime", to_string(env.regime)},
                {"status", to_string(res.status)},
                {"nodes", res.nodes}};
}

int cmd_exact(const Options& o, std::ostream& out) {
    TuranOptions opts;
    if (o.budget) opts.node_budget = *o.budget;
    opts.ceiling = o.ceiling;
    opts.seed = o.seed;
    const auto res = estimate_turan(o.n, o.r, o.t, o.k, opts);
    SUNFLOWER_ENSURE(!find_sunflower(res.lower_witness, o.t, o.k), "reported witness contains a sunflower");
    if (!o.out.empty()) write_hypergraph(o.out, res.lower_witness);
    const Json row = turan_row(res);
    if (o.json) {
        emit(out, row);
    } else {
        header(out, "exact", o);
        for (const auto& [key, value] : row.items()) {
            out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    return res.status == TuranStatus::budget_exhausted ? kBudgetExhausted : kOk;
}

// ---------------------------------------------------------------- system-search

int cmd_system_search(const Options& o, std::ostream& out, std::ostream& err) {
    const auto res = search_system(o.t, o.N, o.budget.value_or(kDefaultSystemBudget));
    const char* status = res.status == SearchStatus::sat   ? "SAT"
                         : res.status == SearchStatus::unsat ? "UNSAT"
                                                             : "BUDGET-EXHAUSTED";
    Sink sink(out, o.out);
    if (o.json) {
        emit(*sink, Json{{"t", o.t},
                         {"N", o.N},
                         {"status", status},
                         {"nodes", res.nodes},
                         {"system", res.system ? to_json(*res.system) : Json(nullptr)}});
    } else {
        header(*sink, "system-search", o);
        *sink << status << '\n';
        if (res.system) emit(*sink, to_json(*res.system));
    }
    if (res.status == SearchStatus::budget_exhausted) return kBudgetExhausted;
    if (res.system && (o.N == 2 * o.t + 1 || prime_power(static_cast<std::uint64_t>(o.t) + 1))) {
        err << "error: a system was found where none can exist\n";
        return kInternalError;
    }
    return kOk;
}

// ---------------------------------------------------------------- lucas

int cmd_lucas(const Options& o, std::ostream& out) {
    Sink sink(out, o.out);
    if (!o.input.empty()) {
        const auto sys = set_system_from_json(read_json_file(o.input));
        const auto rep = inclusion_exclusion_residue(sys, o.t);
        Json terms = Json::array();
        for (const auto& term : rep.terms) {
            terms.push_back(Json{{"order", term.order}, {"value", big(term.value)}, {"residue", term.residue}});
        }
        Json minus_one = Json::array();
        for (const auto& a : rep.minus_one_members) minus_one.push_back(to_json(a));
        const Json j{{"t", o.t},
                     {"prime", rep.prime},
                     {"lhs", big(rep.lhs)},
                     {"lhs_residue", rep.lhs_residue},
                     {"rhs", big(rep.rhs)},
                     {"identity_holds", rep.identity_holds},
                     {"all_terms_vanish", rep.all_terms_vanish},
                     {"minus_one_members", minus_one},
                     {"contradiction_certified", rep.contradiction_certified},
                     {"terms", terms}};
        if (o.json) {
            emit(*sink, j);
        } else {
            header(*sink, "lucas", o);
            *sink << "C(N,t)=" << to_string(rep.lhs) << " mod " << rep.prime << " = " << rep.lhs_residue << '\n';
            for (const auto& term : rep.terms) {
                *sink << "order " << term.order << ": " << to_string(term.value) << " mod " << rep.prime << " = "
                      << term.residue << '\n';
            }
            *sink << "identity=" << (rep.identity_holds ? "holds" : "FAILS")
                  << " contradiction=" << (rep.contradiction_certified ? "certified" : "no") << '\n';
        }
        return rep.identity_holds ? kOk : kInternalError;
    }

    const std::int64_t lo = o.a >= 0 ? o.a : 0;
    const std::int64_t hi = o.a >= 0 ? o.a : o.max_a;
    Json rows = Json::array();
    std::size_t failures = 0;
    std::uint64_t prime = 0;
    std::ostringstream table;
    for (std::int64_t a = lo; a <= hi; ++a) {
        const auto c = lucas_residue_check(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(o.t));
        prime = c.prime;
        failures += c.equivalence_holds() ? 0 : 1;
        rows.push_back(Json{{"a", a},
                            {"binomial_residue", c.binomial_residue},
                            {"binomial_vanishes", c.binomial_vanishes},
                            {"not_minus_one", c.not_minus_one},
                            {"holds", c.equivalence_holds()}});
        table << a << ' ' << c.binomial_residue << ' ' << c.binomial_vanishes << ' ' << c.not_minus_one << ' '
              << (c.equivalence_holds() ? "ok" : "FAIL") << '\n';
    }
    if (o.json) {
        emit(*sink, Json{{"t", o.t}, {"prime", prime}, {"counterexamples", failures}, {"rows", rows}});
    } else {
        header(*sink, "lucas", o);
        *sink << "a residue vanishes not_minus_one verdict\n" << table.str();
        *sink << "counterexamples=" << failures << '\n';
    }
    return failures == 0 ? kOk : kInternalError;
}

// ---------------------------------------------------------------- frankl-katona

int cmd_frankl_katona(const Options& o, std::ostream& out) {
    Sink sink(out, o.out);
    if (!o.input.empty()) {
        const Json in = read_json_file(o.input);
        if (in.is_object() && in.contains("family")) {
            const auto sys = set_system_from_json(in);
            const int t = o.t >= 0 ? o.t : (sys.ground_size() - 1) / 2;
            const auto trace = refute_system_2t1(sys, t);
            if (o.json) {
                emit(*sink, Json{{"t", t}, {"steps", to_json(trace)}});
            } else {
                header(*sink, "frankl-katona", o);
                for (const auto& step : to_json(trace)) *sink << step.dump() << '\n';
            }
            return kOk;
        }
        if (!in.is_object() || !in.contains("m") || !in.contains("sets")) {
            throw InvalidArgument("expected {\"m\":int,\"sets\":[...]} or {\"N\":int,\"family\":[...]}");
        }
        const auto sets = sets_from_json(in.at("sets"));
        const auto w = frankl_katona(sets, in.at("m").get<int>());
        SUNFLOWER_ENSURE(verify_frankl_katona(sets, w), "witness failed verification");
        if (o.json) {
            emit(*sink, to_json(w));
        } else {
            header(*sink, "frankl-katona", o);
            *sink << "s=" << w.s << " indices=" << Json(w.indices).dump()
                  << " intersection=" << w.intersection.to_string() << '\n';
        }
        return kOk;
    }

    if (o.m < 0) throw InvalidArgument("frankl-katona needs --input or -m");
    Rng rng(o.seed);
    const std::uint64_t samples = o.samples.value_or(10'000);
    std::uint64_t failures = 0;
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(o.m) + 2, 0);
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<VertexSet> sets;
        for (int j = 0; j <= o.m; ++j) {
            std::vector<Vertex> v;
            for (Vertex x = 1; x <= o.m; ++x)
                if (rng.coin()) v.push_back(x);
            sets.push_back(VertexSet::from_sorted(std::move(v)));
        }
        const auto w = frankl_katona(sets, o.m);
        if (!verify_frankl_katona(sets, w)) ++failures;
        ++histogram[w.s];
    }
    if (o.json) {
        emit(*sink, Json{{"m", o.m}, {"samples", samples}, {"seed", o.seed}, {"failures", failures},
                         {"s_histogram", histogram}});
    } else {
        header(*sink, "frankl-katona", o);
        *sink << "m=" << o.m << " samples=" << samples << " failures=" << failures << '\n';
        for (std::size_t s = 1; s < histogram.size(); ++s) *sink << "s=" << s << ' ' << histogram[s] << '\n';
    }
    return failures == 0 ? kOk : kInternalError;
}

// ---------------------------------------------------------------- verify-reduction

int cmd_type_tuples(const Options& o, std::ostream& out) {
    const auto h = read_hypergraph(o.input);
    Sink sink(out, o.out);
    TypeTupleReport rep;
    try {
        rep = check_type_tuples(h, o.k);
    } catch (const SunflowerFound& e) {
        if (o.json) emit(*sink, Json{{"sunflower", to_json(std::optional(e.witness()))}});
        throw;
    }
    bool ok = true;
    Json classes = Json::array();
    for (const auto& cls : rep.classes) {
        ok = ok && cls.reaching && cls.contained;
        classes.push_back(Json{{"type", to_json(cls.type)},
                               {"edges", cls.edges},
                               {"reaching", cls.reaching ? to_json(*cls.reaching) : Json(nullptr)},
                               {"tuples", cls.tuples},
                               {"contained", cls.contained}});
    }
    if (o.json) {
        emit(*sink, Json{{"bound", big(rep.bound)}, {"total_edges", rep.total_edges}, {"classes", classes}});
    } else {
        header(*sink, "verify-reduction", o);
        *sink << "types=" << rep.classes.size() << " edges=" << rep.total_edges << " bound=" << to_string(rep.bound)
              << '\n';
        for (const auto& cls : rep.classes) {
            *sink << to_json(cls.type).dump() << " edges=" << cls.edges << " tuples=" << cls.tuples
                  << " contained=" << (cls.contained ? "yes" : "NO") << '\n';
        }
    }
    return ok ? kOk : kInternalError;
}

int cmd_verify_reduction(const Options& o, std::ostream& out) {
    if (!o.input.empty()) return cmd_type_tuples(o, out);
    DichotomyOptions opts;
    opts.mode = o.samples || o.t > 2 ? DichotomyMode::sampled : DichotomyMode::exhaustive;
    opts.samples = o.samples.value_or(100'000);
    opts.seed = o.seed;
    opts.threads = o.threads;
    const auto rep = dichotomy_check(o.t, opts);
    Json examples = Json::array();
    for (const auto& sys : rep.counterexamples) examples.push_back(to_json(sys));
    Sink sink(out, o.out);
    const char* mode = rep.mode == DichotomyMode::exhaustive ? "exhaustive" : "sampled";
    if (o.json) {
        emit(*sink, Json{{"t", rep.t},
                         {"mode", mode},
                         {"seed", o.seed},
                         {"examined", rep.examined},
                         {"reaching", rep.reaching},
                         {"stuck", rep.stuck},
                         {"systems_extracted", rep.systems_extracted},
                         {"invariant_failures", rep.invariant_failures},
                         {"counterexamples", examples}});
    } else {
        header(*sink, "verify-reduction", o);
        *sink << "t=" << rep.t << " mode=" << mode << " examined=" << rep.examined << '\n'
              << "reaching=" << rep.reaching << " stuck=" << rep.stuck << '\n'
              << "systems_extracted=" << rep.systems_extracted << " invariant_failures=" << rep.invariant_failures
              << '\n';
        for (const auto& e : examples) *sink << e.dump() << '\n';
    }
    const bool ok = rep.stuck == 0 && rep.systems_extracted == 0 && rep.invariant_failures == 0;
    return ok ? kOk : kInternalError;
}

// ---------------------------------------------------------------- bound-check

int cmd_star_bound(const Options& o, std::ostream& out) {
    const auto h = read_hypergraph(o.input);
    const int ell = o.ell >= 0 ? o.ell : std::max(o.t, 0);
    const auto rep = forbidden_star_edge_bound(h, ell, o.k, o.threads);
    Sink sink(out, o.out);
    Json levels = Json::array();
    for (const auto& l : rep.levels) {
        levels.push_back(Json{{"set_size", l.set_size},
                              {"sets_checked", l.sets_checked},
                              {"max_link", l.max_link},
                              {"link_bound", big(l.link_bound)},
                              {"max_cover", l.max_cover},
                              {"cover_bound", l.cover_bound},
                              {"violations", l.violations}});
    }
    if (o.json) {
        emit(*sink, Json{{"ell", ell},
                         {"k", o.k},
                         {"precondition_violation", to_json(rep.precondition_violation)},
                         {"edge_count", rep.edge_count},
                         {"total_bound", big(rep.total_bound)},
                         {"holds", rep.holds},
                         {"levels", levels}});
    } else {
        header(*sink, "bound-check", o);
        if (rep.precondition_violation) {
            const auto& w = *rep.precondition_violation;
            *sink << "precondition violated: sunflower t=" << w.t << " kernel=" << w.kernel.to_string()
                  << " petals=" << petals_text(w) << '\n';
        } else {
            for (const auto& l : rep.levels) {
                *sink << "|S|=" << l.set_size << " max_link=" << l.max_link << " bound=" << to_string(l.link_bound)
                      << " max_cover=" << l.max_cover << " cover_bound=" << l.cover_bound
                      << " violations=" << l.violations << '\n';
            }
            *sink << "edges=" << rep.edge_count << " total_bound=" << to_string(rep.total_bound)
                  << " holds=" << (rep.holds ? "yes" : "NO") << '\n';
        }
    }
    if (rep.precondition_violation) return kDomainError;
    return rep.holds ? kOk : kInternalError;
}

struct ConstructionCount {
    std::string name;
    std::size_t edges;
};

std::vector<ConstructionCount> construction_counts(int n, int r, int t, std::size_t k, std::uint64_t seed) {
    std::vector<ConstructionCount> out;
    auto attempt = [&](const char* name, auto&& build) {
        try {
            out.push_back({name, build().edge_count()});
        } catch (const InvalidArgument&) {
        } catch (const BudgetExhausted&) {
        }
    };
    attempt("clique", [&] { return clique_bound(n, r, t, k); });
    attempt("small-kernel", [&] { return small_kernel(n, r, t, k); });
    attempt("large-kernel", [&] { return large_kernel(n, r, t, k, seed).graph; });
    attempt("greedy", [&] { return greedy_lower(n, r, t, k, seed); });
    return out;
}

int cmd_bound_check(const Options& o, std::ostream& out) {
    if (!o.input.empty()) return cmd_star_bound(o, out);
    if (o.n < 0 || o.r < 0 || o.t < 0 || o.k == 0) {
        throw InvalidArgument("bound-check needs --input, or -n -r -t -k");
    }
    const auto env = bound_envelope(o.n, o.r, o.t, o.k);
    const auto counts = construction_counts(o.n, o.r, o.t, o.k, o.seed);
    const double formula = to_double(env.value);
    Sink sink(out, o.out);
    Json rows = Json::array();
    for (const auto& c : counts) {
        rows.push_back(Json{{"construction", c.name}, {"edges", c.edges},
                            {"ratio", formula > 0 ? static_cast<double>(c.edges) / formula : 0.0}});
    }
    if (o.json) {
        emit(*sink, Json{{"n", o.n},
                         {"r", o.r},
                         {"t", o.t},
                         {"k", o.k},
                         {"seed", o.seed},
                         {"regime", to_string(env.regime)},
                         {"balanced", env.balanced},
                         {"envelope", big(env.value)},
                         {"constructions", rows}});
    } else {
        header(*sink, "bound-check", o);
        *sink << "regime=" << to_string(env.regime) << (env.balanced ? " (balanced)" : "")
              << " envelope=" << to_string(env.value) << '\n';
        for (const auto& c : counts) {
            *sink << c.name << " edges=" << c.edges << " ratio=" << fixed(static_cast<double>(c.edges) / formula)
                  << '\n';
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const Options& o, std::ostream& out) {
    const int n_max = o.n >= 0 ? o.n : 8;
    std::vector<int> rs = o.r >= 0 ? std::vector<int>{o.r} : std::vector<int>{2, 3};
    std::vector<std::size_t> ks = o.k > 0 ? std::vector<std::size_t>{o.k} : std::vector<std::size_t>{2, 3};
    TuranOptions opts;
    if (o.budget) opts.node_budget = *o.budget;
    opts.ceiling = o.ceiling;
    opts.seed = o.seed;

    Json rows = Json::array();
    bool budget_hit = false;
    for (int n = std::max(o.n_min, 1); n <= n_max; ++n) {
        for (int r : rs) {
            if (r > n) continue;
            for (int t = 0; t < r; ++t) {
                if (o.t >= 0 && t != o.t) continue;
                for (std::size_t k : ks) {
                    const auto res = estimate_turan(n, r, t, k, opts);
                    budget_hit = budget_hit || res.status == TuranStatus::budget_exhausted;
                    Json row = turan_row(res);
                    std::size_t best = 0;
                    for (const auto& c : construction_counts(n, r, t, k, o.seed)) {
                        if (c.name != "greedy") best = std::max(best, c.edges);
                    }
                    if (res.exact_max) {
                        SUNFLOWER_ENSURE(best <= *res.exact_max, "a construction beats the exact maximum");
                    }
                    row["best_construction"] = best;
                    const double formula = to_double(bound_envelope(n, r, t, k).value);
                    row["ratio"] = formula > 0 ? static_cast<double>(best) / formula : 0.0;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    Sink sink(out, o.out);
    if (o.json) {
        emit(*sink, Json{{"seed", o.seed}, {"rows", rows}});
    } else {
        header(*sink, "bench", o);
        *sink << "n,r,t,k,exact,lower,upper_trivial,envelope,regime,status,best_construction,ratio\n";
        for (const auto& row : rows) {
            auto field = [&](const char* key) {
                const auto& v = row.at(key);
                if (v.is_null()) return std::string();
                if (v.is_string()) return v.get<std::string>();
                if (v.is_number_float()) return fixed(v.get<double>());
                return v.dump();
            };
            *sink << field("n") << ',' << field("r") << ',' << field("t") << ',' << field("k") << ','
                  << field("exact") << ',' << field("lower") << ',' << field("upper_trivial") << ','
                  << field("envelope") << ',' << field("regime") << ',' << field("status") << ','
                  << field("best_construction") << ',' << field("ratio") << '\n';
        }
    }
    return budget_hit ? kBudgetExhausted : kOk;
}

// ---------------------------------------------------------------- wiring

void configure_logging(std::ostream& err) {
    static std::shared_ptr<spdlog::logger> logger;
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    logger = std::make_shared<spdlog::logger>("sunflower", sink);
    logger->set_pattern("[%l] %v");
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("SUNFLOWER_LOG")) level = spdlog::level::from_str(env);
    logger->set_level(level);
    spdlog::set_default_logger(logger);
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    configure_logging(err);
    Options o;
    CLI::App app{"Sunflower-free hypergraphs: detection, constructions, set systems and exact Turán numbers",
                 "sunflower"};
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "RNG seed (default 0)");
        sub->add_flag("--json", o.json, "Emit JSON");
        sub->add_option("--out", o.out, "Output path");
    };
    auto add_nrtk = [&](CLI::App* sub, bool required) {
        auto* n = sub->add_option("-n", o.n, "Vertex count");
        auto* r = sub->add_option("-r", o.r, "Uniformity");
        auto* t = sub->add_option("-t", o.t, "Kernel size");
        auto* k = sub->add_option("-k", o.k, "Petal count");
        if (required) {
            for (auto* opt : {n, r, t, k}) opt->required();
        }
    };

    auto* find = app.add_subcommand("find", "Find a sunflower S(r,t,k) in a hypergraph");
    find->add_option("--input", o.input, "Hypergraph (.hg)")->required()->check(CLI::ExistingFile);
    auto* find_t = find->add_option("-t", o.t, "Kernel size");
    auto* find_sizes = find->add_option("--kernel-sizes", o.kernel_sizes, "Check several kernel sizes at once")
                           ->delimiter(',');
    find_t->excludes(find_sizes);
    find->add_option("-k", o.k, "Petal count")->required();
    find->add_option("--threads", o.threads, "Worker threads");
    add_common(find);

    auto* construct = app.add_subcommand("construct", "Build an S(r,t,k)-free hypergraph");
    construct->add_option("kind", o.kind, "small-kernel | large-kernel | clique")
        ->required()
        ->check(CLI::IsMember({"small-kernel", "large-kernel", "clique"}));
    add_nrtk(construct, true);
    construct->add_option("--stages", o.stages, "Cap on large-kernel stages");
    add_common(construct);

    auto* exact = app.add_subcommand("exact", "Exact ex(n,S(r,t,k)) by branch and bound");
    add_nrtk(exact, true);
    exact->add_option("--budget", o.budget, "Search node budget");
    exact->add_option("--ceiling", o.ceiling, "Largest C(n,r) searched exactly");
    add_common(exact);

    auto* system = app.add_subcommand("system-search", "Search for a (t+1,t)-system on [N]");
    system->add_option("-t", o.t, "t")->required();
    system->add_option("-N", o.N, "Ground set size")->required();
    system->add_option("--budget", o.budget, "Search node budget");
    add_common(system);

    auto* lucas = app.add_subcommand("lucas", "Binomial residues mod p, or the inclusion-exclusion residue report");
    lucas->add_option("-t", o.t, "t, with t+1 a prime power")->required();
    lucas->add_option("-a", o.a, "Single value of a");
    lucas->add_option("--max-a", o.max_a, "Sweep a = 0..max-a (default 300)");
    lucas->add_option("--input", o.input, "Set system JSON for the inclusion-exclusion report")
        ->check(CLI::ExistingFile);
    add_common(lucas);

    auto* fk = app.add_subcommand("frankl-katona", "Frankl-Katona witnesses and refutation traces");
    fk->add_option("--input", o.input, "{m, sets} collection or {N, family} family")->check(CLI::ExistingFile);
    fk->add_option("-m", o.m, "Random collections of m+1 subsets of [m]");
    fk->add_option("-t", o.t, "t for refutation traces (default (N-1)/2)");
    fk->add_option("--samples", o.samples, "Random collections to check");
    add_common(fk);

    auto* reduction = app.add_subcommand("verify-reduction", "Type-function dichotomy, or type tuples of a graph");
    reduction->add_option("-t", o.t, "t (types on [2t+1])");
    reduction->add_option("--samples", o.samples, "Sample this many types instead of all");
    reduction->add_option("--threads", o.threads, "Worker threads");
    reduction->add_option("--input", o.input, "(2t+1)-uniform hypergraph for type tuples")->check(CLI::ExistingFile);
    reduction->add_option("-k", o.k, "Petal count (with --input)");
    add_common(reduction);

    auto* bound = app.add_subcommand("bound-check", "Link-size bounds of a graph, or bound envelopes");
    add_nrtk(bound, false);
    bound->add_option("--input", o.input, "Hypergraph (.hg)")->check(CLI::ExistingFile);
    bound->add_option("-l", o.ell, "Smallest forbidden kernel size");
    bound->add_option("--threads", o.threads, "Worker threads");
    add_common(bound);

    auto* bench = app.add_subcommand("bench", "Turán table over a parameter grid");
    add_nrtk(bench, false);
    bench->add_option("--n-min", o.n_min, "Smallest n (default 4)");
    bench->add_option("--budget", o.budget, "Node budget per exact search");
    bench->add_option("--ceiling", o.ceiling, "Largest C(n,r) searched exactly");
    add_common(bench);

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*find) {
            if (find_sizes->count() == 0 && find_t->count() == 0) throw InvalidArgument("find needs -t or --kernel-sizes");
            return cmd_find(o, out);
        }
        if (*construct) return cmd_construct(o, out);
        if (*exact) return cmd_exact(o, out);
        if (*system) return cmd_system_search(o, out, err);
        if (*lucas) return cmd_lucas(o, out);
        if (*fk) return cmd_frankl_katona(o, out);
        if (*reduction) {
            if (o.input.empty() && o.t < 0) throw InvalidArgument("verify-reduction needs -t or --input");
            if (!o.input.empty() && o.k == 0) throw InvalidArgument("verify-reduction --input needs -k");
            return cmd_verify_reduction(o, out);
        }
        if (*bound) {
            if (!o.input.empty() && o.k == 0) throw InvalidArgument("bound-check --input needs -k");
            return cmd_bound_check(o, out);
        }
        if (*bench) return cmd_bench(o, out);
    } catch (const SunflowerFound& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << '\n';
        return kBudgetExhausted;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsage;
}

}  // namespace sunflower::cli
