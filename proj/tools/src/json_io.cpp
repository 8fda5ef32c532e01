#include "json_io.hpp"

#include <limits>

namespace sunflower::cli {

Json big(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return to_string(v);
}

Json to_json(const VertexSet& s) { return Json(s.vector()); }

Json to_json(const std::optional<SunflowerWitness>& w) {
    if (!w) return nullptr;
    Json petals = Json::array();
    for (const auto& p : w->petals) petals.push_back(to_json(p));
    return Json{{"kernel", to_json(w->kernel)}, {"petals", petals}, {"t", w->t}, {"k", w->k}};
}

Json to_json(const SetSystem& sys) {
    Json family = Json::array();
    for (const auto& a : sys.family()) family.push_back(to_json(a));
    return Json{{"N", sys.ground_size()}, {"family", family}};
}

Json to_json(const TypeFunction& f) {
    Json out = Json::array();
    for (std::size_t i = 0; i < f.domain().size(); ++i) {
        out.push_back(Json::array({to_json(f.domain()[i]), f.images()[i]}));
    }
    return out;
}

Json to_json(const ExtendingTrace& trace) {
    Json steps = Json::array();
    steps.push_back(Json{{"step", 0}, {"set", to_json(trace.start)}});
    for (std::size_t i = 0; i < trace.aux.size(); ++i) {
        const auto added = trace.chain[i + 1].minus(trace.chain[i]);
        steps.push_back(Json{{"step", i + 1},
                             {"via", to_json(trace.aux[i])},
                             {"added", added[0]},
                             {"set", to_json(trace.chain[i + 1])}});
    }
    return steps;
}

Json to_json(const FranklKatonaWitness& w) {
    return Json{{"s", w.s}, {"indices", w.indices}, {"intersection", to_json(w.intersection)}};
}

Json to_json(const RefutationTrace& trace) {
    Json steps = Json::array();
    if (trace.full_set_member) {
        steps.push_back(Json{{"step", "full_set_member"}, {"set", to_json(trace.member)}});
        return steps;
    }
    steps.push_back(Json{{"step", "minimal_uncovered"}, {"set", to_json(trace.minimal_uncovered)}});
    steps.push_back(Json{{"step", "pivots"}, {"set", to_json(trace.pivots)}});
    for (std::size_t i = 0; i < trace.chosen.size(); ++i) {
        steps.push_back(Json{{"step", "choose"},
                             {"pivot", trace.pivots[i]},
                             {"member", to_json(trace.chosen[i])},
                             {"outside", to_json(trace.outside[i])}});
    }
    Json fk = to_json(trace.fk);
    fk["step"] = "frankl_katona";
    steps.push_back(fk);
    steps.push_back(Json{{"step", "member"}, {"set", to_json(trace.member)}, {"size", trace.member.size()}});
    return steps;
}

Json to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back(to_json(e));
    return Json{{"n", h.n()}, {"r", h.r()}, {"edges", edges}};
}

std::vector<VertexSet> sets_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected an array of vertex lists");
    std::vector<VertexSet> out;
    for (const auto& s : j) {
        if (!s.is_array()) throw InvalidArgument("expected a vertex list");
        out.emplace_back(s.get<std::vector<Vertex>>());
    }
    return out;
}

SetSystem set_system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("family")) {
        throw InvalidArgument("set system JSON needs fields N and family");
    }
    return SetSystem(j.at("N").get<int>(), sets_from_json(j.at("family")));
}

}  // namespace sunflower::cli
