#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "sunflower/combinatorics.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/frankl_katona.hpp"
#include "sunflower/reduction.hpp"
#include "sunflower/set_system.hpp"
#include "sunflower/sunflower.hpp"
#include "sunflower/turan.hpp"

namespace sunflower::cli {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become numbers, larger ones decimal strings.
Json big(const BigInt& v);

Json to_json(const VertexSet& s);
/// null encodes freeness.
Json to_json(const std::optional<SunflowerWitness>& w);
Json to_json(const SetSystem& sys);
/// [[I, f(I)], ...] in domain order.
Json to_json(const TypeFunction& f);
Json to_json(const ExtendingTrace& trace);
Json to_json(const FranklKatonaWitness& w);
Json to_json(const RefutationTrace& trace);
Json to_json(const Hypergraph& h);

SetSystem set_system_from_json(const Json& j);
std::vector<VertexSet> sets_from_json(const Json& j);

}  // namespace sunflower::cli
