#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of the library types.
 *
 * Rational            "p/q" or "p"
 * EpsilonSeries       [[exponent, "p/q"], ...] sorted by exponent
 * HyperNatural        n  or  {"inf": "λ", "offset": 0}
 * rule file           {"language": [...], "rules": [{"premises": [...], "conclusion": "..."}]}
 * observation file    [{"X": [...], "Xprime": [...]}, ...]
 * subparticle file    {"arity": n, "members": [[hypernat, hypernat, series, ...], ...]}
 * paradigm spec       {"q", "K", "b" (q=1), "m" (q=1), "mode", "bodies", "id"}
 *
 * Every reader throws Error(ParseError) on malformed input; domain checks of
 * the constructed values raise their own kinds.
 */

#include <string>
#include <vector>

#include "json.hpp"

#include "ultraword/consequence.hpp"
#include "ultraword/hyperreal.hpp"
#include "ultraword/language.hpp"
#include "ultraword/numerics.hpp"
#include "ultraword/order_time.hpp"
#include "ultraword/paradigm.hpp"
#include "ultraword/signatures.hpp"

namespace ultraword::json_io {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const EpsilonSeries& s);
/// Also accepts a bare rational string or integer as a constant series.
EpsilonSeries series_from_json(const Json& j);

Json to_json(const HyperNatural& h);
HyperNatural hypernatural_from_json(const Json& j);

Json to_json(const SubparticleRep& s);
SubparticleRep subparticle_from_json(const Json& j);
Json to_json(const SubparticleSet& set);

struct SubparticleFile {
    std::size_t arity = 3;
    std::vector<SubparticleRep> members;
};
SubparticleFile subparticle_file_from_json(const Json& j);

Json to_json(const LogicSystem& ls);
LogicSystem logic_system_from_json(const Json& j);

Json to_json(const ClosureResult& r);

std::vector<Observation> observations_from_json(const Json& j);

Json to_json(const std::vector<PartitionPoint>& points);

Json to_json(const FrozenSegment& s);
/// {"i", "j", "t", "clause", "text"}
Json segment_entry(const IndexPair& idx, const FrozenSegment& s);

Json to_json(const ConjunctionWord& w);

Json to_json(const SDecomposition& d);

Json to_json(const SignatureTuple& t);
Json to_json(const std::set<SignatureTuple>& tuples);

struct ParadigmSpec {
    int q = 4;
    std::uint64_t K = 1;
    std::optional<Rational> b;
    std::optional<std::uint64_t> m;
    SegmentMode mode = SegmentMode::description;
    std::string id = "D";
    /// Either a template string or a literal list of body texts.
    Json bodies = "event {i} {j}";

    PartitionScheme scheme() const;
    DevelopmentalParadigm paradigm() const;
};
ParadigmSpec paradigm_spec_from_json(const Json& j);

/// Parses text, mapping nlohmann parse failures to ParseError.
Json parse(const std::string& text);

}  // namespace ultraword::json_io
