#include "ultraword/json_io.hpp"

namespace ultraword::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(std::string("field '") + what + "' has the wrong type: " + j.dump());
    }
}

SentenceSet sentence_set(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string("'") + what + "' must be an array of strings");
    SentenceSet out;
    for (const auto& s : j) out.insert(as<std::string>(s, what));
    return out;
}

Json string_array(const SentenceSet& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

}  // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail("rational must be a \"p/q\" string or an integer, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

Json to_json(const EpsilonSeries& s) {
    Json out = Json::array();
    for (const auto& [k, q] : s.terms()) out.push_back(Json::array({k, q.str()}));
    return out;
}

EpsilonSeries series_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return EpsilonSeries(rational_from_json(j));
    if (!j.is_array()) fail("epsilon series must be a list of [exponent, \"p/q\"] pairs, got " + j.dump());
    EpsilonSeries out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
            fail("series term must be [exponent, \"p/q\"], got " + term.dump());
        out = out + EpsilonSeries::monomial(rational_from_json(term[1]), term[0].get<long>());
    }
    return out;
}

Json to_json(const HyperNatural& h) {
    if (const auto* s = h.as_standard()) return s->value;
    const auto* inf = h.as_infinite();
    return Json{{"inf", inf->label}, {"offset", inf->offset}};
}

HyperNatural hypernatural_from_json(const Json& j) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long>() >= 0))
        return HyperNatural::standard(j.get<std::uint64_t>());
    if (j.is_object()) {
        const auto label = as<std::string>(field(j, "inf"), "inf");
        const std::int64_t offset = j.contains("offset") ? as<std::int64_t>(j["offset"], "offset") : 0;
        return HyperNatural::infinite(label, offset);
    }
    fail("hypernatural must be a natural number or {\"inf\": label, \"offset\": k}, got " + j.dump());
}

Json to_json(const SubparticleRep& s) {
    Json out = Json::array({to_json(s.first()), to_json(s.second())});
    for (const auto& a : s.tail()) out.push_back(to_json(a));
    return out;
}

SubparticleRep subparticle_from_json(const Json& j) {
    if (!j.is_array() || j.size() < 3) fail("subparticle representation needs at least 3 coordinates: " + j.dump());
    std::vector<EpsilonSeries> tail;
    for (std::size_t k = 2; k < j.size(); ++k) tail.push_back(series_from_json(j[k]));
    return SubparticleRep(hypernatural_from_json(j[0]), hypernatural_from_json(j[1]), std::move(tail));
}

Json to_json(const SubparticleSet& set) {
    Json out = Json::array();
    for (const auto& s : set) out.push_back(to_json(s));
    return out;
}

SubparticleFile subparticle_file_from_json(const Json& j) {
    SubparticleFile out;
    out.arity = as<std::size_t>(field(j, "arity"), "arity");
    const Json& members = field(j, "members");
    if (!members.is_array()) fail("'members' must be an array");
    for (const auto& m : members) out.members.push_back(subparticle_from_json(m));
    return out;
}

Json to_json(const LogicSystem& ls) {
    Json rules = Json::array();
    for (const auto& r : ls.canonical_rules())
        rules.push_back(Json{{"premises", string_array(r.premises)}, {"conclusion", r.conclusion}});
    return Json{{"language", string_array(ls.language())}, {"rules", rules}};
}

LogicSystem logic_system_from_json(const Json& j) {
    SentenceSet language = sentence_set(field(j, "language"), "language");
    const Json& rules_json = field(j, "rules");
    if (!rules_json.is_array()) fail("'rules' must be an array");
    std::vector<Rule> rules;
    for (const auto& r : rules_json)
        rules.push_back(
            {sentence_set(field(r, "premises"), "premises"), as<std::string>(field(r, "conclusion"), "conclusion")});
    return LogicSystem(std::move(language), std::move(rules));
}

Json to_json(const ClosureResult& r) {
    Json order = Json::array();
    for (const auto& rule : r.derivation_order)
        order.push_back(Json{{"premises", string_array(rule.premises)}, {"conclusion", rule.conclusion}});
    return Json{{"closure", string_array(r.closure)}, {"derivation_order", order}};
}

std::vector<Observation> observations_from_json(const Json& j) {
    if (!j.is_array()) fail("observation file must be an array of {\"X\", \"Xprime\"} objects");
    std::vector<Observation> out;
    for (const auto& o : j) out.push_back({sentence_set(field(o, "X"), "X"), sentence_set(field(o, "Xprime"), "Xprime")});
    return out;
}

Json to_json(const std::vector<PartitionPoint>& points) {
    Json out = Json::array();
    for (const auto& p : points) out.push_back(Json{{"i", p.index.i.get_str()}, {"j", p.index.j}, {"t", p.t.str()}});
    return out;
}

Json to_json(const FrozenSegment& s) { return s.text(); }

Json segment_entry(const IndexPair& idx, const FrozenSegment& s) {
    return Json{{"i", idx.i.get_str()}, {"j", idx.j}, {"t", s.time_id().str()}, {"clause", s.naming_clause()},
                {"text", s.text()}};
}

Json to_json(const ConjunctionWord& w) { return w.text(); }

Json to_json(const SDecomposition& d) {
    Json Q = Json::array();
    for (const auto& q : d.conjunctions) Q.push_back(q.text());
    Json atoms = Json::array();
    for (const auto& a : d.atoms) atoms.push_back(a.text());
    return Json{{"mode", std::string(to_string(d.mode))},
                {"A", string_array(d.axioms)},
                {"Q", Q},
                {"d", atoms},
                {"pairwise_disjoint", d.pairwise_disjoint()},
                {"cardinalities",
                 {{"A", d.axioms.size()}, {"Q", d.conjunctions.size()}, {"d", d.atoms.size()}, {"total", d.size()}}}};
}

Json to_json(const SignatureTuple& t) { return Json{{"premises", t.premises}, {"conclusion", t.conclusion}}; }

Json to_json(const std::set<SignatureTuple>& tuples) {
    Json out = Json::array();
    for (const auto& t : tuples) out.push_back(to_json(t));
    return out;
}

PartitionScheme ParadigmSpec::scheme() const {
    if (q == 1) {
        if (!m) throw Error(ErrorKind::InvalidScheme, "q=1 needs 'm'");
        const Rational bound = b ? *b : Rational(Integer(static_cast<unsigned long>(*m)), Integer(static_cast<unsigned long>(K)));
        return PartitionScheme(K, IntervalKind::bounded(bound, *m));
    }
    return PartitionScheme(K, IntervalKind::from_q(q));
}

DevelopmentalParadigm ParadigmSpec::paradigm() const {
    BodyRule rule;
    if (bodies.is_string()) {
        rule = template_bodies(bodies.get<std::string>());
    } else if (bodies.is_array()) {
        std::vector<Word> words;
        for (const auto& w : bodies) words.push_back(Word::from_text(as<std::string>(w, "bodies")));
        rule = literal_bodies(std::move(words));
    } else {
        fail("'bodies' must be a template string or a list of body texts");
    }
    return DevelopmentalParadigm(scheme(), std::move(rule), mode, id);
}

ParadigmSpec paradigm_spec_from_json(const Json& j) {
    ParadigmSpec spec;
    spec.q = as<int>(field(j, "q"), "q");
    const long K = as<long>(field(j, "K"), "K");
    if (K <= 0) throw Error(ErrorKind::InvalidScheme, "K must be positive");
    spec.K = static_cast<std::uint64_t>(K);
    if (j.contains("b")) spec.b = rational_from_json(j["b"]);
    if (j.contains("m")) {
        const long m = as<long>(j["m"], "m");
        if (m <= 0) throw Error(ErrorKind::InvalidScheme, "m must be positive");
        spec.m = static_cast<std::uint64_t>(m);
    }
    if (j.contains("mode")) spec.mode = segment_mode_from_string(as<std::string>(j["mode"], "mode"));
    if (j.contains("id")) spec.id = as<std::string>(j["id"], "id");
    if (j.contains("bodies")) spec.bodies = j["bodies"];
    if (spec.q == 1 && !spec.m) throw Error(ErrorKind::InvalidScheme, "q=1 needs 'm'");
    return spec;
}

}  // namespace ultraword::json_io
