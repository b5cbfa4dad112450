#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ultraword/json_io.hpp"
#include "ultraword/ultraword.hpp"

namespace ultraword::cli {

namespace {

using json_io::Json;

// ---------------------------------------------------------------- flag table

struct FlagSpec {
    const char* name;
    const char* help;
    bool is_switch = false;
};

struct CommandSpec {
    const char* name;
    const char* help;
    std::vector<FlagSpec> flags;
    std::vector<const char*> required;
};

const std::vector<CommandSpec>& command_specs() {
    static const std::vector<CommandSpec> specs = {
        {"points",
         "partition points t(i,j) as CSV or JSON",
         {{"q", "interval kind 1..4 (default 4)"},
          {"K", "partition denominator, positive (default 1)"},
          {"b", "right end of the bounded interval, q=1 (default m/K)"},
          {"m", "number of subintervals, q=1"},
          {"i", "row range lo..hi"},
          {"j-max", "largest column index"},
          {"format", "csv|json (default csv)"}},
         {"i", "j-max"}},
        {"paradigm",
         "ordered frozen-segment listing of a paradigm",
         {{"spec", "paradigm spec JSON file"}, {"i", "row range lo..hi"}, {"j-max", "largest column index"}},
         {"spec", "i", "j-max"}},
        {"ultraword",
         "conjunction word over the H-set of a truncation",
         {{"spec", "paradigm spec JSON file"},
          {"m", "left (q=2,3,4) or right (q=1) truncation row"},
          {"p", "right truncation row, q=4 (default 0)"},
          {"n", "column truncation"}},
         {"spec", "m", "n"}},
        {"closure",
         "closure of a premise set under a rule file",
         {{"rules", "rule file JSON"}, {"premises", "comma-separated premises (default none)"},
          {"order", "canonical|as_given (default canonical)"}},
         {"rules"}},
        {"decompose",
         "S({w}) = A ∪ Q ∪ d for a conjunction word",
         {{"spec", "paradigm spec JSON file"},
          {"indices", "conjunct indices i:j,i:j,..."},
          {"m", "truncation row (instead of --indices)"},
          {"p", "right truncation row, q=4"},
          {"n", "column truncation"},
          {"mode", "canonical|permutational (default canonical)"},
          {"axioms", "comma-separated axiom sentences"}},
         {"spec"}},
        {"signature",
         "behavior and theory signatures of a perceived context",
         {{"rules", "rule file JSON"},
          {"perceived", "comma-separated perceived sentences P"},
          {"source", "comma-separated X ⊆ P for a behavior signature"},
          {"theory", "emit the theory signature", true},
          {"tag", "J' tag (default †)"}},
         {"rules", "perceived"}},
        {"converse",
         "RI' from observation pairs, plus separate-vs-union",
         {{"observations", "observation file JSON"}, {"premises", "comma-separated premises for the comparison"}},
         {"observations"}},
        {"st",
         "standard parts of a subparticle file",
         {{"input", "subparticle file JSON"}},
         {"input"}},
        {"check",
         "consequence-axiom sweep",
         {{"target", "closure|st|signature"},
          {"seed", "random seed (default 20060504)"},
          {"samples", "number of random cases (default 50)"},
          {"size", "largest random universe (default 6, signature 5)"},
          {"rules", "check this rule file instead of random systems"},
          {"perceived", "perceived set for --rules with target signature"},
          {"input", "check this subparticle file instead of random universes"}},
         {"target"}},
    };
    return specs;
}

const CommandSpec* find_command(const std::string& name) {
    for (const auto& c : command_specs())
        if (name == c.name) return &c;
    return nullptr;
}

bool knows_flag(const CommandSpec& c, const std::string& flag) {
    for (const auto& f : c.flags)
        if (flag == f.name) return true;
    return false;
}

// ------------------------------------------------------------------- logging

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("ULTRAWORD_LOG");
    if (!env) return LogLevel::error;
    const std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::error;
}

void log(std::ostream& err, LogLevel level, const std::string& msg) {
    static const char* names[] = {"error", "info", "debug"};
    if (level <= log_level()) err << "ultraword: " << names[static_cast<int>(level)] << ": " << msg << "\n";
}

// ---------------------------------------------------------- value parsing

long parse_long(const std::string& flag, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long out = std::stol(v, &pos);
        if (pos == v.size()) return out;
    } catch (const std::exception&) {
    }
    throw UsageError("--" + flag + ": expected an integer, got '" + v + "'");
}

std::uint64_t parse_natural(const std::string& flag, const std::string& v, bool positive) {
    const long n = parse_long(flag, v);
    if (n < 0 || (positive && n == 0))
        throw UsageError("--" + flag + " must be " + (positive ? "positive" : "non-negative") + ", got " + v);
    return static_cast<std::uint64_t>(n);
}

std::pair<long, long> parse_range(const std::string& flag, const std::string& v) {
    const auto dots = v.find("..");
    if (dots == std::string::npos) throw UsageError("--" + flag + ": expected lo..hi, got '" + v + "'");
    const long lo = parse_long(flag, v.substr(0, dots));
    const long hi = parse_long(flag, v.substr(dots + 2));
    if (lo > hi) throw UsageError("--" + flag + ": empty range " + v);
    return {lo, hi};
}

SentenceSet parse_list(const std::string& v) {
    SentenceSet out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

void expect_one_of(const std::string& flag, const std::string& v, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (v == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw UsageError("--" + flag + ": expected " + list + ", got '" + v + "'");
}

/// Early checks that need no files: numeric shape and enumerations.
void validate_flags(const Invocation& inv) {
    const auto& f = inv.flags;
    auto has = [&](const char* k) { return f.count(k) != 0; };
    if (has("K")) parse_natural("K", f.at("K"), true);
    if (has("q")) {
        const long q = parse_long("q", f.at("q"));
        if (q < 1 || q > 4) throw UsageError("--q must be 1, 2, 3 or 4, got " + f.at("q"));
    }
    if (has("i")) parse_range("i", f.at("i"));
    if (has("j-max")) parse_natural("j-max", f.at("j-max"), false);
    if (has("n")) parse_natural("n", f.at("n"), false);
    if (has("m")) parse_long("m", f.at("m"));
    if (has("p")) parse_long("p", f.at("p"));
    if (has("seed")) parse_natural("seed", f.at("seed"), false);
    if (has("samples")) parse_natural("samples", f.at("samples"), true);
    if (has("size")) parse_natural("size", f.at("size"), true);
    if (has("format")) expect_one_of("format", f.at("format"), {"csv", "json"});
    if (has("order")) expect_one_of("order", f.at("order"), {"canonical", "as_given"});
    if (has("mode")) expect_one_of("mode", f.at("mode"), {"canonical", "permutational"});
    if (has("target")) expect_one_of("target", f.at("target"), {"closure", "st", "signature"});
    if (inv.command == "decompose" && has("indices") && (has("m") || has("n")))
        throw UsageError("--indices: give either --indices or a truncation (--m/--n), not both");
    if (inv.command == "decompose" && has("spec") && !has("indices") && !(has("m") && has("n")))
        throw UsageError("--indices: decompose needs --indices or both --m and --n");
}

// ----------------------------------------------------------------- file io

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) { return json_io::parse(read_file(path)); }

/// Merges {"<command>": {flag: value}} defaults from a config file.
void apply_config(Invocation& inv, const std::string& path) {
    const Json cfg = read_json(path);
    if (!cfg.is_object()) throw Error(ErrorKind::ParseError, "config must be a JSON object keyed by command");
    const auto it = cfg.find(inv.command);
    if (it == cfg.end()) return;
    if (!it->is_object()) throw Error(ErrorKind::ParseError, "config section '" + inv.command + "' must be an object");
    const CommandSpec& spec = *find_command(inv.command);
    for (const auto& [key, value] : it->items()) {
        if (!knows_flag(spec, key)) throw UsageError("--" + key + ": unknown flag in config section '" + inv.command + "'");
        if (inv.flags.count(key)) continue;  // command line wins
        if (value.is_string())
            inv.flags[key] = value.get<std::string>();
        else if (value.is_boolean())
            inv.flags[key] = value.get<bool>() ? "true" : "false";
        else
            inv.flags[key] = value.dump();
    }
}

// ----------------------------------------------------------- shared helpers

json_io::ParadigmSpec load_spec(const Invocation& inv) { return json_io::paradigm_spec_from_json(read_json(inv.flags.at("spec"))); }

std::string flag_or(const Invocation& inv, const char* k, const std::string& fallback) {
    const auto it = inv.flags.find(k);
    return it == inv.flags.end() ? fallback : it->second;
}

TruncationParams truncation_of(const Invocation& inv) {
    TruncationParams t;
    t.m = parse_long("m", inv.flags.at("m"));
    t.n = parse_natural("n", inv.flags.at("n"), false);
    t.p = inv.flags.count("p") ? parse_long("p", inv.flags.at("p")) : 0;
    return t;
}

PerceivedContext context_of(const Invocation& inv) {
    const LogicSystem ls = json_io::logic_system_from_json(read_json(inv.flags.at("rules")));
    return PerceivedContext(ls, parse_list(inv.flags.at("perceived")), flag_or(inv, "tag", std::string(kDefaultTag)));
}

Json string_array(const SentenceSet& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

// ---------------------------------------------------------------- commands

using Emit = std::function<void(const std::string&)>;

void emit_json(const Emit& emit, const Json& j) { emit(j.dump(2) + "\n"); }

int cmd_points(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const int q = static_cast<int>(parse_long("q", flag_or(inv, "q", "4")));
    const std::uint64_t K = parse_natural("K", flag_or(inv, "K", "1"), true);
    IntervalKind kind = IntervalKind::whole();
    if (q == 1) {
        if (!inv.flags.count("m")) throw UsageError("--m: required when --q is 1");
        const std::uint64_t m = parse_natural("m", inv.flags.at("m"), true);
        const Rational b = inv.flags.count("b") ? Rational::parse(inv.flags.at("b"))
                                                : Rational(Integer(static_cast<unsigned long>(m)), Integer(static_cast<unsigned long>(K)));
        kind = IntervalKind::bounded(b, m);
    } else {
        kind = IntervalKind::from_q(q);
    }
    const PartitionScheme scheme(K, kind);
    const auto [lo, hi] = parse_range("i", inv.flags.at("i"));
    const auto points = enumerate_points(scheme, Integer(lo), Integer(hi), parse_natural("j-max", inv.flags.at("j-max"), false));
    log(err, LogLevel::info, "points: " + std::to_string(points.size()) + " rows");
    if (flag_or(inv, "format", "csv") == "json")
        emit_json(emit, json_io::to_json(points));
    else
        emit(points_to_csv(points));
    return kOk;
}

int cmd_paradigm(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const auto dp = load_spec(inv).paradigm();
    const auto [lo, hi] = parse_range("i", inv.flags.at("i"));
    Json out = Json::array();
    for (const auto& [idx, seg] : dp.enumerate(Integer(lo), Integer(hi), parse_natural("j-max", inv.flags.at("j-max"), false)))
        out.push_back(json_io::segment_entry(idx, seg));
    log(err, LogLevel::info, "paradigm: " + std::to_string(out.size()) + " segments");
    emit_json(emit, out);
    return kOk;
}

Json h_listing(const DevelopmentalParadigm& dp, const TruncationParams& t) {
    Json out = Json::array();
    for (const auto& idx : h_indices(dp.scheme(), t)) {
        Json e = json_io::segment_entry(idx, dp.segment_of(idx));
        e.erase("text");
        out.push_back(e);
    }
    return out;
}

int cmd_ultraword(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const auto dp = load_spec(inv).paradigm();
    const auto t = truncation_of(inv);
    const auto u = ultraword_approx(dp, t);
    log(err, LogLevel::info, "ultraword: " + std::to_string(u.word.size()) + " conjuncts");
    emit_json(emit, Json{{"word", u.word.text()},
                         {"conjuncts", u.word.size()},
                         {"H", h_listing(dp, t)},
                         {"H_size_closed_form", h_size(dp.scheme().kind(), t).get_str()}});
    return kOk;
}

int cmd_closure(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const LogicSystem ls = json_io::logic_system_from_json(read_json(inv.flags.at("rules")));
    const auto order = flag_or(inv, "order", "canonical") == "as_given" ? RuleOrder::as_given : RuleOrder::canonical;
    const auto r = closure(ls, parse_list(flag_or(inv, "premises", "")), order);
    log(err, LogLevel::info, "closure: " + std::to_string(r.closure.size()) + " sentences");
    emit_json(emit, json_io::to_json(r));
    return kOk;
}

IndexPair parse_index(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--indices: expected i:j, got '" + text + "'");
    return IndexPair(parse_long("indices", text.substr(0, colon)), parse_natural("indices", text.substr(colon + 1), false));
}

int cmd_decompose(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const auto dp = load_spec(inv).paradigm();
    std::set<FrozenSegment> members;
    if (inv.flags.count("indices")) {
        std::stringstream ss(inv.flags.at("indices"));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) members.insert(dp.segment_of(parse_index(item)));
    } else {
        members = build_H(dp, truncation_of(inv));
    }
    const auto w = build_conjunction_word(members);
    const SMode mode = flag_or(inv, "mode", "canonical") == "permutational" ? SMode::permutational : SMode::canonical;
    const auto d = s_operator(w, parse_list(flag_or(inv, "axioms", "")), mode);
    log(err, LogLevel::info, "decompose: |S| = " + std::to_string(d.size()));
    Json out = json_io::to_json(d);
    out["word"] = w.text();
    emit_json(emit, out);
    return kOk;
}

int cmd_signature(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const auto ctx = context_of(inv);
    Json out{{"perceived", string_array(ctx.perceived())}, {"tag", ctx.tag()}};
    const bool has_source = inv.flags.count("source") != 0;
    if (!has_source || inv.flags.count("theory")) {
        out["theory"] = json_io::to_json(theory_signature(ctx).tuples);
    }
    if (has_source) {
        const SentenceSet X = parse_list(inv.flags.at("source"));
        const auto b = behavior_signature(ctx, X);
        Json tagged = Json::array();
        for (const auto& [orig, tag] : tag_j_prime(ctx, X)) tagged.push_back(Json::array({orig, tag}));
        out["behavior"] = Json{{"source", b.source}, {"tuples", json_io::to_json(b.tuples)}, {"j_prime", tagged}};
    }
    log(err, LogLevel::info, "signature: |P| = " + std::to_string(ctx.perceived().size()));
    emit_json(emit, out);
    return kOk;
}

int cmd_converse(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const auto obs = json_io::observations_from_json(read_json(inv.flags.at("observations")));
    const auto ri = converse_ri(obs);
    Json out{{"ri_prime", json_io::to_json(ri)}};
    if (inv.flags.count("premises")) {
        const auto r = separate_vs_union(obs, parse_list(inv.flags.at("premises")));
        out["separate_vs_union"] =
            Json{{"separate", string_array(r.separate)}, {"united", string_array(r.united)}, {"equal", r.equal}};
    }
    log(err, LogLevel::info, "converse: " + std::to_string(ri.rules().size()) + " rules");
    emit_json(emit, out);
    return kOk;
}

int cmd_st(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const auto file = json_io::subparticle_file_from_json(read_json(inv.flags.at("input")));
    const SPUniverse universe(file.arity, SubparticleSet(file.members.begin(), file.members.end()));
    Json each = Json::array();
    for (const auto& m : file.members) each.push_back(json_io::to_json(st_subparticle(m)));
    const auto& members = universe.members();
    log(err, LogLevel::info, "st: " + std::to_string(members.size()) + " members");
    emit_json(emit, Json{{"arity", file.arity},
                         {"st", each},
                         {"St", json_io::to_json(st_set(members))},
                         {"St_extended", json_io::to_json(st_extended(members))},
                         {"realism", json_io::to_json(realism_relation(members))}});
    return kOk;
}

// ------------------------------------------------------------------- check

LogicSystem random_system(std::mt19937_64& rng, std::size_t size) {
    SentenceSet language;
    std::vector<Sentence> names;
    for (std::size_t k = 0; k < size; ++k) {
        names.push_back("s" + std::to_string(k));
        language.insert(names.back());
    }
    std::vector<Rule> rules;
    const std::size_t count = rng() % (2 * size + 1);
    for (std::size_t r = 0; r < count; ++r) {
        Rule rule;
        const std::size_t width = 1 + rng() % 2;
        for (std::size_t k = 0; k < width; ++k) rule.premises.insert(names[rng() % size]);
        rule.conclusion = names[rng() % size];
        rules.push_back(rule);
    }
    return LogicSystem(language, rules);
}

SubparticleSet random_subparticles(std::mt19937_64& rng, std::size_t size) {
    SubparticleSet out;
    while (out.size() < size) {
        const HyperNatural first = rng() % 2 ? HyperNatural::standard(rng() % 4) : HyperNatural::infinite("λ");
        const HyperNatural second = rng() % 2 ? HyperNatural::standard(rng() % 4) : HyperNatural::infinite("ν");
        const auto c0 = static_cast<long>(rng() % 3);
        const auto c1 = static_cast<long>(rng() % 3);
        out.insert(SubparticleRep(first, second,
                                  {EpsilonSeries(Rational(c0)) + EpsilonSeries::monomial(Rational(c1), 1)}));
    }
    return out;
}

struct CheckTally {
    std::size_t cases = 0;
    std::size_t subsets = 0;
    Json violations = Json::array();

    template <class T, class Show>
    void add(std::size_t case_no, const AxiomReport<T>& r, Show show) {
        ++cases;
        subsets += r.subsets_checked;
        for (const auto& v : r.violations) {
            Json w = Json::array();
            for (const auto& x : v.witness) w.push_back(show(x));
            violations.push_back(Json{{"case", case_no}, {"property", std::string(to_string(v.axiom))}, {"witness", w}});
        }
    }
    void fail(std::size_t case_no, const std::string& property, Json witness) {
        violations.push_back(Json{{"case", case_no}, {"property", property}, {"witness", std::move(witness)}});
    }
};

int cmd_check(const Invocation& inv, const Emit& emit, std::ostream& err) {
    const std::string target = inv.flags.at("target");
    const std::uint64_t seed = parse_natural("seed", flag_or(inv, "seed", "20060504"), false);
    const std::size_t samples = parse_natural("samples", flag_or(inv, "samples", "50"), true);
    const std::size_t size = parse_natural("size", flag_or(inv, "size", target == "signature" ? "5" : "6"), true);
    std::mt19937_64 rng(seed);
    CheckTally tally;
    auto show_sentence = [](const Sentence& s) { return s; };
    auto show_sp = [](const SubparticleRep& s) { return s.str(); };

    if (target == "closure") {
        std::vector<LogicSystem> systems;
        if (inv.flags.count("rules"))
            systems.push_back(json_io::logic_system_from_json(read_json(inv.flags.at("rules"))));
        else
            for (std::size_t k = 0; k < samples; ++k) systems.push_back(random_system(rng, 1 + rng() % size));
        for (std::size_t k = 0; k < systems.size(); ++k) {
            const auto& ls = systems[k];
            const std::vector<Sentence> universe(ls.language().begin(), ls.language().end());
            tally.add(k, check_consequence_axioms([&](const SentenceSet& X) { return closure(ls, X).closure; }, universe),
                      show_sentence);
            log(err, LogLevel::debug, "closure case " + std::to_string(k) + ": |L| = " + std::to_string(universe.size()));
        }
    } else if (target == "st") {
        std::vector<SPUniverse> universes;
        if (inv.flags.count("input")) {
            const auto file = json_io::subparticle_file_from_json(read_json(inv.flags.at("input")));
            universes.emplace_back(file.arity, SubparticleSet(file.members.begin(), file.members.end()));
        } else {
            for (std::size_t k = 0; k < samples; ++k) universes.emplace_back(3, random_subparticles(rng, 1 + rng() % size));
        }
        for (std::size_t k = 0; k < universes.size(); ++k) {
            const auto closed = universes[k].closed();
            const std::vector<SubparticleRep> universe(closed.begin(), closed.end());
            tally.add(k, check_consequence_axioms([](const SubparticleSet& X) { return st_extended(X); }, universe), show_sp);
            const auto& members = universes[k].members();
            if (st_set(st_set(members)) != st_set(members)) tally.fail(k, "St idempotent", json_io::to_json(members));
            if (all_nonstandard(members) && realism_relation(members) != st_set(members))
                tally.fail(k, "R equals St", json_io::to_json(members));
        }
    } else {
        std::vector<PerceivedContext> contexts;
        if (inv.flags.count("rules")) {
            if (!inv.flags.count("perceived")) throw UsageError("--perceived: required with --rules for target signature");
            contexts.push_back(context_of(inv));
        } else {
            for (std::size_t k = 0; k < samples; ++k) {
                const LogicSystem ls = random_system(rng, 1 + rng() % size);
                SentenceSet P;
                for (const auto& s : ls.language())
                    if (rng() % 3 != 0) P.insert(s);
                contexts.emplace_back(ls, P);
            }
        }
        for (std::size_t k = 0; k < contexts.size(); ++k) {
            const auto r = signature_operator_check(contexts[k]);
            ++tally.cases;
            tally.subsets += r.subsets_checked;
            for (const auto& m : r.mismatches)
                tally.fail(k, "signature generates perceived closure", string_array(m.X));
        }
    }
    const bool passed = tally.violations.empty();
    log(err, LogLevel::info, "check " + target + ": " + std::to_string(tally.cases) + " cases");
    emit_json(emit, Json{{"target", target},
                         {"seed", seed},
                         {"cases", tally.cases},
                         {"subsets_checked", tally.subsets},
                         {"violations", tally.violations},
                         {"passed", passed}});
    return passed ? kOk : kCheckFailed;
}

using Handler = int (*)(const Invocation&, const Emit&, std::ostream&);

Handler handler_for(const std::string& command) {
    static const std::map<std::string, Handler> table = {
        {"points", cmd_points},       {"paradigm", cmd_paradigm},   {"ultraword", cmd_ultraword},
        {"closure", cmd_closure},     {"decompose", cmd_decompose}, {"signature", cmd_signature},
        {"converse", cmd_converse},   {"st", cmd_st},               {"check", cmd_check},
    };
    return table.at(command);
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : command_specs()) out.push_back(c.name);
        return out;
    }();
    return names;
}

Invocation parse_invocation(const std::vector<std::string>& argv) {
    CLI::App app{"primitive-time paradigms, conjunction words and consequence operators", "ultraword"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every command");

    std::string output;
    std::string config;
    app.add_option("--output,-o", output, "write the artifact here instead of stdout");
    app.add_option("--config", config, "JSON defaults file: {\"<command>\": {\"<flag>\": value}}");

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::map<std::string, bool>> switches;
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : command_specs()) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        subs[c.name] = sub;
        for (const auto& f : c.flags) {
            const std::string opt = std::string("--") + f.name;
            if (f.is_switch)
                sub->add_flag(opt, switches[c.name][f.name], f.help);
            else
                sub->add_option(opt, values[c.name][f.name], f.help);
        }
    }

    // CLI11 wants argv in reverse order when given a vector.
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    Invocation inv;
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        inv.help = true;
        inv.help_text = app.help();
        for (auto& [name, sub] : subs)
            if (sub->parsed()) inv.help_text = sub->help("ultraword");
        return inv;
    } catch (const CLI::CallForAllHelp&) {
        inv.help = true;
        inv.help_text = app.help("", CLI::AppFormatMode::All);
        return inv;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (const auto& c : command_specs()) {
        CLI::App* sub = subs.at(c.name);
        if (!sub->parsed()) continue;
        inv.command = c.name;
        for (const auto& f : c.flags) {
            const std::string opt = std::string("--") + f.name;
            if (sub->count(opt) == 0) continue;
            inv.flags[f.name] = f.is_switch ? "true" : values[c.name][f.name];
        }
    }
    if (!output.empty()) inv.output = output;
    if (!config.empty()) apply_config(inv, config);

    // Value errors first, so "--K 0" is reported as such even with other flags missing.
    validate_flags(inv);
    const CommandSpec& spec = *find_command(inv.command);
    for (const char* r : spec.required)
        if (!inv.flags.count(r)) throw UsageError(std::string("--") + r + ": required by '" + inv.command + "'");
    return inv;
}

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.help) {
        out << inv.help_text;
        return kOk;
    }
    std::string buffer;
    const Emit emit = [&](const std::string& s) { buffer += s; };
    const int code = handler_for(inv.command)(inv, emit, err);
    if (inv.output) {
        std::ofstream file(*inv.output, std::ios::binary);
        if (!file || !(file << buffer)) throw IoError("cannot write '" + *inv.output + "'");
    } else {
        out << buffer;
    }
    return code;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        return execute(parse_invocation(argv), out, err);
    } catch (const UsageError& e) {
        log(err, LogLevel::error, std::string("usage: ") + e.what());
        return kUsage;
    } catch (const IoError& e) {
        log(err, LogLevel::error, std::string("io: ") + e.what());
        return kIo;
    } catch (const Error& e) {
        log(err, LogLevel::error, std::string(to_string(e.kind())) + ": " + e.what());
        return e.kind() == ErrorKind::ParseError ? kParse : kDomain;
    }
}

}  // namespace ultraword::cli
