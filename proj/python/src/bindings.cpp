// Python bindings for the ultraword library. Rationals cross the boundary as
// fractions.Fraction; sentence sets as Python sets of str; structured
// artifacts (paradigm specs, subparticle files) as the same JSON the CLI reads.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "ultraword/json_io.hpp"
#include "ultraword/ultraword.hpp"

namespace py = pybind11;
using namespace ultraword;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

PartitionScheme scheme_of(std::uint64_t K, int q, std::optional<std::uint64_t> m) {
    if (q != 1) return PartitionScheme(K, IntervalKind::from_q(q));
    if (!m) throw Error(ErrorKind::InvalidScheme, "q=1 needs m");
    return PartitionScheme(K, IntervalKind::bounded(Rational(Integer(static_cast<unsigned long>(*m)),
                                                             Integer(static_cast<unsigned long>(K))),
                                                    *m));
}

std::vector<Rule> rules_of(const std::vector<std::pair<SentenceSet, Sentence>>& rules) {
    std::vector<Rule> out;
    for (const auto& [p, c] : rules) out.push_back({p, c});
    return out;
}

std::vector<std::pair<SentenceSet, Sentence>> rule_pairs(const std::vector<Rule>& rules) {
    std::vector<std::pair<SentenceSet, Sentence>> out;
    for (const auto& r : rules) out.emplace_back(r.premises, r.conclusion);
    return out;
}

std::vector<Observation> observations_of(const std::vector<std::pair<SentenceSet, SentenceSet>>& obs) {
    std::vector<Observation> out;
    for (const auto& [x, y] : obs) out.push_back({x, y});
    return out;
}

TruncationParams truncation(long m, std::uint64_t n, long p) {
    TruncationParams t;
    t.m = m;
    t.n = n;
    t.p = p;
    return t;
}

py::object from_json_text(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

std::string to_json_text(const py::object& obj) {
    return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact primitive-time partitions, conjunction-word consequence operators and standard parts.";

    py::register_exception<Error>(m, "UltrawordError", PyExc_ValueError);

    m.def(
        "partition_point",
        [](std::uint64_t K, long i, std::uint64_t j, int q, std::optional<std::uint64_t> m_) {
            return fraction(partition_point(scheme_of(K, q, m_), IndexPair(i, j)));
        },
        py::arg("K"), py::arg("i"), py::arg("j"), py::arg("q") = 4, py::arg("m") = py::none(),
        "t(i,j) = ((i+1)·2^j − 1)/(K·2^j) for an admissible index.");

    m.def(
        "enumerate_points",
        [](std::uint64_t K, long i_lo, long i_hi, std::uint64_t j_max, int q, std::optional<std::uint64_t> m_) {
            py::list out;
            for (const auto& p : enumerate_points(scheme_of(K, q, m_), Integer(i_lo), Integer(i_hi), j_max))
                out.append(py::make_tuple(std::stol(p.index.i.get_str()), p.index.j, fraction(p.t)));
            return out;
        },
        py::arg("K"), py::arg("i_lo"), py::arg("i_hi"), py::arg("j_max"), py::arg("q") = 4, py::arg("m") = py::none(),
        "Admissible (i, j, t) triples in lexicographic index order.");

    m.def(
        "verify_order_embedding",
        [](std::uint64_t K, long i_lo, long i_hi, std::uint64_t j_max, int q, std::optional<std::uint64_t> m_) {
            return verify_order_embedding(scheme_of(K, q, m_), Integer(i_lo), Integer(i_hi), j_max);
        },
        py::arg("K"), py::arg("i_lo"), py::arg("i_hi"), py::arg("j_max"), py::arg("q") = 4, py::arg("m") = py::none());

    m.def(
        "closure",
        [](const SentenceSet& language, const std::vector<std::pair<SentenceSet, Sentence>>& rules,
           const SentenceSet& premises) {
            const auto r = closure(LogicSystem(language, rules_of(rules)), premises);
            return py::make_tuple(r.closure, rule_pairs(r.derivation_order));
        },
        py::arg("language"), py::arg("rules"), py::arg("premises"),
        "Closure of premises; returns (closure, derivation order as (premises, conclusion) pairs).");

    m.def(
        "closure_axioms_hold",
        [](const SentenceSet& language, const std::vector<std::pair<SentenceSet, Sentence>>& rules) {
            const LogicSystem ls(language, rules_of(rules));
            const std::vector<Sentence> universe(language.begin(), language.end());
            return check_consequence_axioms([&](const SentenceSet& X) { return closure(ls, X).closure; }, universe)
                .passed();
        },
        py::arg("language"), py::arg("rules"));

    m.def("canonical_conjunction_count", [](std::uint64_t n) { return canonical_conjunction_count(n).get_str(); });
    m.def("permutational_conjunction_count",
          [](std::uint64_t n) { return permutational_conjunction_count(n).get_str(); });

    m.def(
        "ultraword",
        [](const py::object& spec, long m_, std::uint64_t n, long p) {
            const auto dp = json_io::paradigm_spec_from_json(json_io::parse(to_json_text(spec))).paradigm();
            const auto u = ultraword_approx(dp, truncation(m_, n, p));
            std::vector<std::string> conjuncts;
            for (const auto& c : u.word.conjuncts()) conjuncts.push_back(c.text());
            return py::make_tuple(u.word.text(), conjuncts);
        },
        py::arg("spec"), py::arg("m"), py::arg("n"), py::arg("p") = 0,
        "Conjunction word over the H-set of a truncation; spec is a paradigm-spec dict.");

    m.def(
        "decompose",
        [](const py::object& spec, const std::vector<std::pair<long, std::uint64_t>>& indices, const SentenceSet& axioms,
           const std::string& mode) {
            const auto dp = json_io::paradigm_spec_from_json(json_io::parse(to_json_text(spec))).paradigm();
            std::set<FrozenSegment> members;
            for (const auto& [i, j] : indices) members.insert(dp.segment_of(IndexPair(i, j)));
            const SMode smode = mode == "permutational" ? SMode::permutational : SMode::canonical;
            return from_json_text(json_io::to_json(s_operator(build_conjunction_word(members), axioms, smode)).dump());
        },
        py::arg("spec"), py::arg("indices"), py::arg("axioms") = SentenceSet{}, py::arg("mode") = "canonical",
        "S({w}) as a dict with A, Q, d and cardinalities.");

    m.def(
        "perceived_closure",
        [](const SentenceSet& language, const std::vector<std::pair<SentenceSet, Sentence>>& rules,
           const SentenceSet& perceived, const SentenceSet& X) {
            return perceived_closure(PerceivedContext(LogicSystem(language, rules_of(rules)), perceived), X);
        },
        py::arg("language"), py::arg("rules"), py::arg("perceived"), py::arg("X"));

    m.def(
        "theory_signature",
        [](const SentenceSet& language, const std::vector<std::pair<SentenceSet, Sentence>>& rules,
           const SentenceSet& perceived) {
            std::vector<std::pair<std::vector<Sentence>, Sentence>> out;
            for (const auto& t : theory_signature(PerceivedContext(LogicSystem(language, rules_of(rules)), perceived)).tuples)
                out.emplace_back(t.premises, t.conclusion);
            return out;
        },
        py::arg("language"), py::arg("rules"), py::arg("perceived"),
        "Sorted (premises, conclusion) tuples of the theory signature.");

    m.def(
        "converse_ri",
        [](const std::vector<std::pair<SentenceSet, SentenceSet>>& obs) {
            return rule_pairs(converse_ri(observations_of(obs)).canonical_rules());
        },
        py::arg("observations"));

    m.def(
        "separate_vs_union",
        [](const std::vector<std::pair<SentenceSet, SentenceSet>>& obs, const SentenceSet& premises) {
            const auto r = separate_vs_union(observations_of(obs), premises);
            return py::make_tuple(r.separate, r.united, r.equal);
        },
        py::arg("observations"), py::arg("premises"), "Returns (separate, united, equal).");

    m.def(
        "st_point",
        [](const py::object& series) {
            return fraction(st_point(json_io::series_from_json(json_io::parse(to_json_text(series)))));
        },
        py::arg("series"), "Standard part of [[exponent, \"p/q\"], ...].");

    m.def(
        "st",
        [](const py::object& file) {
            const auto f = json_io::subparticle_file_from_json(json_io::parse(to_json_text(file)));
            const SPUniverse u(f.arity, SubparticleSet(f.members.begin(), f.members.end()));
            py::dict out;
            out["St"] = from_json_text(json_io::to_json(st_set(u.members())).dump());
            out["St_extended"] = from_json_text(json_io::to_json(st_extended(u.members())).dump());
            out["realism"] = from_json_text(json_io::to_json(realism_relation(u.members())).dump());
            return out;
        },
        py::arg("subparticle_file"), "St, 'St and R of a subparticle-file dict.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& argv) {
            std::ostringstream out, err;
            const int code = cli::run(argv, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("argv"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
