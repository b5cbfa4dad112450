#include "ultraword/consequence.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

namespace ultraword {

LogicSystem::LogicSystem(SentenceSet language, std::vector<Rule> rules) : language_(std::move(language)) {
    std::set<Rule> seen;
    for (auto& r : rules) {
        if (r.premises.empty())
            throw Error(ErrorKind::InvalidRule, "rule concluding '" + r.conclusion + "' has no premises");
        for (const auto& p : r.premises)
            if (!contains(p)) throw Error(ErrorKind::UnknownSentence, "premise '" + p + "' is not in the language");
        if (!contains(r.conclusion))
            throw Error(ErrorKind::UnknownSentence, "conclusion '" + r.conclusion + "' is not in the language");
        if (seen.insert(r).second) rules_.push_back(std::move(r));
    }
}

std::vector<Rule> LogicSystem::canonical_rules() const {
    std::vector<Rule> out = rules_;
    std::sort(out.begin(), out.end());
    return out;
}

ClosureResult closure(const LogicSystem& ls, const SentenceSet& premises, RuleOrder order) {
    for (const auto& p : premises)
        if (!ls.contains(p)) throw Error(ErrorKind::UnknownSentence, "premise '" + p + "' is not in the language");

    const std::vector<Rule> rules = order == RuleOrder::canonical ? ls.canonical_rules() : ls.rules();
    std::vector<std::size_t> unmet(rules.size());
    std::map<Sentence, std::vector<std::size_t>> watchers;
    for (std::size_t r = 0; r < rules.size(); ++r) {
        unmet[r] = rules[r].premises.size();
        for (const auto& p : rules[r].premises) watchers[p].push_back(r);
    }

    ClosureResult result;
    result.closure = premises;
    std::deque<Sentence> pending(premises.begin(), premises.end());
    while (!pending.empty()) {
        const Sentence s = std::move(pending.front());
        pending.pop_front();
        const auto it = watchers.find(s);
        if (it == watchers.end()) continue;
        for (const std::size_t r : it->second) {
            if (--unmet[r] != 0) continue;
            if (!result.closure.insert(rules[r].conclusion).second) continue;
            result.derivation_order.push_back(rules[r]);
            pending.push_back(rules[r].conclusion);
        }
    }
    return result;
}

SentenceSet replay(const SentenceSet& premises, const std::vector<Rule>& derivation_order) {
    SentenceSet out = premises;
    for (const auto& r : derivation_order) {
        for (const auto& p : r.premises)
            if (!out.count(p))
                throw Error(ErrorKind::InvalidRule, "rule concluding '" + r.conclusion + "' fired before '" + p + "'");
        out.insert(r.conclusion);
    }
    return out;
}

std::string_view to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::extensive: return "extensive";
        case Axiom::idempotent: return "idempotent";
        case Axiom::bounded: return "bounded";
        case Axiom::finitary: return "finitary";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

std::string_view to_string(SMode mode) { return mode == SMode::canonical ? "canonical" : "permutational"; }

bool SDecomposition::contains(const ConjunctionWord& w) const {
    if (mode == SMode::permutational) return conjunctions.count(w) != 0;
    std::vector<FrozenSegment> sorted = w.conjuncts();
    std::sort(sorted.begin(), sorted.end());
    return conjunctions.count(make_conjunction(std::move(sorted))) != 0;
}

SentenceSet SDecomposition::sentences() const {
    SentenceSet out = axioms;
    for (const auto& q : conjunctions) out.insert(q.text());
    for (const auto& d : atoms) out.insert(d.text());
    return out;
}

bool SDecomposition::pairwise_disjoint() const {
    SentenceSet q_text, d_text;
    for (const auto& q : conjunctions) q_text.insert(q.text());
    for (const auto& d : atoms) d_text.insert(d.text());
    auto meets = [](const SentenceSet& a, const SentenceSet& b) {
        return std::any_of(a.begin(), a.end(), [&](const Sentence& s) { return b.count(s) != 0; });
    };
    return !meets(axioms, q_text) && !meets(axioms, d_text) && !meets(q_text, d_text);
}

SDecomposition s_operator(const ConjunctionWord& w, const SentenceSet& axioms, SMode mode) {
    SDecomposition out;
    out.mode = mode;
    out.axioms = axioms;
    out.atoms = atoms_of(w);

    const std::vector<FrozenSegment> atoms(out.atoms.begin(), out.atoms.end());
    const std::size_t n = atoms.size();
    const std::size_t limit = mode == SMode::canonical ? kMaxCanonicalAtoms : kMaxPermutationalAtoms;
    if (n > limit)
        throw Error(ErrorKind::InvalidArgument, std::to_string(n) + " atoms exceed the " +
                                                    std::string(to_string(mode)) + " materialization limit of " +
                                                    std::to_string(limit));

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<FrozenSegment> chosen;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) chosen.push_back(atoms[k]);
        // chosen is sorted, which is the ≤_D arrangement.
        if (mode == SMode::canonical) {
            out.conjunctions.insert(make_conjunction(std::move(chosen)));
            continue;
        }
        do {
            out.conjunctions.insert(make_conjunction(chosen));
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }

    for (const auto& a : axioms) {
        for (const auto& d : out.atoms)
            if (d.text() == a) throw Error(ErrorKind::AxiomCollision, "axiom '" + a + "' equals an atom");
        for (const auto& q : out.conjunctions)
            if (q.text() == a) throw Error(ErrorKind::AxiomCollision, "axiom '" + a + "' equals a conjunction");
    }
    return out;
}

bool s_contains(const ConjunctionWord& w, const FrozenSegment& candidate) {
    const auto& c = w.conjuncts();
    return std::find(c.begin(), c.end(), candidate) != c.end();
}

bool s_contains(const ConjunctionWord& w, const ConjunctionWord& candidate, SMode mode) {
    for (const auto& atom : candidate.conjuncts())
        if (!s_contains(w, atom)) return false;
    return mode == SMode::permutational || candidate.is_canonical();
}

Integer canonical_conjunction_count(std::uint64_t atoms) {
    const Integer pow2 = Integer(1) << static_cast<mp_bitcnt_t>(atoms);
    return pow2 - Integer(static_cast<unsigned long>(atoms)) - 1;
}

Integer permutational_conjunction_count(std::uint64_t atoms) {
    // Σ_{k=2..n} n!/(n-k)!  (C(n,k)·k! arrangements of k distinct atoms)
    Integer total = 0;
    Integer falling = static_cast<unsigned long>(atoms);  // n!/(n-1)!
    for (std::uint64_t k = 2; k <= atoms; ++k) {
        falling *= static_cast<unsigned long>(atoms - k + 1);
        total += falling;
    }
    return total;
}

}  // namespace ultraword
