#pragma once

/**
 * @file consequence.hpp
 * @brief Finite logic-systems, their closure operator, a checker for the
 * consequence-operator axioms, and the conjunction operator S.
 *
 * A logic-system is a finite set of rules (premise set -> conclusion) over a
 * finite language of atomic sentences. Its closure is the least superset of
 * the input closed under every rule. Any such closure is a finite consequence
 * operator: extensive, idempotent, bounded by the language and finitary.
 * check_consequence_axioms() verifies those four properties for an arbitrary
 * set-to-set map over a finite universe and reports every counterexample.
 */

#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ultraword/error.hpp"
#include "ultraword/language.hpp"

namespace ultraword {

using Sentence = std::string;
using SentenceSet = std::set<Sentence>;

struct Rule {
    SentenceSet premises;
    Sentence conclusion;

    /// Canonical order: by conclusion, then premises.
    friend auto operator<=>(const Rule& a, const Rule& b) {
        if (auto c = a.conclusion <=> b.conclusion; c != 0) return c;
        return a.premises <=> b.premises;
    }
    friend bool operator==(const Rule&, const Rule&) = default;
};

class LogicSystem {
public:
    LogicSystem() = default;
    /// Throws UnknownSentence when a rule leaves the language and InvalidRule
    /// for an empty premise set. Duplicate rules are dropped.
    LogicSystem(SentenceSet language, std::vector<Rule> rules);

    const SentenceSet& language() const { return language_; }
    /// Rules in the order they were given (duplicates removed).
    const std::vector<Rule>& rules() const { return rules_; }
    std::vector<Rule> canonical_rules() const;

    bool contains(const Sentence& s) const { return language_.count(s) != 0; }

private:
    SentenceSet language_;
    std::vector<Rule> rules_;
};

struct ClosureResult {
    SentenceSet closure;
    /// Rules in the order they fired; each added its conclusion.
    std::vector<Rule> derivation_order;
};

enum class RuleOrder { canonical, as_given };

/// Least fixpoint containing the premises. Forward chaining with per-rule
/// counters of unmet premises; firing order is FIFO over newly derived
/// sentences, rules scanned in the chosen order. Throws UnknownSentence when
/// a premise is outside the language.
ClosureResult closure(const LogicSystem& ls, const SentenceSet& premises, RuleOrder order = RuleOrder::canonical);

/// Re-applies a recorded derivation. Throws InvalidRule when a step fires
/// before its premises are available.
SentenceSet replay(const SentenceSet& premises, const std::vector<Rule>& derivation_order);

// ---------------------------------------------------------------------------
// Consequence-operator axioms

enum class Axiom { extensive, idempotent, bounded, finitary };

std::string_view to_string(Axiom axiom);

template <class T>
struct AxiomViolation {
    Axiom axiom;
    std::vector<T> witness;
};

template <class T>
struct AxiomReport {
    bool exhaustive = false;
    std::size_t subsets_checked = 0;
    std::vector<AxiomViolation<T>> violations;

    bool passed() const { return violations.empty(); }
};

struct CheckOptions {
    /// Universes up to this size are checked on every subset.
    std::size_t exhaustive_limit = 12;
    /// Random subsets drawn above the limit.
    std::size_t samples = 256;
    std::uint64_t seed = 20060504;
};

/// Checks, for subsets X of the universe, X ⊆ op(X), op(op(X)) = op(X),
/// op(X) ⊆ universe and op(X) = ⋃{op(F) : F ⊆ X}. Exhaustive up to
/// options.exhaustive_limit elements; above it, sampled subsets are checked
/// and the finitary union runs over X, ∅, the singletons of X and X minus one
/// element. Universes larger than 64 elements are rejected.
template <class T, class Op>
AxiomReport<T> check_consequence_axioms(Op&& op, const std::vector<T>& universe_in, const CheckOptions& options = {}) {
    const std::set<T> universe(universe_in.begin(), universe_in.end());
    const std::vector<T> elems(universe.begin(), universe.end());
    const std::size_t n = elems.size();
    if (n > 64) throw Error(ErrorKind::InvalidArgument, "axiom check supports at most 64 universe elements");
    using Mask = std::uint64_t;
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

    auto to_set = [&](Mask m) {
        std::set<T> s;
        for (std::size_t k = 0; k < n; ++k)
            if (m >> k & 1) s.insert(elems[k]);
        return s;
    };
    auto to_vec = [&](Mask m) {
        std::vector<T> v;
        for (std::size_t k = 0; k < n; ++k)
            if (m >> k & 1) v.push_back(elems[k]);
        return v;
    };
    // Image as a mask; out_of_range reports members outside the universe.
    auto apply = [&](Mask x, bool& out_of_range) {
        Mask image = 0;
        out_of_range = false;
        for (const auto& y : op(to_set(x))) {
            const auto it = universe.find(y);
            if (it == universe.end()) {
                out_of_range = true;
                continue;
            }
            image |= Mask{1} << std::distance(universe.begin(), it);
        }
        return image;
    };

    AxiomReport<T> report;
    auto violate = [&](Axiom a, Mask x) { report.violations.push_back({a, to_vec(x)}); };

    if (n <= options.exhaustive_limit) {
        report.exhaustive = true;
        const std::size_t count = std::size_t{1} << n;
        std::vector<Mask> image(count);
        std::vector<bool> escapes(count);
        for (Mask x = 0; x < count; ++x) {
            bool oor = false;
            image[x] = apply(x, oor);
            escapes[x] = oor;
        }
        for (Mask x = 0; x < count; ++x) {
            ++report.subsets_checked;
            if (x & ~image[x]) violate(Axiom::extensive, x);
            if (image[image[x]] != image[x]) violate(Axiom::idempotent, x);
            if (escapes[x]) violate(Axiom::bounded, x);
            Mask united = image[0];
            for (Mask sub = x; sub != 0; sub = (sub - 1) & x) united |= image[sub];
            if (united != image[x]) violate(Axiom::finitary, x);
        }
        return report;
    }

    std::mt19937_64 rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
        const Mask x = rng() & full;
        ++report.subsets_checked;
        bool oor = false;
        const Mask fx = apply(x, oor);
        if (oor) violate(Axiom::bounded, x);
        if (x & ~fx) violate(Axiom::extensive, x);
        if (apply(fx, oor) != fx) violate(Axiom::idempotent, x);
        Mask united = fx | apply(0, oor);
        for (std::size_t k = 0; k < n; ++k) {
            const Mask bit = Mask{1} << k;
            if (!(x & bit)) continue;
            united |= apply(bit, oor) | apply(x & ~bit, oor);
        }
        if (united != fx) violate(Axiom::finitary, x);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Conjunction operator S

enum class SMode { canonical, permutational };

std::string_view to_string(SMode mode);

/// S({w}) = A ∪ Q ∪ d: axioms, conjunctions of two or more distinct atoms of
/// w, and the atoms themselves. Canonical mode keeps one ≤_D-ordered
/// conjunction per subset; permutational mode keeps every arrangement.
struct SDecomposition {
    SMode mode = SMode::canonical;
    SentenceSet axioms;
    std::set<ConjunctionWord> conjunctions;
    std::set<FrozenSegment> atoms;

    /// Membership of a conjunction; canonical mode compares up to arrangement.
    bool contains(const ConjunctionWord& w) const;
    bool contains(const FrozenSegment& atom) const { return atoms.count(atom) != 0; }
    bool contains(const Sentence& axiom) const { return axioms.count(axiom) != 0; }

    std::size_t size() const { return axioms.size() + conjunctions.size() + atoms.size(); }
    /// A, Q and d as sentence text.
    SentenceSet sentences() const;
    bool pairwise_disjoint() const;
};

/// Largest atom count s_operator will materialize, per mode.
inline constexpr std::size_t kMaxCanonicalAtoms = 12;
inline constexpr std::size_t kMaxPermutationalAtoms = 8;

/// Materializes S({w}). Throws AxiomCollision when an axiom's text equals an
/// atom or conjunction, InvalidArgument above the atom limits.
SDecomposition s_operator(const ConjunctionWord& w, const SentenceSet& axioms = {}, SMode mode = SMode::canonical);

/// Membership in S({w}) without materializing Q.
bool s_contains(const ConjunctionWord& w, const FrozenSegment& candidate);
bool s_contains(const ConjunctionWord& w, const ConjunctionWord& candidate, SMode mode = SMode::canonical);

/// 2^n - n - 1
Integer canonical_conjunction_count(std::uint64_t atoms);
/// Σ_{k=2..n} C(n,k)·k!
Integer permutational_conjunction_count(std::uint64_t atoms);

}  // namespace ultraword
