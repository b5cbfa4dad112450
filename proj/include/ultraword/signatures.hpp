#pragma once

#include <set>
#include <string>
#include <vector>

#include "ultraword/consequence.hpp"

namespace ultraword {

inline constexpr std::string_view kDefaultTag = "†";

/// A theory (logic-system over L) observed through a perceived set P ⊆ L.
class PerceivedContext {
public:
    /// Throws NotPerceived when P ⊄ L and TagCollision when the tag occurs
    /// inside a member of P.
    PerceivedContext(LogicSystem theory, SentenceSet perceived, std::string tag = std::string(kDefaultTag));

    const LogicSystem& theory() const { return theory_; }
    const SentenceSet& language() const { return theory_.language(); }
    const SentenceSet& perceived() const { return perceived_; }
    const std::string& tag() const { return tag_; }

private:
    LogicSystem theory_;
    SentenceSet perceived_;
    std::string tag_;
};

/// One tuple (x_1, ..., x_n, x_{n+1}); premises are sorted.
struct SignatureTuple {
    std::vector<Sentence> premises;
    Sentence conclusion;

    friend auto operator<=>(const SignatureTuple&, const SignatureTuple&) = default;
};

struct BehaviorSignature {
    std::vector<Sentence> source;
    std::set<SignatureTuple> tuples;
};

struct TheorySignature {
    std::set<SignatureTuple> tuples;
};

/// P ∩ closure(theory, X). Throws NotPerceived when X ⊄ P.
SentenceSet perceived_closure(const PerceivedContext& ctx, const SentenceSet& X);

/// Tuples (X, y) for y ∈ P_N(X) - X; empty when nothing new is deduced.
/// Throws EmptySource for X = ∅, NotPerceived when X ⊄ P.
BehaviorSignature behavior_signature(const PerceivedContext& ctx, const SentenceSet& X);

/// Union of the behavior signatures over every nonempty X ⊆ P.
TheorySignature theory_signature(const PerceivedContext& ctx);

/// The tuples read as rules over the context language.
LogicSystem signature_system(const PerceivedContext& ctx, const TheorySignature& sig);

struct SignatureMismatch {
    SentenceSet X;
    SentenceSet expected;  ///< perceived_closure
    SentenceSet generated;
};

struct SignatureReport {
    std::size_t subsets_checked = 0;
    std::vector<SignatureMismatch> mismatches;
    bool passed() const { return mismatches.empty(); }
};

inline constexpr std::size_t kMaxSignaturePerceived = 12;

/// Compares P ∩ closure(signature rules, X) with perceived_closure(ctx, X) for
/// every X ⊆ P. Throws InvalidArgument when |P| exceeds kMaxSignaturePerceived.
SignatureReport signature_operator_check(const PerceivedContext& ctx);
SignatureReport signature_operator_check(const PerceivedContext& ctx, const TheorySignature& sig);

struct Observation {
    SentenceSet X;
    SentenceSet X_prime;

    friend auto operator<=>(const Observation&, const Observation&) = default;
};

/// Sentences named anywhere in the observations.
SentenceSet observation_language(const std::vector<Observation>& observations);

/// RI′: one rule X -> y per y ∈ X′ for each observation. Throws
/// UnknownSentence when a sentence is outside the language and EmptySource
/// for an observation with empty X.
LogicSystem converse_ri(const std::vector<Observation>& observations, const SentenceSet& language);
LogicSystem converse_ri(const std::vector<Observation>& observations);

struct SeparateVsUnion {
    SentenceSet separate;
    SentenceSet united;
    bool equal = false;
};

/// separate = ⋃ over observations of the closure under that observation's
/// rules alone; united = closure under RI′.
SeparateVsUnion separate_vs_union(const std::vector<Observation>& observations, const SentenceSet& premises,
                                  const SentenceSet& language);
SeparateVsUnion separate_vs_union(const std::vector<Observation>& observations, const SentenceSet& premises);

/// (x, x + tag) for each x ∈ X. Throws NotPerceived and TagCollision.
std::set<std::pair<Sentence, Sentence>> tag_j_prime(const PerceivedContext& ctx, const SentenceSet& X);

/// Whether every pair (X, P_N(X) - X) with nonempty X ⊆ P and nonempty
/// difference belongs to the given process relation.
bool behavior_within(const PerceivedContext& ctx, const std::set<std::pair<SentenceSet, SentenceSet>>& relation);

}  // namespace ultraword
