#include "ultraword/signatures.hpp"

#include <algorithm>
#include <iterator>

namespace ultraword {

namespace {

constexpr std::size_t kMaxTheoryPerceived = 20;

void require_perceived(const PerceivedContext& ctx, const SentenceSet& X) {
    for (const auto& x : X)
        if (!ctx.perceived().count(x)) throw Error(ErrorKind::NotPerceived, "'" + x + "' is not in P");
}

SentenceSet subset_of(const std::vector<Sentence>& elems, std::uint64_t mask) {
    SentenceSet out;
    for (std::size_t k = 0; k < elems.size(); ++k)
        if (mask >> k & 1) out.insert(elems[k]);
    return out;
}

SentenceSet intersect(const SentenceSet& a, const SentenceSet& b) {
    SentenceSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::vector<Rule> observation_rules(const Observation& obs) {
    if (obs.X.empty()) throw Error(ErrorKind::EmptySource, "observation with an empty source set");
    std::vector<Rule> rules;
    for (const auto& y : obs.X_prime) rules.push_back({obs.X, y});
    return rules;
}

}  // namespace

PerceivedContext::PerceivedContext(LogicSystem theory, SentenceSet perceived, std::string tag)
    : theory_(std::move(theory)), perceived_(std::move(perceived)), tag_(std::move(tag)) {
    if (tag_.empty()) throw Error(ErrorKind::InvalidArgument, "the tag symbol must be nonempty");
    for (const auto& x : perceived_) {
        if (!theory_.contains(x)) throw Error(ErrorKind::NotPerceived, "'" + x + "' is perceived but not in L");
        if (x.find(tag_) != std::string::npos)
            throw Error(ErrorKind::TagCollision, "perceived '" + x + "' contains the tag " + tag_);
    }
}

SentenceSet perceived_closure(const PerceivedContext& ctx, const SentenceSet& X) {
    require_perceived(ctx, X);
    return intersect(ctx.perceived(), closure(ctx.theory(), X).closure);
}

BehaviorSignature behavior_signature(const PerceivedContext& ctx, const SentenceSet& X) {
    if (X.empty()) throw Error(ErrorKind::EmptySource, "behavior signature needs a nonempty source set");
    BehaviorSignature sig;
    sig.source.assign(X.begin(), X.end());
    for (const auto& y : perceived_closure(ctx, X))
        if (!X.count(y)) sig.tuples.insert({sig.source, y});
    return sig;
}

TheorySignature theory_signature(const PerceivedContext& ctx) {
    const std::vector<Sentence> P(ctx.perceived().begin(), ctx.perceived().end());
    if (P.size() > kMaxTheoryPerceived)
        throw Error(ErrorKind::InvalidArgument,
                    "theory signature sweeps 2^|P| subsets; |P| = " + std::to_string(P.size()) + " is too large");
    TheorySignature out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << P.size()); ++mask) {
        auto b = behavior_signature(ctx, subset_of(P, mask));
        out.tuples.insert(b.tuples.begin(), b.tuples.end());
    }
    return out;
}

LogicSystem signature_system(const PerceivedContext& ctx, const TheorySignature& sig) {
    std::vector<Rule> rules;
    for (const auto& t : sig.tuples) rules.push_back({SentenceSet(t.premises.begin(), t.premises.end()), t.conclusion});
    return LogicSystem(ctx.language(), std::move(rules));
}

SignatureReport signature_operator_check(const PerceivedContext& ctx) {
    return signature_operator_check(ctx, theory_signature(ctx));
}

SignatureReport signature_operator_check(const PerceivedContext& ctx, const TheorySignature& sig) {
    const std::vector<Sentence> P(ctx.perceived().begin(), ctx.perceived().end());
    if (P.size() > kMaxSignaturePerceived)
        throw Error(ErrorKind::InvalidArgument, "signature check is exhaustive; |P| = " + std::to_string(P.size()) +
                                                    " exceeds " + std::to_string(kMaxSignaturePerceived));
    const LogicSystem generated = signature_system(ctx, sig);
    SignatureReport report;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << P.size()); ++mask) {
        const SentenceSet X = subset_of(P, mask);
        ++report.subsets_checked;
        SentenceSet expected = perceived_closure(ctx, X);
        SentenceSet got = intersect(ctx.perceived(), closure(generated, X).closure);
        if (expected != got) report.mismatches.push_back({X, std::move(expected), std::move(got)});
    }
    return report;
}

SentenceSet observation_language(const std::vector<Observation>& observations) {
    SentenceSet out;
    for (const auto& o : observations) {
        out.insert(o.X.begin(), o.X.end());
        out.insert(o.X_prime.begin(), o.X_prime.end());
    }
    return out;
}

LogicSystem converse_ri(const std::vector<Observation>& observations, const SentenceSet& language) {
    std::vector<Rule> rules;
    for (const auto& o : observations) {
        auto r = observation_rules(o);
        rules.insert(rules.end(), r.begin(), r.end());
    }
    return LogicSystem(language, std::move(rules));
}

LogicSystem converse_ri(const std::vector<Observation>& observations) {
    return converse_ri(observations, observation_language(observations));
}

SeparateVsUnion separate_vs_union(const std::vector<Observation>& observations, const SentenceSet& premises,
                                  const SentenceSet& language) {
    SeparateVsUnion out;
    out.united = closure(converse_ri(observations, language), premises).closure;
    out.separate = premises;
    for (const auto& o : observations) {
        const LogicSystem single(language, observation_rules(o));
        const auto c = closure(single, premises).closure;
        out.separate.insert(c.begin(), c.end());
    }
    for (const auto& p : premises)
        if (!language.count(p)) throw Error(ErrorKind::UnknownSentence, "premise '" + p + "' is not in the language");
    out.equal = out.separate == out.united;
    return out;
}

SeparateVsUnion separate_vs_union(const std::vector<Observation>& observations, const SentenceSet& premises) {
    SentenceSet language = observation_language(observations);
    language.insert(premises.begin(), premises.end());
    return separate_vs_union(observations, premises, language);
}

std::set<std::pair<Sentence, Sentence>> tag_j_prime(const PerceivedContext& ctx, const SentenceSet& X) {
    require_perceived(ctx, X);
    std::set<std::pair<Sentence, Sentence>> out;
    for (const auto& x : X) {
        if (x.ends_with(ctx.tag())) throw Error(ErrorKind::TagCollision, "'" + x + "' already carries the tag");
        out.emplace(x, x + ctx.tag());
    }
    return out;
}

bool behavior_within(const PerceivedContext& ctx, const std::set<std::pair<SentenceSet, SentenceSet>>& relation) {
    const std::vector<Sentence> P(ctx.perceived().begin(), ctx.perceived().end());
    if (P.size() > kMaxTheoryPerceived)
        throw Error(ErrorKind::InvalidArgument, "|P| = " + std::to_string(P.size()) + " is too large to sweep");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << P.size()); ++mask) {
        const SentenceSet X = subset_of(P, mask);
        SentenceSet fresh;
        for (const auto& y : perceived_closure(ctx, X))
            if (!X.count(y)) fresh.insert(y);
        if (!fresh.empty() && !relation.count({X, fresh})) return false;
    }
    return true;
}

}  // namespace ultraword
