#pragma once

/**
 * @file paradigm.hpp
 * @brief Inductive developmental-paradigm families and the finite H-sets
 * behind ultraword existence.
 *
 * X_1 = {f on [0,1] : f(0) = F, f(1) ∈ D}, X_{n+1} = {f on [0,n+1] :
 * f|[0,n] ∈ X_n, f(n+1) ∈ D}. Membership is decided by unfolding that
 * recursion, never by the closed form f(0) = F.
 *
 * For each interval kind the H-set is the finite block of a paradigm that
 * a single conjunction word must generate:
 *   q=1: {f(i,j) : 0 ≤ i < m, j ≤ n} ∪ {f(m,0)}
 *   q=2: {f(i,j) : 0 ≤ i ≤ m, j ≤ n}
 *   q=3: {f(i,j) : m ≤ i < 0, j ≤ n} ∪ {f(0,0)}
 *   q=4: {f(i,j) : m ≤ i ≤ p, j ≤ n}
 * Infinite truncations are never iterated; they only label output.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ultraword/consequence.hpp"
#include "ultraword/language.hpp"
#include "ultraword/order_time.hpp"

namespace ultraword {

/// A finite sequence f(0), ..., f(n) of sentences.
using PartialSequence = std::vector<Sentence>;
/// Infinite sequence supplied as index -> value.
using SequenceOracle = std::function<Sentence(std::uint64_t)>;

struct XFamily {
    SentenceSet D;
    /// The beginning segment. Need not be a member of D.
    Sentence F;
};

/// f ∈ X_n with n = f.size() - 1 (sequences shorter than two values are in
/// no X_n).
bool x_membership(const PartialSequence& f, const XFamily& fam);

/// f(0) = F and f|[0,k] ∈ X_k for every 1 ≤ k ≤ horizon. Throws
/// InvalidArgument for horizon 0.
bool dp_membership(const SequenceOracle& f, const XFamily& fam, std::uint64_t horizon);

struct TruncationParams {
    long m = 0;
    /// Right extent, used by q=4 only.
    long p = 0;
    std::uint64_t n = 0;
    /// Optional symbolic names for the truncation (e.g. "λ"); never iterated.
    std::optional<std::string> m_label;
    std::optional<std::string> n_label;
};

/// Throws InadmissibleIndex when the truncation does not fit the scheme's kind.
void check_truncation(const PartitionScheme& scheme, const TruncationParams& t);

/// Whether idx lies within the H-set bounds of the truncation.
bool in_h_bounds(const IntervalKind& kind, const TruncationParams& t, const IndexPair& idx);

/// Indices of the H-set in lex order.
std::vector<IndexPair> h_indices(const PartitionScheme& scheme, const TruncationParams& t);

std::set<FrozenSegment> build_H(const DevelopmentalParadigm& dp, const TruncationParams& t);

/// Closed-form |H| for the truncation.
Integer h_size(const IntervalKind& kind, const TruncationParams& t);

struct Ultraword {
    ConjunctionWord word;
    std::set<FrozenSegment> H;
};

/// The conjunction word over build_H(dp, t), canonically ordered, together
/// with H. Verifies H ⊆ S({w}) before returning. Throws TooFewMembers when
/// |H| < 2.
Ultraword ultraword_approx(const DevelopmentalParadigm& dp, const TruncationParams& t);

}  // namespace ultraword
