#pragma once

#include <compare>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ultraword/numerics.hpp"
#include "ultraword/order_time.hpp"

namespace ultraword {

/// Reserved connective joining conjuncts; never allowed inside a word.
inline constexpr std::string_view kConnective = "∧";

/// Nonempty symbol sequence. Symbols may not contain the connective.
class Word {
public:
    explicit Word(std::vector<std::string> symbols);
    /// Splits on single spaces.
    static Word from_text(std::string_view text);

    const std::vector<std::string>& symbols() const { return symbols_; }
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<std::string> symbols_;
};

enum class SegmentMode { description, instruction };

std::string_view to_string(SegmentMode mode);
SegmentMode segment_mode_from_string(std::string_view text);

/// "This <mode> is named ⌈t⌉."
std::string naming_clause(SegmentMode mode, const Rational& time_id);
/// Inverse of naming_clause on a clause or on a full segment text ending in
/// one. Throws ParseError when no well-formed clause is found.
Rational extract_time_id(std::string_view text);

/// A description word stamped with its primitive-time identifier. Segments of
/// the same paradigm are ordered by time identifier (≤_D); segments of
/// different paradigms are incomparable under ≤_D.
class FrozenSegment {
public:
    FrozenSegment(Word body, Rational time_id, SegmentMode mode, std::string paradigm);

    const Word& body() const { return body_; }
    const Rational& time_id() const { return time_id_; }
    SegmentMode mode() const { return mode_; }
    const std::string& paradigm() const { return paradigm_; }

    std::string naming_clause() const { return ultraword::naming_clause(mode_, time_id_); }
    /// Body followed by the naming clause; this is the sentence identity.
    std::string text() const;

    friend bool operator==(const FrozenSegment&, const FrozenSegment&) = default;
    /// Total structural order: paradigm, then time, then mode and body.
    friend std::strong_ordering operator<=>(const FrozenSegment& a, const FrozenSegment& b);

private:
    Word body_;
    Rational time_id_;
    SegmentMode mode_;
    std::string paradigm_;
};

/// ≤_D for two segments of one paradigm; throws IncomparableMembers otherwise.
std::strong_ordering compare_d(const FrozenSegment& a, const FrozenSegment& b);

using BodyRule = std::function<Word(const IndexPair&, const Rational&)>;

/// Body from a template with {i}, {j} and {t} placeholders, split on spaces.
BodyRule template_bodies(std::string pattern);
/// Body k = words[j mod size]; the same event may recur at several times.
BodyRule literal_bodies(std::vector<Word> words);

FrozenSegment make_frozen_segment(const Word& body, const PartitionScheme& s, const IndexPair& idx, SegmentMode mode,
                                  std::string paradigm = "D");

/// f = F ∘ t: admissible index -> frozen segment.
class DevelopmentalParadigm {
public:
    DevelopmentalParadigm(PartitionScheme scheme, BodyRule bodies, SegmentMode mode = SegmentMode::description,
                          std::string id = "D");

    const PartitionScheme& scheme() const { return scheme_; }
    SegmentMode mode() const { return mode_; }
    const std::string& id() const { return id_; }

    /// Throws InadmissibleIndex.
    FrozenSegment segment_of(const IndexPair& idx) const;
    /// Segments of the admissible box, lex order on indices.
    std::vector<std::pair<IndexPair, FrozenSegment>> enumerate(const Integer& i_lo, const Integer& i_hi,
                                                               std::uint64_t j_max) const;

private:
    PartitionScheme scheme_;
    BodyRule bodies_;
    SegmentMode mode_;
    std::string id_;
};

/// Conjuncts joined left to right by the connective. At least two distinct
/// segments of one paradigm.
class ConjunctionWord {
public:
    const std::vector<FrozenSegment>& conjuncts() const { return conjuncts_; }
    std::size_t size() const { return conjuncts_.size(); }
    std::string text() const;
    /// Conjunct order is ≤_D increasing.
    bool is_canonical() const;

    friend bool operator==(const ConjunctionWord&, const ConjunctionWord&) = default;
    friend auto operator<=>(const ConjunctionWord& a, const ConjunctionWord& b) { return a.conjuncts_ <=> b.conjuncts_; }

private:
    friend ConjunctionWord make_conjunction(std::vector<FrozenSegment> conjuncts);
    explicit ConjunctionWord(std::vector<FrozenSegment> conjuncts) : conjuncts_(std::move(conjuncts)) {}

    std::vector<FrozenSegment> conjuncts_;
};

/// Validates and wraps an already-arranged conjunct sequence. Throws
/// TooFewMembers, DuplicateMember or IncomparableMembers.
ConjunctionWord make_conjunction(std::vector<FrozenSegment> conjuncts);

enum class ConjunctOrder { canonical, as_given };

/// The word construction on a finite set of two or more segments. Canonical
/// order sorts the conjuncts by ≤_D; as_given keeps the caller's arrangement.
ConjunctionWord build_conjunction_word(std::span<const FrozenSegment> members,
                                       ConjunctOrder order = ConjunctOrder::canonical);
ConjunctionWord build_conjunction_word(const std::set<FrozenSegment>& members);

std::set<FrozenSegment> atoms_of(const ConjunctionWord& w);

/// Finite ordered choice: the members in strictly increasing ≤_D order.
/// Duplicates collapse. Throws IncomparableMembers across paradigms.
std::vector<FrozenSegment> ordered_choice(std::span<const FrozenSegment> members);
std::vector<FrozenSegment> ordered_choice(const std::set<FrozenSegment>& members);

}  // namespace ultraword
