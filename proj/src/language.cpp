#include "ultraword/language.hpp"

#include <algorithm>

namespace ultraword {

namespace {

constexpr std::string_view kOpen = "⌈";
constexpr std::string_view kClose = "⌉.";

void replace_all(std::string& s, std::string_view from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
        s.replace(pos, from.size(), to);
}

void require_one_paradigm(std::span<const FrozenSegment> members) {
    for (const auto& m : members)
        if (m.paradigm() != members.front().paradigm())
            throw Error(ErrorKind::IncomparableMembers,
                        "segments from paradigms '" + members.front().paradigm() + "' and '" + m.paradigm() + "'");
}

}  // namespace

Word::Word(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error(ErrorKind::InvalidWord, "a word needs at least one symbol");
    for (const auto& s : symbols_) {
        if (s.empty()) throw Error(ErrorKind::InvalidWord, "empty symbol");
        if (s.find(kConnective) != std::string::npos)
            throw Error(ErrorKind::InvalidWord, "symbol '" + s + "' contains the reserved connective");
    }
}

Word Word::from_text(std::string_view text) {
    std::vector<std::string> symbols;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(' ', start), text.size());
        if (end > start) symbols.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return Word(std::move(symbols));
}

std::string Word::str() const {
    std::string out;
    for (const auto& s : symbols_) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

std::string_view to_string(SegmentMode mode) {
    return mode == SegmentMode::description ? "description" : "instruction";
}

SegmentMode segment_mode_from_string(std::string_view text) {
    if (text == "description") return SegmentMode::description;
    if (text == "instruction") return SegmentMode::instruction;
    throw Error(ErrorKind::ParseError, "mode must be 'description' or 'instruction', got '" + std::string(text) + "'");
}

std::string naming_clause(SegmentMode mode, const Rational& time_id) {
    return "This " + std::string(to_string(mode)) + " is named " + std::string(kOpen) + time_id.str() +
           std::string(kClose);
}

Rational extract_time_id(std::string_view text) {
    const auto open = text.rfind(kOpen);
    if (open == std::string_view::npos || !text.ends_with(kClose))
        throw Error(ErrorKind::ParseError, "no naming clause in '" + std::string(text) + "'");
    const std::string_view prefix = text.substr(0, open);
    if (!prefix.ends_with("This description is named ") && !prefix.ends_with("This instruction is named "))
        throw Error(ErrorKind::ParseError, "malformed naming clause in '" + std::string(text) + "'");
    const auto start = open + kOpen.size();
    return Rational::parse(text.substr(start, text.size() - kClose.size() - start));
}

FrozenSegment::FrozenSegment(Word body, Rational time_id, SegmentMode mode, std::string paradigm)
    : body_(std::move(body)), time_id_(std::move(time_id)), mode_(mode), paradigm_(std::move(paradigm)) {}

std::string FrozenSegment::text() const { return body_.str() + " " + naming_clause(); }

std::strong_ordering operator<=>(const FrozenSegment& a, const FrozenSegment& b) {
    if (auto c = a.paradigm_ <=> b.paradigm_; c != 0) return c;
    if (auto c = a.time_id_ <=> b.time_id_; c != 0) return c;
    if (auto c = a.mode_ <=> b.mode_; c != 0) return c;
    return a.body_ <=> b.body_;
}

std::strong_ordering compare_d(const FrozenSegment& a, const FrozenSegment& b) {
    if (a.paradigm() != b.paradigm())
        throw Error(ErrorKind::IncomparableMembers,
                    "segments from paradigms '" + a.paradigm() + "' and '" + b.paradigm() + "'");
    return a.time_id() <=> b.time_id();
}

BodyRule template_bodies(std::string pattern) {
    return [pattern = std::move(pattern)](const IndexPair& idx, const Rational& t) {
        std::string text = pattern;
        replace_all(text, "{i}", idx.i.get_str());
        replace_all(text, "{j}", std::to_string(idx.j));
        replace_all(text, "{t}", t.str());
        return Word::from_text(text);
    };
}

BodyRule literal_bodies(std::vector<Word> words) {
    if (words.empty()) throw Error(ErrorKind::InvalidArgument, "literal body list is empty");
    return [words = std::move(words)](const IndexPair& idx, const Rational&) { return words[idx.j % words.size()]; };
}

FrozenSegment make_frozen_segment(const Word& body, const PartitionScheme& s, const IndexPair& idx, SegmentMode mode,
                                  std::string paradigm) {
    return FrozenSegment(body, s.point(idx), mode, std::move(paradigm));
}

DevelopmentalParadigm::DevelopmentalParadigm(PartitionScheme scheme, BodyRule bodies, SegmentMode mode, std::string id)
    : scheme_(std::move(scheme)), bodies_(std::move(bodies)), mode_(mode), id_(std::move(id)) {
    if (!bodies_) throw Error(ErrorKind::InvalidArgument, "paradigm needs a body rule");
}

FrozenSegment DevelopmentalParadigm::segment_of(const IndexPair& idx) const {
    Rational t = scheme_.point(idx);
    Word body = bodies_(idx, t);
    return FrozenSegment(std::move(body), std::move(t), mode_, id_);
}

std::vector<std::pair<IndexPair, FrozenSegment>> DevelopmentalParadigm::enumerate(const Integer& i_lo,
                                                                                  const Integer& i_hi,
                                                                                  std::uint64_t j_max) const {
    std::vector<std::pair<IndexPair, FrozenSegment>> out;
    for (const auto& p : enumerate_points(scheme_, i_lo, i_hi, j_max))
        out.emplace_back(p.index, FrozenSegment(bodies_(p.index, p.t), p.t, mode_, id_));
    return out;
}

// ---------------------------------------------------------------------------

std::string ConjunctionWord::text() const {
    std::string out;
    for (const auto& c : conjuncts_) {
        if (!out.empty()) out += " " + std::string(kConnective) + " ";
        out += c.text();
    }
    return out;
}

bool ConjunctionWord::is_canonical() const {
    return std::is_sorted(conjuncts_.begin(), conjuncts_.end(),
                          [](const FrozenSegment& a, const FrozenSegment& b) { return compare_d(a, b) < 0; });
}

ConjunctionWord make_conjunction(std::vector<FrozenSegment> conjuncts) {
    if (conjuncts.size() < 2)
        throw Error(ErrorKind::TooFewMembers,
                    "a conjunction needs two or more members, got " + std::to_string(conjuncts.size()));
    require_one_paradigm(conjuncts);
    std::set<FrozenSegment> seen;
    for (const auto& c : conjuncts)
        if (!seen.insert(c).second) throw Error(ErrorKind::DuplicateMember, "repeated conjunct '" + c.text() + "'");
    return ConjunctionWord(std::move(conjuncts));
}

ConjunctionWord build_conjunction_word(std::span<const FrozenSegment> members, ConjunctOrder order) {
    std::vector<FrozenSegment> conjuncts(members.begin(), members.end());
    if (order == ConjunctOrder::canonical) {
        if (conjuncts.size() >= 2) require_one_paradigm(conjuncts);
        std::sort(conjuncts.begin(), conjuncts.end());
    }
    return make_conjunction(std::move(conjuncts));
}

ConjunctionWord build_conjunction_word(const std::set<FrozenSegment>& members) {
    const std::vector<FrozenSegment> v(members.begin(), members.end());
    return build_conjunction_word(v, ConjunctOrder::canonical);
}

std::set<FrozenSegment> atoms_of(const ConjunctionWord& w) { return {w.conjuncts().begin(), w.conjuncts().end()}; }

std::vector<FrozenSegment> ordered_choice(std::span<const FrozenSegment> members) {
    require_one_paradigm(members);
    std::vector<FrozenSegment> out(members.begin(), members.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (std::size_t k = 1; k < out.size(); ++k)
        if (out[k - 1].time_id() == out[k].time_id())
            throw Error(ErrorKind::IncomparableMembers, "distinct segments share time " + out[k].time_id().str());
    return out;
}

std::vector<FrozenSegment> ordered_choice(const std::set<FrozenSegment>& members) {
    const std::vector<FrozenSegment> v(members.begin(), members.end());
    return ordered_choice(v);
}

}  // namespace ultraword
