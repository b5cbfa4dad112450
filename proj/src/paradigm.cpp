#include "ultraword/paradigm.hpp"

namespace ultraword {

namespace {

// f|[0,n] ∈ X_n, unfolded from n down to the base case.
bool in_x(const PartialSequence& f, const XFamily& fam, std::size_t n) {
    if (!fam.D.count(f[n])) return false;
    if (n == 1) return f[0] == fam.F;
    return in_x(f, fam, n - 1);
}

std::string describe(const TruncationParams& t) {
    return "m=" + std::to_string(t.m) + ", p=" + std::to_string(t.p) + ", n=" + std::to_string(t.n);
}

}  // namespace

bool x_membership(const PartialSequence& f, const XFamily& fam) {
    if (f.size() < 2) return false;
    return in_x(f, fam, f.size() - 1);
}

bool dp_membership(const SequenceOracle& f, const XFamily& fam, std::uint64_t horizon) {
    if (horizon == 0) throw Error(ErrorKind::InvalidArgument, "horizon must be at least 1");
    PartialSequence prefix{f(0)};
    if (prefix[0] != fam.F) return false;
    for (std::uint64_t k = 1; k <= horizon; ++k) {
        prefix.push_back(f(k));
        if (!x_membership(prefix, fam)) return false;
    }
    return true;
}

void check_truncation(const PartitionScheme& scheme, const TruncationParams& t) {
    const auto& kind = scheme.kind();
    bool ok = true;
    switch (kind.shape()) {
        case IntervalKind::Shape::bounded:
            ok = t.m > 0 && static_cast<std::uint64_t>(t.m) <= kind.subintervals();
            break;
        case IntervalKind::Shape::nonnegative: ok = t.m >= 0; break;
        case IntervalKind::Shape::nonpositive: ok = t.m <= 0; break;
        case IntervalKind::Shape::whole: ok = t.m <= 0 && t.p >= 0; break;
    }
    if (!ok)
        throw Error(ErrorKind::InadmissibleIndex,
                    "truncation " + describe(t) + " does not fit interval kind q=" + std::to_string(kind.q()));
}

bool in_h_bounds(const IntervalKind& kind, const TruncationParams& t, const IndexPair& idx) {
    const Integer& i = idx.i;
    const bool j_ok = idx.j <= t.n;
    switch (kind.shape()) {
        case IntervalKind::Shape::bounded: return (i >= 0 && i < t.m && j_ok) || (i == t.m && idx.j == 0);
        case IntervalKind::Shape::nonnegative: return i >= 0 && i <= t.m && j_ok;
        case IntervalKind::Shape::nonpositive: return (i >= t.m && i < 0 && j_ok) || (i == 0 && idx.j == 0);
        case IntervalKind::Shape::whole: return i >= t.m && i <= t.p && j_ok;
    }
    return false;
}

std::vector<IndexPair> h_indices(const PartitionScheme& scheme, const TruncationParams& t) {
    check_truncation(scheme, t);
    long lo = 0;
    long hi = 0;
    switch (scheme.kind().shape()) {
        case IntervalKind::Shape::bounded: hi = t.m; break;
        case IntervalKind::Shape::nonnegative: hi = t.m; break;
        case IntervalKind::Shape::nonpositive: lo = t.m; break;
        case IntervalKind::Shape::whole:
            lo = t.m;
            hi = t.p;
            break;
    }
    std::vector<IndexPair> out;
    for (const auto& p : enumerate_points(scheme, Integer(lo), Integer(hi), t.n))
        if (in_h_bounds(scheme.kind(), t, p.index)) out.push_back(p.index);
    return out;
}

std::set<FrozenSegment> build_H(const DevelopmentalParadigm& dp, const TruncationParams& t) {
    std::set<FrozenSegment> out;
    for (const auto& idx : h_indices(dp.scheme(), t)) out.insert(dp.segment_of(idx));
    return out;
}

Integer h_size(const IntervalKind& kind, const TruncationParams& t) {
    const Integer rows_n = Integer(static_cast<unsigned long>(t.n)) + 1;
    switch (kind.shape()) {
        case IntervalKind::Shape::bounded: return Integer(t.m) * rows_n + 1;
        case IntervalKind::Shape::nonnegative: return (Integer(t.m) + 1) * rows_n;
        case IntervalKind::Shape::nonpositive: return Integer(-t.m) * rows_n + 1;
        case IntervalKind::Shape::whole: return (Integer(t.p) - t.m + 1) * rows_n;
    }
    return 0;
}

Ultraword ultraword_approx(const DevelopmentalParadigm& dp, const TruncationParams& t) {
    std::set<FrozenSegment> H = build_H(dp, t);
    if (H.size() < 2)
        throw Error(ErrorKind::TooFewMembers, "H(" + describe(t) + ") has " + std::to_string(H.size()) +
                                                  " member(s); a conjunction needs two or more");
    ConjunctionWord w = build_conjunction_word(H);
    for (const auto& x : H)
        if (!s_contains(w, x)) throw Error(ErrorKind::InvalidArgument, "conjunction word misses " + x.text());
    return {std::move(w), std::move(H)};
}

}  // namespace ultraword
