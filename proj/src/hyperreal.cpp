#include "ultraword/hyperreal.hpp"

#include <algorithm>

namespace ultraword {

SubparticleRep::SubparticleRep(HyperNatural first, HyperNatural second, std::vector<EpsilonSeries> tail)
    : first_(std::move(first)), second_(std::move(second)), tail_(std::move(tail)) {
    if (tail_.empty()) throw Error(ErrorKind::ArityMismatch, "a subparticle representation needs arity >= 3");
}

bool SubparticleRep::is_limited() const {
    return std::all_of(tail_.begin(), tail_.end(), [](const EpsilonSeries& a) { return a.is_limited(); });
}

std::string SubparticleRep::str() const {
    std::string out = "(" + first_.str() + ", " + second_.str();
    for (const auto& a : tail_) out += ", " + a.str();
    return out + ")";
}

std::strong_ordering operator<=>(const SubparticleRep& a, const SubparticleRep& b) {
    if (auto c = a.first_ <=> b.first_; c != 0) return c;
    if (auto c = a.second_ <=> b.second_; c != 0) return c;
    if (auto c = a.tail_.size() <=> b.tail_.size(); c != 0) return c;
    // Exponent maps compare structurally: lexicographic over (exponent, coefficient).
    for (std::size_t k = 0; k < a.tail_.size(); ++k) {
        const auto& ta = a.tail_[k].terms();
        const auto& tb = b.tail_[k].terms();
        if (auto c = std::lexicographical_compare_three_way(ta.begin(), ta.end(), tb.begin(), tb.end()); c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

SPUniverse::SPUniverse(std::size_t arity, SubparticleSet members) : arity_(arity), members_(std::move(members)) {
    if (arity_ < 3) throw Error(ErrorKind::ArityMismatch, "universe arity must be at least 3");
    for (const auto& s : members_) {
        if (s.arity() != arity_)
            throw Error(ErrorKind::ArityMismatch, s.str() + " has arity " + std::to_string(s.arity()) + ", expected " +
                                                      std::to_string(arity_));
        if (!s.is_limited()) throw Error(ErrorKind::Unlimited, s.str() + " has an unlimited coordinate");
    }
}

SubparticleSet SPUniverse::closed() const { return st_extended(members_); }

Rational st_point(const EpsilonSeries& x) {
    if (!x.is_limited()) throw Error(ErrorKind::Unlimited, x.str() + " is not in G(0)");
    return x.coefficient(0);
}

SubparticleRep st_subparticle(const SubparticleRep& s) {
    std::vector<EpsilonSeries> tail;
    tail.reserve(s.tail().size());
    for (const auto& a : s.tail()) tail.emplace_back(st_point(a));
    return SubparticleRep(HyperNatural::standard(0), HyperNatural::standard(0), std::move(tail));
}

SubparticleSet st_set(const SubparticleSet& A) {
    SubparticleSet out;
    for (const auto& s : A) out.insert(st_subparticle(s));
    return out;
}

SubparticleSet st_extended(const SubparticleSet& X) {
    SubparticleSet out = X;
    const auto st = st_set(X);
    out.insert(st.begin(), st.end());
    return out;
}

SubparticleSet realism_relation(const SubparticleSet& Y) {
    SubparticleSet out;
    for (const auto& s : st_extended(Y))
        if (!Y.count(s)) out.insert(s);
    return out;
}

bool all_nonstandard(const SubparticleSet& Y) {
    return std::all_of(Y.begin(), Y.end(), [](const SubparticleRep& s) {
        return std::all_of(s.tail().begin(), s.tail().end(),
                           [](const EpsilonSeries& a) { return a.is_limited() && !a.is_standard(); });
    });
}

}  // namespace ultraword
