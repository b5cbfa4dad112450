#pragma once

/**
 * @file hyperreal.hpp
 * @brief Standard part on the epsilon-series model, lifted to subparticle
 * representations and to sets of them.
 *
 * A representation (k, λ, a_3, ..., a_n) has two hypernatural leading
 * coordinates and limited tail coordinates. st sends it to
 * (0, 0, st a_3, ..., st a_n); St is the image map on sets and
 * 'St(X) = X ∪ St(X). 'St is a finite consequence operator on any set of
 * representations closed under St.
 */

#include <set>
#include <vector>

#include "ultraword/numerics.hpp"

namespace ultraword {

class SubparticleRep {
public:
    /// Throws ArityMismatch when the tail is empty (arity < 3).
    SubparticleRep(HyperNatural first, HyperNatural second, std::vector<EpsilonSeries> tail);

    const HyperNatural& first() const { return first_; }
    const HyperNatural& second() const { return second_; }
    const std::vector<EpsilonSeries>& tail() const { return tail_; }
    std::size_t arity() const { return 2 + tail_.size(); }

    /// Every tail coordinate lies in G(0).
    bool is_limited() const;

    std::string str() const;

    friend bool operator==(const SubparticleRep&, const SubparticleRep&) = default;
    /// Structural order for container keys.
    friend std::strong_ordering operator<=>(const SubparticleRep& a, const SubparticleRep& b);

private:
    HyperNatural first_;
    HyperNatural second_;
    std::vector<EpsilonSeries> tail_;
};

using SubparticleSet = std::set<SubparticleRep>;

/// A declared finite piece of SP: one arity, limited members.
class SPUniverse {
public:
    /// Throws ArityMismatch or Unlimited.
    SPUniverse(std::size_t arity, SubparticleSet members);

    std::size_t arity() const { return arity_; }
    const SubparticleSet& members() const { return members_; }
    /// members ∪ St(members): the smallest superset 'St maps into itself.
    SubparticleSet closed() const;

private:
    std::size_t arity_;
    SubparticleSet members_;
};

/// Constant term. Throws Unlimited for a negative exponent.
Rational st_point(const EpsilonSeries& x);

/// (0, 0, st a_3, ..., st a_n). Throws Unlimited.
SubparticleRep st_subparticle(const SubparticleRep& s);

SubparticleSet st_set(const SubparticleSet& A);

/// X ∪ St(X)
SubparticleSet st_extended(const SubparticleSet& X);

/// 'St(Y) - Y
SubparticleSet realism_relation(const SubparticleSet& Y);

/// Every tail coordinate of every member has a nonzero infinitesimal part.
bool all_nonstandard(const SubparticleSet& Y);

}  // namespace ultraword
