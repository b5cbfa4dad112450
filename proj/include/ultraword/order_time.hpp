#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ultraword/numerics.hpp"

namespace ultraword {

/// Moment (i, j) of primitive time: subinterval i, partition step j.
struct IndexPair {
    Integer i{0};
    std::uint64_t j = 0;

    IndexPair() = default;
    IndexPair(Integer i_, std::uint64_t j_) : i(std::move(i_)), j(j_) {}
    IndexPair(long i_, std::uint64_t j_) : i(i_), j(j_) {}

    std::string str() const { return "(" + i.get_str() + "," + std::to_string(j) + ")"; }

    friend bool operator==(const IndexPair& a, const IndexPair& b) { return a.i == b.i && a.j == b.j; }
    /// Lexicographic: first by i, then by j.
    friend std::strong_ordering operator<=>(const IndexPair& a, const IndexPair& b) {
        if (auto c = compare(a.i, b.i); c != 0) return c;
        return a.j <=> b.j;
    }
};

inline std::strong_ordering lex_compare(const IndexPair& a, const IndexPair& b) { return a <=> b; }

/// The four basic primitive-time intervals.
class IntervalKind {
public:
    enum class Shape : int {
        bounded = 1,       ///< [0, b] split into m subintervals
        nonnegative = 2,   ///< [0, +inf)
        nonpositive = 3,   ///< (-inf, 0]
        whole = 4,         ///< (-inf, +inf)
    };

    /// [0, b] with m subintervals; requires b > 0 and m > 0.
    static IntervalKind bounded(const Rational& b, std::uint64_t m);
    static IntervalKind nonnegative() { return IntervalKind(Shape::nonnegative); }
    static IntervalKind nonpositive() { return IntervalKind(Shape::nonpositive); }
    static IntervalKind whole() { return IntervalKind(Shape::whole); }
    /// Throws InvalidScheme for q outside 1..4 (q == 1 goes through bounded()).
    static IntervalKind from_q(int q);

    Shape shape() const { return shape_; }
    int q() const { return static_cast<int>(shape_); }
    const Rational& bound() const { return b_; }
    std::uint64_t subintervals() const { return m_; }

    /// Lowest/highest admissible subinterval number; nullopt means unbounded.
    std::optional<Integer> i_min() const;
    std::optional<Integer> i_max() const;
    /// The closed-endpoint row (m for q = 1, 0 for q = 3): only (i, 0) exists there.
    std::optional<Integer> endpoint_row() const;

    bool admits(const IndexPair& idx) const;

    friend bool operator==(const IntervalKind&, const IntervalKind&) = default;

private:
    explicit IntervalKind(Shape shape) : shape_(shape) {}

    Shape shape_ = Shape::whole;
    Rational b_{0};
    std::uint64_t m_ = 0;
};

using PointRule = std::function<Rational(const IndexPair&)>;

/// t(i, j) = (1/K)(i + 1 - 1/2^j)
Rational default_point(std::uint64_t K, const IndexPair& idx);

/// Partition of an interval kind into [c_i, c_{i+1}) with c_i = i/K, each
/// subinterval refined by an increasing sequence of points t(i, j).
class PartitionScheme {
public:
    /// Uses the default halving rule. For a bounded kind, b must equal m/K.
    PartitionScheme(std::uint64_t K, IntervalKind kind);
    /// Custom rule; checked lazily via validate_rule() and eagerly by enumerate_points().
    PartitionScheme(std::uint64_t K, IntervalKind kind, PointRule rule);

    std::uint64_t K() const { return K_; }
    const IntervalKind& kind() const { return kind_; }
    bool has_default_rule() const { return !rule_; }

    Rational c(const Integer& i) const { return Rational(i, Integer(static_cast<unsigned long>(K_))); }

    /// Throws InadmissibleIndex when idx is outside the kind.
    Rational point(const IndexPair& idx) const;
    /// No admissibility check.
    Rational raw_point(const IndexPair& idx) const;

    /// Checks t(i,0) = c_i, strict increase in j and t(i,j) < c_{i+1} on the
    /// admissible indices of the box. Returns a description of the first
    /// failure, if any.
    std::optional<std::string> validate_rule(const Integer& i_lo, const Integer& i_hi, std::uint64_t j_max) const;

private:
    std::uint64_t K_;
    IntervalKind kind_;
    PointRule rule_;
};

Rational partition_point(const PartitionScheme& s, const IndexPair& idx);

struct PartitionPoint {
    IndexPair index;
    Rational t;

    friend bool operator==(const PartitionPoint&, const PartitionPoint&) = default;
};

/// All admissible (i, j) with i_lo <= i <= i_hi and j <= j_max in lex order.
/// The closed-endpoint row of a kind contributes only (i, 0). Throws
/// InadmissibleIndex when the i-range leaves the kind and InvalidPointRule
/// when a custom rule fails validation on the box.
std::vector<PartitionPoint> enumerate_points(const PartitionScheme& s, const Integer& i_lo, const Integer& i_hi,
                                             std::uint64_t j_max);

/// True iff t <= t' exactly when idx ⪯ idx' for every enumerated pair.
/// Evaluates the rule directly, so invalid custom rules yield false rather
/// than an exception.
bool verify_order_embedding(const PartitionScheme& s, const Integer& i_lo, const Integer& i_hi, std::uint64_t j_max);

std::string points_to_csv(const std::vector<PartitionPoint>& points);

}  // namespace ultraword
