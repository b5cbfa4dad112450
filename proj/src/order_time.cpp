#include "ultraword/order_time.hpp"

#include <sstream>

namespace ultraword {

namespace {

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// Admissible index pairs of the box, lex order, without evaluating the rule.
std::vector<IndexPair> box_indices(const IntervalKind& kind, const Integer& i_lo, const Integer& i_hi,
                                   std::uint64_t j_max) {
    if (i_lo > i_hi)
        throw Error(ErrorKind::InvalidArgument, "empty subinterval range " + i_lo.get_str() + ".." + i_hi.get_str());
    if (const auto lo = kind.i_min(); lo && i_lo < *lo)
        throw Error(ErrorKind::InadmissibleIndex,
                    "subinterval " + i_lo.get_str() + " is outside interval kind q=" + std::to_string(kind.q()));
    if (const auto hi = kind.i_max(); hi && i_hi > *hi)
        throw Error(ErrorKind::InadmissibleIndex,
                    "subinterval " + i_hi.get_str() + " is outside interval kind q=" + std::to_string(kind.q()));
    const auto endpoint = kind.endpoint_row();
    std::vector<IndexPair> out;
    for (Integer i = i_lo; i <= i_hi; ++i) {
        const std::uint64_t last = (endpoint && *endpoint == i) ? 0 : j_max;
        for (std::uint64_t j = 0; j <= last; ++j) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace

IntervalKind IntervalKind::bounded(const Rational& b, std::uint64_t m) {
    if (b.sign() <= 0) throw Error(ErrorKind::InvalidScheme, "bounded interval needs b > 0, got " + b.str());
    if (m == 0) throw Error(ErrorKind::InvalidScheme, "bounded interval needs m > 0 subintervals");
    IntervalKind k(Shape::bounded);
    k.b_ = b;
    k.m_ = m;
    return k;
}

IntervalKind IntervalKind::from_q(int q) {
    switch (q) {
        case 2: return nonnegative();
        case 3: return nonpositive();
        case 4: return whole();
        case 1: throw Error(ErrorKind::InvalidScheme, "q=1 needs b and m; use IntervalKind::bounded");
        default: throw Error(ErrorKind::InvalidScheme, "interval kind q must be 1..4, got " + std::to_string(q));
    }
}

std::optional<Integer> IntervalKind::i_min() const {
    if (shape_ == Shape::bounded || shape_ == Shape::nonnegative) return Integer(0);
    return std::nullopt;
}

std::optional<Integer> IntervalKind::i_max() const {
    if (shape_ == Shape::bounded) return to_integer(m_);
    if (shape_ == Shape::nonpositive) return Integer(0);
    return std::nullopt;
}

std::optional<Integer> IntervalKind::endpoint_row() const {
    if (shape_ == Shape::bounded) return to_integer(m_);
    if (shape_ == Shape::nonpositive) return Integer(0);
    return std::nullopt;
}

bool IntervalKind::admits(const IndexPair& idx) const {
    if (const auto lo = i_min(); lo && idx.i < *lo) return false;
    if (const auto hi = i_max(); hi && idx.i > *hi) return false;
    if (const auto e = endpoint_row(); e && idx.i == *e && idx.j != 0) return false;
    return true;
}

Rational default_point(std::uint64_t K, const IndexPair& idx) {
    const Integer pow2 = Integer(1) << static_cast<mp_bitcnt_t>(idx.j);
    // (1/K)(i + 1 - 1/2^j) = ((i + 1)·2^j - 1) / (K·2^j)
    return Rational((idx.i + 1) * pow2 - 1, to_integer(K) * pow2);
}

PartitionScheme::PartitionScheme(std::uint64_t K, IntervalKind kind) : PartitionScheme(K, std::move(kind), nullptr) {}

PartitionScheme::PartitionScheme(std::uint64_t K, IntervalKind kind, PointRule rule)
    : K_(K), kind_(std::move(kind)), rule_(std::move(rule)) {
    if (K_ == 0) throw Error(ErrorKind::InvalidScheme, "K must be positive");
    if (kind_.shape() == IntervalKind::Shape::bounded && c(to_integer(kind_.subintervals())) != kind_.bound())
        throw Error(ErrorKind::InvalidScheme, "bounded interval needs b = m/K; got b=" + kind_.bound().str() +
                                                  ", m=" + std::to_string(kind_.subintervals()) +
                                                  ", K=" + std::to_string(K_));
}

Rational PartitionScheme::raw_point(const IndexPair& idx) const {
    return rule_ ? rule_(idx) : default_point(K_, idx);
}

Rational PartitionScheme::point(const IndexPair& idx) const {
    if (!kind_.admits(idx))
        throw Error(ErrorKind::InadmissibleIndex,
                    "index " + idx.str() + " is not admissible for q=" + std::to_string(kind_.q()));
    return raw_point(idx);
}

std::optional<std::string> PartitionScheme::validate_rule(const Integer& i_lo, const Integer& i_hi,
                                                          std::uint64_t j_max) const {
    std::optional<Rational> previous;
    for (const auto& idx : box_indices(kind_, i_lo, i_hi, j_max)) {
        const Rational t = raw_point(idx);
        if (idx.j == 0) {
            if (t != c(idx.i)) return "t" + idx.str() + " = " + t.str() + " differs from c_i = " + c(idx.i).str();
        } else if (previous && !(*previous < t)) {
            return "t" + idx.str() + " = " + t.str() + " does not increase in j";
        }
        const bool endpoint = kind_.endpoint_row() && *kind_.endpoint_row() == idx.i;
        if (!endpoint && !(t < c(idx.i + 1)))
            return "t" + idx.str() + " = " + t.str() + " reaches c_{i+1} = " + c(idx.i + 1).str();
        previous = t;
    }
    return std::nullopt;
}

Rational partition_point(const PartitionScheme& s, const IndexPair& idx) { return s.point(idx); }

std::vector<PartitionPoint> enumerate_points(const PartitionScheme& s, const Integer& i_lo, const Integer& i_hi,
                                             std::uint64_t j_max) {
    if (!s.has_default_rule()) {
        if (auto failure = s.validate_rule(i_lo, i_hi, j_max)) throw Error(ErrorKind::InvalidPointRule, *failure);
    }
    std::vector<PartitionPoint> out;
    for (auto& idx : box_indices(s.kind(), i_lo, i_hi, j_max)) {
        Rational t = s.raw_point(idx);
        out.push_back({std::move(idx), std::move(t)});
    }
    return out;
}

bool verify_order_embedding(const PartitionScheme& s, const Integer& i_lo, const Integer& i_hi, std::uint64_t j_max) {
    std::vector<PartitionPoint> points;
    for (auto& idx : box_indices(s.kind(), i_lo, i_hi, j_max)) {
        Rational t = s.raw_point(idx);
        points.push_back({std::move(idx), std::move(t)});
    }
    for (const auto& a : points)
        for (const auto& b : points)
            if ((a.t <= b.t) != (a.index <= b.index)) return false;
    return true;
}

std::string points_to_csv(const std::vector<PartitionPoint>& points) {
    std::ostringstream out;
    out << "i,j,t\n";
    for (const auto& p : points) out << p.index.i.get_str() << ',' << p.index.j << ',' << p.t.str() << '\n';
    return out.str();
}

}  // namespace ultraword
