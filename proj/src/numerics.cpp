#include "ultraword/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ultraword {

namespace {

std::strong_ordering from_cmp(int c) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::strong_ordering compare(const Integer& a, const Integer& b) { return from_cmp(cmp(a, b)); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    Integer num(std::string(num_text), 10);
    const Integer den(std::string(den_text), 10);
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational Rational::operator+(const Rational& rhs) const {
    Rational r;
    r.value_ = value_ + rhs.value_;
    return r;
}

Rational Rational::operator-(const Rational& rhs) const {
    Rational r;
    r.value_ = value_ - rhs.value_;
    return r;
}

Rational Rational::operator*(const Rational& rhs) const {
    Rational r;
    r.value_ = value_ * rhs.value_;
    return r;
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, str() + " / 0");
    Rational r;
    r.value_ = value_ / rhs.value_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return from_cmp(cmp(a.value_, b.value_)); }

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

// ---------------------------------------------------------------------------

EpsilonSeries::EpsilonSeries(const Rational& constant) { add_term(0, constant); }

EpsilonSeries::EpsilonSeries(const Terms& terms) {
    for (const auto& [k, q] : terms) add_term(k, q);
}

EpsilonSeries EpsilonSeries::monomial(const Rational& coefficient, long exponent) {
    EpsilonSeries s;
    s.add_term(exponent, coefficient);
    return s;
}

void EpsilonSeries::add_term(long exponent, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational EpsilonSeries::coefficient(long exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<long> EpsilonSeries::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

bool EpsilonSeries::is_limited() const { return terms_.empty() || terms_.begin()->first >= 0; }

bool EpsilonSeries::is_standard() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

EpsilonSeries EpsilonSeries::operator-() const {
    EpsilonSeries r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, -q);
    return r;
}

EpsilonSeries EpsilonSeries::operator+(const EpsilonSeries& rhs) const {
    EpsilonSeries r = *this;
    for (const auto& [k, q] : rhs.terms_) r.add_term(k, q);
    return r;
}

EpsilonSeries EpsilonSeries::operator-(const EpsilonSeries& rhs) const { return *this + (-rhs); }

EpsilonSeries EpsilonSeries::operator*(const EpsilonSeries& rhs) const {
    EpsilonSeries r;
    for (const auto& [k1, q1] : terms_)
        for (const auto& [k2, q2] : rhs.terms_) r.add_term(k1 + k2, q1 * q2);
    return r;
}

std::string EpsilonSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, q] : terms_) {
        Rational magnitude = q.sign() < 0 ? -q : q;
        if (first)
            out << (q.sign() < 0 ? "-" : "");
        else
            out << (q.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = magnitude == Rational(1);
        if (k == 0) {
            out << magnitude.str();
            continue;
        }
        if (!unit) out << magnitude.str();
        out << "ε";
        if (k != 1) out << "^" << k;
    }
    return out.str();
}

std::strong_ordering operator<=>(const EpsilonSeries& a, const EpsilonSeries& b) {
    const EpsilonSeries diff = b - a;
    if (diff.is_zero()) return std::strong_ordering::equal;
    return diff.terms_.begin()->second.sign() > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------

std::string HyperNatural::str() const {
    if (const auto* s = as_standard()) return std::to_string(s->value);
    const auto& inf = std::get<Inf>(value_);
    if (inf.offset == 0) return inf.label;
    return inf.label + (inf.offset > 0 ? "+" : "") + std::to_string(inf.offset);
}

std::strong_ordering operator<=>(const HyperNatural& a, const HyperNatural& b) {
    const auto* sa = a.as_standard();
    const auto* sb = b.as_standard();
    if (sa && sb) return sa->value <=> sb->value;
    if (sa) return std::strong_ordering::less;
    if (sb) return std::strong_ordering::greater;
    const auto& ia = *a.as_infinite();
    const auto& ib = *b.as_infinite();
    if (auto c = ia.label <=> ib.label; c != 0) return c;
    return ia.offset <=> ib.offset;
}

HyperLabelContext::HyperLabelContext(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw Error(ErrorKind::InvalidArgument, "label '" + labels_[i] + "' declared twice");
}

bool HyperLabelContext::declares(std::string_view label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t HyperLabelContext::rank(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorKind::UnknownLabel, "'" + label + "' was never declared");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::strong_ordering HyperLabelContext::compare(const HyperNatural& a, const HyperNatural& b) const {
    const auto* ia = a.as_infinite();
    const auto* ib = b.as_infinite();
    // Labels are validated even when the other side is standard.
    const std::size_t ra = ia ? rank(ia->label) : 0;
    const std::size_t rb = ib ? rank(ib->label) : 0;
    if (!ia && !ib) return a.as_standard()->value <=> b.as_standard()->value;
    if (!ia) return std::strong_ordering::less;
    if (!ib) return std::strong_ordering::greater;
    if (ra != rb) return ra <=> rb;
    return ia->offset <=> ib->offset;
}

}  // namespace ultraword
