#pragma once

/**
 * @file numerics.hpp
 * @brief Exact arithmetic: rationals, truncated epsilon series and symbolic
 * hypernatural markers.
 *
 * Rational is always held in lowest terms with a positive denominator, so
 * structural equality is value equality. EpsilonSeries is a finite formal sum
 * Σ q_k ε^k over a fixed positive infinitesimal ε; negative exponents are
 * allowed so that unlimited values can be written down (and rejected later).
 * Nothing is ever truncated.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ultraword/error.hpp"

namespace ultraword {

using Integer = mpz_class;

std::strong_ordering compare(const Integer& a, const Integer& b);

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    /// Throws DivisionByZero when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; the result is
    /// canonicalized. Throws ParseError (or DivisionByZero for q == 0).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// "p/q" in lowest terms, "p" when q == 1.
    std::string str() const;

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;
    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_{0};
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four field operations.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// Finite series Σ q_k ε^k. Coefficients stored are never zero.
class EpsilonSeries {
public:
    using Terms = std::map<long, Rational>;

    EpsilonSeries() = default;
    EpsilonSeries(const Rational& constant);  // NOLINT(google-explicit-constructor)
    explicit EpsilonSeries(const Terms& terms);

    /// coefficient · ε^exponent
    static EpsilonSeries monomial(const Rational& coefficient, long exponent);
    static EpsilonSeries epsilon() { return monomial(Rational(1), 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(long exponent) const;

    /// Lowest exponent with a nonzero coefficient; nullopt for zero.
    std::optional<long> min_exponent() const;
    /// Member of G(0): no negative exponents.
    bool is_limited() const;
    /// Limited and equal to its constant term.
    bool is_standard() const;

    EpsilonSeries operator-() const;
    EpsilonSeries operator+(const EpsilonSeries& rhs) const;
    EpsilonSeries operator-(const EpsilonSeries& rhs) const;
    EpsilonSeries operator*(const EpsilonSeries& rhs) const;

    /// Human-readable form, e.g. "3/2 + 5ε - ε^2".
    std::string str() const;

    friend bool operator==(const EpsilonSeries& a, const EpsilonSeries& b) = default;
    /// Field order of the hyperreal model: the sign of the lowest-exponent
    /// coefficient of (b - a) decides.
    friend std::strong_ordering operator<=>(const EpsilonSeries& a, const EpsilonSeries& b);

private:
    void add_term(long exponent, const Rational& coefficient);

    Terms terms_;
};

/// A standard natural or a symbolic infinite marker label+offset (λ, λ-1, ...).
class HyperNatural {
public:
    struct Std {
        std::uint64_t value = 0;
        bool operator==(const Std&) const = default;
    };
    struct Inf {
        std::string label;
        std::int64_t offset = 0;
        bool operator==(const Inf&) const = default;
    };

    HyperNatural() = default;
    static HyperNatural standard(std::uint64_t n) { return HyperNatural(Std{n}); }
    static HyperNatural infinite(std::string label, std::int64_t offset = 0) {
        return HyperNatural(Inf{std::move(label), offset});
    }

    bool is_standard() const { return std::holds_alternative<Std>(value_); }
    const Std* as_standard() const { return std::get_if<Std>(&value_); }
    const Inf* as_infinite() const { return std::get_if<Inf>(&value_); }

    std::string str() const;

    friend bool operator==(const HyperNatural&, const HyperNatural&) = default;
    /// Structural order (standard < infinite, labels lexicographic). Used for
    /// container keys only; the semantic order needs a HyperLabelContext.
    friend std::strong_ordering operator<=>(const HyperNatural& a, const HyperNatural& b);

private:
    explicit HyperNatural(std::variant<Std, Inf> value) : value_(std::move(value)) {}

    std::variant<Std, Inf> value_{Std{}};
};

/// Declares the relative order of infinite labels: earlier labels are smaller.
class HyperLabelContext {
public:
    HyperLabelContext() = default;
    explicit HyperLabelContext(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    bool declares(std::string_view label) const;

    /// Throws UnknownLabel for an undeclared label.
    std::strong_ordering compare(const HyperNatural& a, const HyperNatural& b) const;

private:
    std::size_t rank(const std::string& label) const;

    std::vector<std::string> labels_;
};

}  // namespace ultraword
