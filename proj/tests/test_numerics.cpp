#include "doctest.h"

#include <random>

#include "ultraword/numerics.hpp"

using namespace ultraword;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 30);
    for (;;) {
        Rational r(Integer(num(rng)), Integer(den(rng)));
        if (!nonzero || !r.is_zero()) return r;
    }
}

EpsilonSeries random_series(std::mt19937_64& rng, long min_exp, long max_exp) {
    std::uniform_int_distribution<long> exps(min_exp, max_exp);
    std::uniform_int_distribution<int> count(0, 4);
    EpsilonSeries s;
    for (int k = count(rng); k > 0; --k) s = s + EpsilonSeries::monomial(random_rational(rng), exps(rng));
    return s;
}

}  // namespace

TEST_SUITE("numerics") {
    TEST_CASE("rational arithmetic is exact and canonical") {
        CHECK(rational_arith(q("1/3"), q("1/6"), ArithOp::add) == q("1/2"));
        CHECK(Rational(Integer(2), Integer(4)).str() == "1/2");
        CHECK(Rational(Integer(3), Integer(-6)).str() == "-1/2");
        CHECK(Rational(Integer(6), Integer(3)).str() == "2");
        CHECK(q("-0").str() == "0");
        CHECK((q("1/2") <=> q("2/3")) < 0);
    }

    TEST_CASE("division by zero is rejected") {
        CHECK_THROWS_AS(rational_arith(q("1/2"), Rational(0), ArithOp::div), Error);
        try {
            (void)(q("1/2") / Rational(0));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DivisionByZero);
        }
        CHECK_THROWS_AS(q("3/0"), Error);
    }

    TEST_CASE("rational parsing rejects malformed text") {
        for (const char* bad : {"", "-", "1/", "/2", "1.5", "+3", " 1", "1/2/3", "a"}) {
            CAPTURE(bad);
            try {
                (void)Rational::parse(bad);
                FAIL("accepted malformed rational");
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::ParseError);
            }
        }
        CHECK(q("-12/8").str() == "-3/2");
    }

    TEST_CASE("rational field laws on random triples") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 500; ++trial) {
            const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Rational(0));
            if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
            CHECK(Rational::parse((a * b).str()) == a * b);
        }
    }

    TEST_CASE("epsilon series arithmetic") {
        const auto eps = EpsilonSeries::epsilon();
        const EpsilonSeries x = EpsilonSeries(Rational(1)) + eps;
        const EpsilonSeries y = EpsilonSeries(Rational(2)) - eps;
        CHECK(x + y == EpsilonSeries(Rational(3)));
        CHECK((x + y).terms().size() == 1);
        CHECK(eps * eps == EpsilonSeries::monomial(Rational(1), 2));
        CHECK(eps < EpsilonSeries(q("1/1000")));
        CHECK(EpsilonSeries(Rational(0)).is_zero());
        CHECK(EpsilonSeries::monomial(Rational(0), 3).is_zero());
        CHECK((EpsilonSeries(q("3/2")) + EpsilonSeries::monomial(Rational(5), 1) - EpsilonSeries::monomial(Rational(1), 2))
                  .str() == "3/2 + 5ε - ε^2");
    }

    TEST_CASE("epsilon order: infinitesimals, unlimited values, negatives") {
        const auto eps = EpsilonSeries::epsilon();
        const auto inv = EpsilonSeries::monomial(Rational(1), -1);
        CHECK(EpsilonSeries() < eps);
        CHECK(-eps < EpsilonSeries());
        CHECK(EpsilonSeries(Rational(1000000)) < inv);
        CHECK(EpsilonSeries(Rational(1)) < EpsilonSeries(Rational(1)) + eps * eps);
        CHECK(!inv.is_limited());
        CHECK(eps.is_limited());
    }

    TEST_CASE("epsilon order is a strict total order") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 400; ++trial) {
            const auto a = random_series(rng, -2, 3), b = random_series(rng, -2, 3), c = random_series(rng, -2, 3);
            const int relations = int(a < b) + int(a == b) + int(a > b);
            CHECK(relations == 1);
            if (a < b && b < c) CHECK(a < c);
            CHECK(((a < b) == (b > a)));
            // translation invariance of the field order
            CHECK(((a < b) == (a + c < b + c)));
        }
    }

    TEST_CASE("G(0) is closed under addition and multiplication") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 300; ++trial) {
            const auto x = random_series(rng, 0, 4), y = random_series(rng, 0, 4);
            REQUIRE(x.is_limited());
            REQUIRE(y.is_limited());
            CHECK((x + y).is_limited());
            CHECK((x * y).is_limited());
        }
    }

    TEST_CASE("series multiplication keeps every exponent") {
        const auto a = EpsilonSeries(Rational(1)) + EpsilonSeries::monomial(Rational(1), 5);
        const auto sq = a * a;
        CHECK(sq.coefficient(0) == Rational(1));
        CHECK(sq.coefficient(5) == Rational(2));
        CHECK(sq.coefficient(10) == Rational(1));
    }

    TEST_CASE("hypernatural order") {
        const HyperLabelContext ctx({"λ", "ν"});
        CHECK(ctx.compare(HyperNatural::standard(5), HyperNatural::infinite("λ")) < 0);
        CHECK(ctx.compare(HyperNatural::infinite("λ", 0), HyperNatural::infinite("λ", 1)) < 0);
        CHECK(ctx.compare(HyperNatural::standard(3), HyperNatural::standard(3)) == 0);
        CHECK(ctx.compare(HyperNatural::infinite("ν", -100), HyperNatural::infinite("λ", 100)) > 0);
        CHECK(ctx.compare(HyperNatural::standard(1000000), HyperNatural::infinite("λ", -5)) < 0);
        try {
            (void)ctx.compare(HyperNatural::standard(1), HyperNatural::infinite("γ"));
            FAIL("undeclared label accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnknownLabel);
        }
        CHECK(HyperNatural::infinite("λ", -1).str() == "λ-1");
        CHECK(HyperNatural::infinite("λ", 2).str() == "λ+2");
    }
}
