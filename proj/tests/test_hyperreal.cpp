#include "doctest.h"

#include <random>

#include "ultraword/consequence.hpp"
#include "ultraword/hyperreal.hpp"

using namespace ultraword;

namespace {

EpsilonSeries series(long c0, long c1 = 0, long c2 = 0) {
    return EpsilonSeries(Rational(c0)) + EpsilonSeries::monomial(Rational(c1), 1) + EpsilonSeries::monomial(Rational(c2), 2);
}

SubparticleRep rep(std::vector<EpsilonSeries> tail) {
    return SubparticleRep(HyperNatural::standard(7), HyperNatural::infinite("λ"), std::move(tail));
}

SubparticleRep zeroed(std::vector<EpsilonSeries> tail) {
    return SubparticleRep(HyperNatural::standard(0), HyperNatural::standard(0), std::move(tail));
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

SubparticleSet random_set(std::mt19937_64& rng, std::size_t size) {
    SubparticleSet out;
    while (out.size() < size) {
        const bool standard = rng() % 4 == 0;
        const long c = static_cast<long>(rng() % 3);
        const long e = standard ? 0 : 1 + static_cast<long>(rng() % 2);
        if (standard && rng() % 2)
            out.insert(zeroed({series(c)}));
        else
            out.insert(rep({series(c, e)}));
    }
    return out;
}

}  // namespace

TEST_SUITE("hyperreal") {
    TEST_CASE("standard part of a point") {
        CHECK(st_point(EpsilonSeries(Rational::parse("3/2")) + EpsilonSeries::monomial(Rational(5), 1) -
                       EpsilonSeries::monomial(Rational(1), 2)) == Rational::parse("3/2"));
        CHECK(st_point(EpsilonSeries::epsilon()) == Rational(0));
        CHECK(kind_of([] { (void)st_point(EpsilonSeries::monomial(Rational(1), -1)); }) == ErrorKind::Unlimited);
    }

    TEST_CASE("st is additive and multiplicative on G(0)") {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<long> coef(-9, 9);
        for (int trial = 0; trial < 300; ++trial) {
            const auto x = series(coef(rng), coef(rng), coef(rng));
            const auto y = series(coef(rng), coef(rng), coef(rng));
            CHECK(st_point(x + y) == st_point(x) + st_point(y));
            CHECK(st_point(x * y) == st_point(x) * st_point(y));
        }
    }

    TEST_CASE("standard part of a representation") {
        const auto s = rep({series(2, 1), series(7)});
        const auto st = st_subparticle(s);
        CHECK(st == zeroed({series(2), series(7)}));
        CHECK(st.str() == "(0, 0, 2, 7)");
        CHECK(st_subparticle(st) == st);

        const auto already = SubparticleRep(HyperNatural::standard(3), HyperNatural::standard(4), {series(5)});
        CHECK(st_subparticle(already) == zeroed({series(5)}));

        CHECK(kind_of([] { (void)st_subparticle(rep({EpsilonSeries::monomial(Rational(1), -1)})); }) ==
              ErrorKind::Unlimited);
        CHECK(kind_of([] { SubparticleRep(HyperNatural::standard(0), HyperNatural::standard(0), {}); }) ==
              ErrorKind::ArityMismatch);
    }

    TEST_CASE("St on sets") {
        CHECK(st_set({}).empty());
        const SubparticleSet two{rep({series(1, 1)}), rep({series(1, 2)})};
        CHECK(st_set(two) == SubparticleSet{zeroed({series(1)})});
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 50; ++trial) {
            const auto A = random_set(rng, 1 + trial % 6);
            CHECK(st_set(st_set(A)) == st_set(A));
        }
    }

    TEST_CASE("extended standard part") {
        CHECK(st_extended({}).empty());
        CHECK(st_extended({rep({series(1, 1)})}) == SubparticleSet{rep({series(1, 1)}), zeroed({series(1)})});
        std::mt19937_64 rng(47);
        for (int trial = 0; trial < 50; ++trial) {
            const auto X = random_set(rng, 1 + trial % 6);
            const auto once = st_extended(X);
            CHECK(st_extended(once) == once);
            CHECK(std::includes(once.begin(), once.end(), X.begin(), X.end()));
        }
    }

    TEST_CASE("'St is a finite consequence operator on closed universes") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 30; ++trial) {
            const SPUniverse sp(3, random_set(rng, 1 + trial % 6));
            const auto closed = sp.closed();
            const std::vector<SubparticleRep> universe(closed.begin(), closed.end());
            const auto report = check_consequence_axioms(
                [](const SubparticleSet& X) { return st_extended(X); }, universe);
            CHECK(report.exhaustive);
            CHECK(report.passed());
        }
    }

    TEST_CASE("realism relation") {
        const SubparticleSet Y{rep({series(1, 1), series(0, 0, 3)}), rep({series(2, -1), series(4, 1)})};
        REQUIRE(all_nonstandard(Y));
        CHECK(realism_relation(Y) == st_set(Y));

        const SubparticleSet standard{zeroed({series(1)}), zeroed({series(2)})};
        CHECK(realism_relation(standard).empty());
        CHECK(realism_relation({}).empty());

        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 50; ++trial) {
            const auto Z = random_set(rng, 1 + trial % 6);
            const auto R = realism_relation(Z);
            for (const auto& r : R) CHECK_FALSE(Z.count(r));
        }
    }

    TEST_CASE("universe validation") {
        CHECK(kind_of([] { SPUniverse(4, {rep({series(1)})}); }) == ErrorKind::ArityMismatch);
        CHECK(kind_of([] { SPUniverse(3, {rep({EpsilonSeries::monomial(Rational(1), -2)})}); }) == ErrorKind::Unlimited);
        CHECK(kind_of([] { SPUniverse(2, {}); }) == ErrorKind::ArityMismatch);
    }
}
