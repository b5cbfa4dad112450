#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ultraword/paradigm.hpp"

using namespace ultraword;

namespace {

DevelopmentalParadigm make_dp(int q, std::uint64_t K, std::uint64_t bounded_m = 3) {
    if (q == 1) {
        const Rational b(Integer(static_cast<unsigned long>(bounded_m)), Integer(static_cast<unsigned long>(K)));
        return DevelopmentalParadigm(PartitionScheme(K, IntervalKind::bounded(b, bounded_m)), template_bodies("e {i} {j}"));
    }
    return DevelopmentalParadigm(PartitionScheme(K, IntervalKind::from_q(q)), template_bodies("e {i} {j}"));
}

TruncationParams trunc(long m, std::uint64_t n, long p = 0) {
    TruncationParams t;
    t.m = m;
    t.n = n;
    t.p = p;
    return t;
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

}  // namespace

TEST_SUITE("paradigm") {
    TEST_CASE("X_n membership examples") {
        const XFamily fam{{"d1", "d2"}, "F"};
        CHECK(x_membership({"F", "d1"}, fam));
        CHECK_FALSE(x_membership({"d1", "d2"}, fam));
        // unfold: [F,d1] ∈ X_1, d2 ∈ D gives X_2, d1 ∈ D gives X_3
        CHECK(x_membership({"F", "d1", "d2", "d1"}, fam));
        CHECK_FALSE(x_membership({"F", "d1", "zz", "d1"}, fam));
        CHECK_FALSE(x_membership({"F"}, fam));
        // F need not belong to D; later occurrences of F must
        CHECK_FALSE(x_membership({"F", "F"}, fam));
        const XFamily with_f{{"F", "d1"}, "F"};
        CHECK(x_membership({"F", "F"}, with_f));
    }

    TEST_CASE("DP membership to a horizon") {
        const XFamily fam{{"F", "d1", "d2"}, "F"};
        CHECK(dp_membership([](std::uint64_t) { return Sentence("F"); }, fam, 25));
        CHECK_FALSE(dp_membership([](std::uint64_t k) { return Sentence(k == 0 ? "d1" : "F"); }, fam, 3));
        CHECK_FALSE(dp_membership([](std::uint64_t k) { return Sentence(k == 7 ? "zz" : "d1"); },
                                  XFamily{{"d1"}, "d1"}, 10));
        CHECK(dp_membership([](std::uint64_t k) { return Sentence(k == 7 ? "zz" : "d1"); }, XFamily{{"d1"}, "d1"}, 6));
        CHECK(kind_of([&] { (void)dp_membership([](std::uint64_t) { return Sentence("F"); }, fam, 0); }) ==
              ErrorKind::InvalidArgument);

        std::mt19937_64 rng(29);
        const std::vector<Sentence> D{"F", "d1", "d2"};
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Sentence> values{"F"};
            for (int k = 0; k < 10; ++k) values.push_back(D[rng() % 3]);
            CHECK(dp_membership([&](std::uint64_t k) { return values[k]; }, fam, 10));
        }
    }

    TEST_CASE("X_n equals the closed form on every small family") {
        const std::vector<Sentence> pool{"F", "u", "v"};
        for (std::size_t size = 1; size <= 3; ++size) {
            const std::vector<Sentence> values(pool.begin(), pool.begin() + static_cast<long>(size));
            const XFamily fam{SentenceSet(values.begin(), values.end()), "F"};
            for (std::size_t n = 1; n <= 4; ++n)
                for (const auto& f : oracle::all_functions(values, n)) CHECK(x_membership(f, fam) == (f[0] == "F"));
        }
    }

    TEST_CASE("H-set examples") {
        const auto dp1 = make_dp(1, 1, 2);
        const auto h1 = build_H(dp1, trunc(2, 1));
        CHECK(h1.size() == 5);
        CHECK(h_size(dp1.scheme().kind(), trunc(2, 1)) == 5);

        const auto dp4 = make_dp(4, 1);
        const auto h4 = build_H(dp4, trunc(-1, 0, 1));
        CHECK(h4.size() == 3);
        CHECK(h_size(dp4.scheme().kind(), trunc(-1, 0, 1)) == 3);

        const auto dp2 = make_dp(2, 1);
        const auto h2 = build_H(dp2, trunc(0, 0));
        REQUIRE(h2.size() == 1);
        CHECK(*h2.begin() == dp2.segment_of({0, 0}));

        const auto dp3 = make_dp(3, 1);
        CHECK(build_H(dp3, trunc(0, 5)).size() == 1);
        CHECK(build_H(dp3, trunc(-2, 1)).size() == 5);
    }

    TEST_CASE("truncation admissibility") {
        CHECK(kind_of([] { (void)build_H(make_dp(1, 1, 2), trunc(0, 1)); }) == ErrorKind::InadmissibleIndex);
        CHECK(kind_of([] { (void)build_H(make_dp(1, 1, 2), trunc(3, 1)); }) == ErrorKind::InadmissibleIndex);
        CHECK(kind_of([] { (void)build_H(make_dp(2, 1), trunc(-1, 1)); }) == ErrorKind::InadmissibleIndex);
        CHECK(kind_of([] { (void)build_H(make_dp(3, 1), trunc(1, 1)); }) == ErrorKind::InadmissibleIndex);
        CHECK(kind_of([] { (void)build_H(make_dp(4, 1), trunc(1, 1, 2)); }) == ErrorKind::InadmissibleIndex);
        CHECK(kind_of([] { (void)build_H(make_dp(4, 1), trunc(-1, 1, -1)); }) == ErrorKind::InadmissibleIndex);
    }

    TEST_CASE("H membership follows the stated bounds") {
        for (const int q : {1, 2, 3, 4}) {
            const auto dp = make_dp(q, 2, 3);
            const auto t = q == 1 ? trunc(2, 2) : q == 2 ? trunc(2, 2) : q == 3 ? trunc(-2, 2) : trunc(-2, 2, 1);
            const auto H = build_H(dp, t);
            for (long i = -4; i <= 4; ++i)
                for (std::uint64_t j = 0; j <= 4; ++j) {
                    const IndexPair idx(i, j);
                    if (!dp.scheme().kind().admits(idx)) continue;
                    CHECK(H.count(dp.segment_of(idx)) == (in_h_bounds(dp.scheme().kind(), t, idx) ? 1u : 0u));
                }
            CHECK(Integer(static_cast<unsigned long>(H.size())) == h_size(dp.scheme().kind(), t));
        }
    }

    TEST_CASE("H grows monotonically with the truncation") {
        const auto dp4 = make_dp(4, 1);
        for (long m = 0; m >= -3; --m)
            for (long p = 0; p <= 3; ++p)
                for (std::uint64_t n = 0; n <= 3; ++n) {
                    const auto small = build_H(dp4, trunc(m, n, p));
                    for (const auto& bigger : {trunc(m - 1, n, p), trunc(m, n + 1, p), trunc(m, n, p + 1)}) {
                        const auto big = build_H(dp4, bigger);
                        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
                    }
                }
        const auto dp2 = make_dp(2, 2);
        for (long m = 0; m <= 3; ++m)
            for (std::uint64_t n = 0; n <= 3; ++n) {
                const auto small = build_H(dp2, trunc(m, n));
                const auto big = build_H(dp2, trunc(m + 1, n + 1));
                CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
            }
    }

    TEST_CASE("ultraword approximants") {
        const auto dp = make_dp(1, 1, 1);
        const auto u = ultraword_approx(dp, trunc(1, 0));
        REQUIRE(u.word.size() == 2);
        CHECK(u.word.conjuncts()[0] == dp.segment_of({0, 0}));
        CHECK(u.word.conjuncts()[1] == dp.segment_of({1, 0}));

        const auto dp2 = make_dp(1, 1, 2);
        const auto u2 = ultraword_approx(dp2, trunc(2, 1));
        CHECK(u2.word.size() == 5);
        const auto S = s_operator(u2.word);
        for (const auto& x : u2.H) CHECK(S.contains(x));

        CHECK(kind_of([] { (void)ultraword_approx(make_dp(2, 1), trunc(0, 0)); }) == ErrorKind::TooFewMembers);
    }
}
