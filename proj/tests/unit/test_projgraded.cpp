#include <doctest.h>

#include <random>
#include <set>

#include "genring/projgraded.hpp"

using namespace genring;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(BigInt(x));
    return v;
}

BigInt ipow(const BigInt& b, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<GradedElement> random_args(const GradedRingR& r, std::size_t k, long b, std::size_t n, Rng& rng) {
    std::vector<GradedElement> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(graded_random(r, b, n, rng));
    return out;
}

}  // namespace

TEST_SUITE("projgraded") {

TEST_CASE("graded_contains examples") {
    const GradedRingR r(2);
    CHECK(graded_contains(r, 1, iv({1, 1})));
    CHECK_FALSE(graded_contains(r, 1, iv({3})));
    CHECK(graded_contains(r, 0, iv({1})));
    CHECK_FALSE(graded_contains(r, 0, iv({1, -1})));
    CHECK_THROWS_AS(graded_contains(r, -1, iv({0})), std::invalid_argument);
    CHECK_THROWS_AS(GradedRingR(1), std::invalid_argument);
    CHECK_THROWS_AS(graded_make(r, 1, iv({2, 1})), std::invalid_argument);
}

TEST_CASE("graded_substitute examples") {
    const GradedRingR r(2);
    const auto nt2 = graded_substitute(r, f1(r), {f2(r)});
    CHECK(nt2 == GradedElement{2, iv({2})});
    const auto t = graded_make(r, 1, iv({1, 1}));
    const auto x = graded_make(r, 1, iv({1}));
    CHECK(graded_substitute(r, t, {x, x}) == GradedElement{2, iv({2})});
    const auto y = graded_make(r, 1, iv({1, -1}));
    CHECK(graded_substitute(r, graded_unit(), {y}) == y);
    CHECK(graded_substitute(r, graded_make(r, 0, iv({})), {}, 3, 2) == GradedElement{2, iv({0, 0, 0})});
    CHECK_THROWS_AS(graded_substitute(r, t, {x}), std::invalid_argument);
    CHECK_THROWS_AS(graded_substitute(r, t, {x, nt2}), std::invalid_argument);
    CHECK_THROWS_AS(graded_substitute(r, t, {x, y}), std::invalid_argument);
}

TEST_CASE("graded monad laws on random elements") {
    Rng rng(11);
    for (long n : {2, 3, 6}) {
        const GradedRingR r(n);
        for (int trial = 0; trial < 60; ++trial) {
            const long a = static_cast<long>(rng() % 4), b = static_cast<long>(rng() % 4),
                       c = static_cast<long>(rng() % 4);
            const std::size_t k = 1 + rng() % 3, l = 1 + rng() % 3, m = 1 + rng() % 3;
            const auto t = graded_random(r, a, k, rng);
            CHECK(graded_contains(r, a, t.coeffs));
            // unit laws
            CHECK(graded_substitute(r, graded_unit(), {t}) == t);
            std::vector<GradedElement> projs;
            for (std::size_t i = 0; i < k; ++i) projs.push_back(graded_projection(i, k));
            CHECK(graded_substitute(r, t, projs) == t);
            // projection law
            const auto s = random_args(r, k, b, l, rng);
            const std::size_t pick = rng() % k;
            CHECK(graded_substitute(r, graded_projection(pick, k), s) == s[pick]);
            // associativity with degrees adding
            const auto u = random_args(r, l, c, m, rng);
            std::vector<GradedElement> su;
            for (const auto& x : s) su.push_back(graded_substitute(r, x, u));
            const auto lhs = graded_substitute(r, graded_substitute(r, t, s), u);
            const auto rhs = graded_substitute(r, t, su);
            CHECK(lhs == rhs);
            CHECK(lhs.degree == a + b + c);
            CHECK(graded_contains(r, lhs.degree, lhs.coeffs));
        }
    }
}

TEST_CASE("degree-zero localization examples") {
    const GradedRingR r(2);
    auto m = deg0_localization_contains(r, Chart::f1, {Rat(5)}, 64);
    REQUIRE(m.member());
    CHECK(*m.d == 3);
    m = deg0_localization_contains(r, Chart::f2, {Rat(1, 2), Rat(1, 2)}, 64);
    REQUIRE(m.member());
    CHECK(*m.d == 1);
    m = deg0_localization_contains(r, Chart::f1f2, {Rat(BigInt(5), BigInt(4))}, 64);
    REQUIRE(m.member());
    // first d with 5·2^d / 4 integral and ≤ 4^d
    long oracle = 0;
    while (!(5 * ipow(2, oracle) % 4 == 0 && 5 * ipow(2, oracle) / 4 <= ipow(4, oracle))) ++oracle;
    CHECK(*m.d == oracle);
    CHECK(deg0_localization_contains(r, Chart::f1, {Rat(1, 2)}, 64).status == Deg0Membership::Status::not_member);
    CHECK(deg0_localization_contains(r, Chart::f2, {Rat(1), Rat(1, 2)}, 64).status ==
          Deg0Membership::Status::not_member);
    CHECK(deg0_localization_contains(r, Chart::f1, {Rat(BigInt(1) << 20)}, 4).status ==
          Deg0Membership::Status::undecided);
    CHECK(parse_chart("f1f2") == Chart::f1f2);
    CHECK_THROWS_AS(parse_chart("f3"), std::invalid_argument);
}

TEST_CASE("chart sections are Z, A_N and B_N") {
    for (long n : {2, 3, 6}) {
        const GradedRingR r(n);
        const auto sample = localization_sample(n, 500, 3 + n);
        CHECK(localization_equals(r, Chart::f1, CoeffMonad::Z(), sample).ok());
        CHECK(localization_equals(r, Chart::f2, CoeffMonad::AN(n), sample).ok());
        CHECK(localization_equals(r, Chart::f1f2, CoeffMonad::BN(n), sample).ok());
        // the sample separates the three
        CHECK_FALSE(localization_equals(r, Chart::f1, CoeffMonad::BN(n), sample).ok());
        CHECK_FALSE(localization_equals(r, Chart::f2, CoeffMonad::BN(n), sample).ok());
        CHECK_FALSE(localization_equals(r, Chart::f2, CoeffMonad::Z(), sample).ok());
        CHECK_FALSE(localization_equals(r, Chart::f1f2, CoeffMonad::AN(n), sample).ok());
    }
}

TEST_CASE("localization sample hits the boundary") {
    const auto sample = localization_sample(2, 120, 5);
    std::size_t boundary = 0, beyond = 0;
    for (const auto& v : sample) {
        if (l1_norm(v) == Rat(1) && !contains(CoeffMonad::Z(), v)) ++boundary;
        if (l1_norm(v) > Rat(1) && contains(CoeffMonad::BN(2), v) && !contains(CoeffMonad::Z(), v)) ++beyond;
    }
    CHECK(boundary > 0);
    CHECK(beyond > 0);
}

TEST_CASE("radical witness examples") {
    const GradedRingR r(2);
    auto w = radical_witness(r, 1, 1);
    CHECK(w.m == 1);
    CHECK(w.factor == Chart::f1);
    CHECK(w.cofactor == graded_unit());
    w = radical_witness(r, 2, 1);
    CHECK(w.m == 1);
    CHECK(w.factor == Chart::f2);
    w = radical_witness(r, 3, 2);
    CHECK(w.m == 3);
    CHECK(w.factor == Chart::f1);
    CHECK(w.cofactor == GradedElement{5, iv({27})});
    CHECK_THROWS_AS(radical_witness(r, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(radical_witness(r, 1, 0), std::invalid_argument);
}

TEST_CASE("radical witnesses are valid and minimal") {
    for (long n : {2, 3, 6}) {
        const GradedRingR r(n);
        for (long d = 1; d <= 3; ++d) {
            const BigInt cap = ipow(n, d);
            for (BigInt u = -cap; u <= cap; ++u) {
                const auto w = radical_witness(r, u, d);
                const auto f = w.factor == Chart::f1 ? f1(r) : f2(r);
                // t^m = f · cofactor
                REQUIRE(graded_contains(r, w.cofactor.degree, w.cofactor.coeffs));
                const auto prod = graded_substitute(r, f, {w.cofactor});
                CHECK(prod == GradedElement{d * w.m, {ipow(u, w.m)}});
                for (long m = 1; m < w.m; ++m) {
                    const BigInt um = ipow(u, m);
                    const bool by_f1 = abs(um) <= ipow(n, d * m - 1);
                    const bool by_f2 = um % n == 0 && abs(um / n) <= ipow(n, d * m - 1);
                    CHECK_FALSE((by_f1 || by_f2));
                }
            }
        }
    }
}

TEST_CASE("projective space over F1") {
    CHECK(proj_points_F1(0).count() == 1);
    const auto p1 = proj_points_F1(1);
    CHECK(p1.count() == 3);
    std::set<std::string> labels;
    for (auto s : p1.points) labels.insert(p1.label(s));
    CHECK(labels == std::set<std::string>{"xi", "(T0)", "(T1)"});
    CHECK(proj_points_F1(2).count() == 7);
    CHECK(proj_points_F1(2).label(0b101) == "(T0,T2)");
    CHECK_THROWS_AS(proj_points_F1(21), std::invalid_argument);
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto p = proj_points_F1(n);
        CHECK(p.count() == (std::size_t{1} << (n + 1)) - 1);
        std::set<std::uint32_t> cover;
        for (std::size_t i = 0; i <= n; ++i) {
            const auto c = p.chart(i);
            CHECK(c.size() == std::size_t{1} << n);
            cover.insert(c.begin(), c.end());
            for (std::size_t j = i + 1; j <= n; ++j) {
                const auto d = p.chart(j);
                const std::set<std::uint32_t> cs(c.begin(), c.end());
                std::size_t both = 0;
                for (auto x : d) both += cs.count(x);
                CHECK(both == std::size_t{1} << (n - 1));
            }
        }
        CHECK(cover.size() == p.count());
    }
}

TEST_CASE("Proj R is the compactification") {
    for (long n : {2, 6}) {
        const auto c = proj_is_compactification(n, 20);
        CHECK_MESSAGE(c.ok(), c.failure.value_or(""));
        CHECK(c.chart_sections == std::vector<std::string>{"Z", CoeffMonad::AN(n).id(), CoeffMonad::BN(n).id()});
        CHECK(c.opens_checked == 512);
    }
}

}  // TEST_SUITE
