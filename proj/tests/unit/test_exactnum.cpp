#include <doctest.h>

#include <random>

#include "genring/exactnum.hpp"

using namespace genring;

namespace {

// Independent oracle: machine-integer valuation by repeated division.
long naive_vp(long p, long num, long den) {
    long e = 0;
    while (num % p == 0) num /= p, ++e;
    while (den % p == 0) den /= p, --e;
    return e;
}

Rat random_rat(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(1, bound);
    long a = d(rng);
    if (rng() & 1) a = -a;
    return Rat(BigInt(a), BigInt(d(rng)));
}

}  // namespace

TEST_SUITE("exactnum") {

TEST_CASE("rationals stay in lowest terms") {
    const Rat r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rat::parse("10/4") == Rat(5, 2));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse(" 3/9 ").str() == "1/3");
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("vp examples") {
    CHECK(vp(2, Rat(12)) == 2);
    CHECK(vp(3, Rat(6, 5)) == 1);
    CHECK(vp(5, Rat(6, 5)) == -1);
    CHECK_THROWS_WITH_AS(vp(2, Rat(0)), "valuation undefined at zero", std::domain_error);
    CHECK_THROWS_AS(vp(4, Rat(3)), std::invalid_argument);
}

TEST_CASE("abs_at examples") {
    CHECK(abs_at(Place::prime(2), Rat(12)) == Rat(1, 4));
    CHECK(abs_at(Place::infinity(), Rat(-3, 2)) == Rat(3, 2));
    CHECK(abs_at(Place::prime(7), Rat(3)) == Rat(1));
    CHECK(abs_at(Place::prime(7), Rat(0)) == Rat(0));
    CHECK_THROWS_AS(Place::prime(9), std::invalid_argument);
}

TEST_CASE("product formula examples") {
    auto one = product_formula_check(Rat(1));
    CHECK(one.holds);
    CHECK(one.factors.empty());

    auto r = product_formula_check(Rat(6, 5));
    CHECK(r.holds);
    REQUIRE(r.factors.size() == 3);
    CHECK(r.factors.at(2) == Rat(1, 2));
    CHECK(r.factors.at(3) == Rat(1, 3));
    CHECK(r.factors.at(5) == Rat(5));
    CHECK(r.product == Rat(5, 6));

    auto m = product_formula_check(Rat(-12));
    CHECK(m.holds);
    REQUIRE(m.factors.size() == 2);
    CHECK(m.factors.at(2) == Rat(1, 4));
    CHECK(m.factors.at(3) == Rat(1, 3));
    CHECK(m.product == Rat(1, 12));

    CHECK_THROWS_AS(product_formula_check(Rat(0)), std::domain_error);
}

TEST_CASE("vp agrees with the machine-integer oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const long a = d(rng), b = d(rng);
        for (long p : {2L, 3L, 5L, 7L, 11L, 997L}) CHECK(vp(p, Rat(BigInt(a), BigInt(b))) == naive_vp(p, a, b));
    }
}

TEST_CASE("vp is additive on products") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const Rat x = random_rat(rng, 100000), y = random_rat(rng, 100000);
        for (long p : {2L, 3L, 5L, 13L}) CHECK(vp(p, x * y) == vp(p, x) + vp(p, y));
    }
}

TEST_CASE("ultrametric inequality") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Rat x = random_rat(rng, 5000), y = random_rat(rng, 5000);
        if ((x + y).is_zero()) continue;
        for (long p : {2L, 3L, 5L}) CHECK(vp(p, x + y) >= std::min(vp(p, x), vp(p, y)));
    }
}

TEST_CASE("product formula on random rationals up to 1e6") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 2000; ++i) CHECK(product_formula_check(random_rat(rng, 1000000)).holds);
}

TEST_CASE("factorization helpers") {
    CHECK(omega(BigInt(12)) == 2);
    CHECK(radical(BigInt(72)) == 6);
    CHECK(prime_divisors(BigInt(9973)).size() == 1);
    CHECK(floor_sqrt(Rat(17, 2)) == 2);
    CHECK(floor_sqrt(Rat(9)) == 3);
}

}
