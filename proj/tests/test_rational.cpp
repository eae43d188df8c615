#include <doctest.h>

#include "ech/oracle.hpp"
#include "ech/rational.hpp"
#include "support.hpp"

using namespace ech;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_CASE("rational parse and print") {
    CHECK(q("6/4").str() == "3/2");
    CHECK(q("-6/4").str() == "-3/2");
    CHECK(q("7").str() == "7");
    CHECK(q("0/5").str() == "0");
    CHECK(q("10/5").is_integer());
    CHECK(q("123456789012345678901234567890/3").str() == "41152263004115226300411522630");

    CHECK_THROWS_AS(q(""), ParseError);
    CHECK_THROWS_AS(q("1/0"), ParseError);
    CHECK_THROWS_AS(q(" 1"), ParseError);
    CHECK_THROWS_AS(q("1/"), ParseError);
    CHECK_THROWS_AS(q("1.5"), ParseError);
    CHECK_THROWS_AS(q("+3"), ParseError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ZeroValue);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(q("1/3") + q("1/6") == q("1/2"));
    CHECK(q("1/3") * q("3") == Rational(1));
    CHECK(q("7/2") / q("7/4") == Rational(2));
    CHECK(q("-7/2").floor() == -4);
    CHECK(q("-7/2").ceil() == -3);
    CHECK(q("1/3") < q("1/2"));
    CHECK_THROWS_AS(q("1") / Rational(0), ZeroValue);
    // no overflow far past 64 bits
    Rational big(1);
    for (int i = 0; i < 100; ++i) big *= q("3/2");
    CHECK(big.denominator() == Integer(1) << 100);
}

TEST_CASE("tilt strings") {
    CHECK(parse_tilt("+") == Tilt::Plus);
    CHECK(parse_tilt("-") == Tilt::Minus);
    CHECK(parse_tilt("0") == Tilt::None);
    CHECK_THROWS_AS(parse_tilt("x"), ParseError);
    CHECK(PerturbedRational{q("3/2"), Tilt::Minus}.str() == "3/2-");
}

TEST_CASE("perturbed order: value first, then tilt") {
    const PerturbedRational lo{q("1"), Tilt::Minus}, mid{q("1"), Tilt::None}, hi{q("1"), Tilt::Plus};
    CHECK(lo < mid);
    CHECK(mid < hi);
    CHECK(hi < PerturbedRational{q("1001/1000"), Tilt::Minus});
}

TEST_CASE("floor_multiple examples") {
    CHECK(floor_multiple({q("3/2"), Tilt::Plus}, 2) == 3);
    CHECK(floor_multiple({q("3/2"), Tilt::Minus}, 2) == 2);
    CHECK(floor_multiple({q("5/3"), Tilt::Minus}, 2) == 3);
    CHECK(floor_multiple({q("5/3"), Tilt::None}, 2) == 3);
    CHECK(floor_multiple({q("-1/2"), Tilt::Plus}, 1) == -1);
}

TEST_CASE("floor_multiple errors") {
    CHECK_THROWS_AS(floor_multiple({q("3/2"), Tilt::Plus}, 0), PreconditionViolation);
    try {
        floor_multiple({q("3/2"), Tilt::None}, 4);
        FAIL("expected DegenerateRatio");
    } catch (const DegenerateRatio& e) {
        CHECK(e.k() == 4);
    }
}

TEST_CASE("reciprocal examples") {
    CHECK(reciprocal({q("3/2"), Tilt::Plus}) == PerturbedRational{q("2/3"), Tilt::Minus});
    CHECK(reciprocal({q("1"), Tilt::Minus}) == PerturbedRational{q("1"), Tilt::Plus});
    CHECK(reciprocal({q("5"), Tilt::None}) == PerturbedRational{q("1/5"), Tilt::None});
    CHECK_THROWS_AS(reciprocal({q("0"), Tilt::Plus}), ZeroValue);
}

TEST_CASE("floor_multiple matches a concrete perturbation 1/N, N = 10^6*k*q") {
    testing::RationalGen gen(0x5eed01);
    for (int trial = 0; trial < 2000; ++trial) {
        const PerturbedRational r{gen.in_range(0, 20, 30), gen.tilt()};
        const auto k = gen.integer(1, 10000);
        const Integer n = Integer(1000000) * k * r.value.denominator();
        CHECK(floor_multiple(r, k) == oracle::floor_multiple_concrete(r, k, n));
    }
}

TEST_CASE("floor_multiple brackets k*value") {
    testing::RationalGen gen(0x5eed02);
    for (int trial = 0; trial < 2000; ++trial) {
        const PerturbedRational r{gen.in_range(0, 10, 8), gen.tilt()};
        const auto k = gen.integer(1, 500);
        const Integer n = floor_multiple(r, k);
        const Rational kv = r.value * Rational(static_cast<long>(k));
        CHECK(Rational(n) <= kv);
        CHECK(kv <= Rational(Integer(n + 1)));
        // the endpoints are only reached from the side the tilt points to
        if (kv == Rational(n)) CHECK(r.tilt == Tilt::Plus);
        if (kv == Rational(Integer(n + 1))) CHECK(r.tilt == Tilt::Minus);
    }
}

TEST_CASE("floor_multiple is monotone in the perturbed order") {
    testing::RationalGen gen(0x5eed03);
    for (int trial = 0; trial < 2000; ++trial) {
        PerturbedRational x{gen.in_range(0, 5, 6), gen.tilt()};
        PerturbedRational y{gen.integer(0, 3) ? gen.in_range(0, 5, 6) : x.value, gen.tilt()};
        if (y < x) std::swap(x, y);
        const auto k = gen.integer(1, 200);
        CHECK(floor_multiple(x, k) <= floor_multiple(y, k));
    }
}

TEST_CASE("reciprocal is an order-reversing involution on positives") {
    testing::RationalGen gen(0x5eed04);
    for (int trial = 0; trial < 1000; ++trial) {
        const PerturbedRational x{gen.in_range(1, 50, 9) / Rational(7), gen.tilt()};
        const PerturbedRational y{gen.in_range(1, 50, 9) / Rational(7), gen.tilt()};
        CHECK(reciprocal(reciprocal(x)) == x);
        if (x < y) CHECK(reciprocal(y) < reciprocal(x));
    }
}
