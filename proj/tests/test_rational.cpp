#include <catch2/catch_amalgamated.hpp>

#include "hankel_lab/rational.hpp"

using namespace hankel_lab;

TEST_CASE("rat builds canonical rationals") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(rat(-6, 4) == rat(3, -2));
    CHECK(rat(0, 5) == Rational(0));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("integer views") {
    CHECK(is_integer(rat(8, 2)));
    CHECK_FALSE(is_integer(rat(1, 3)));
    CHECK(to_integer(rat(8, 2)) == 4);
    CHECK_THROWS_AS(to_integer(rat(1, 3)), std::invalid_argument);
    CHECK(to_long(rat(-7)) == -7);
}

TEST_CASE("qpow handles negative exponents and rejects 0^-k") {
    CHECK(qpow(rat(3, 2), 3) == rat(27, 8));
    CHECK(qpow(rat(3, 2), -2) == rat(4, 9));
    CHECK(qpow(rat(5), 0) == 1);
    CHECK(qpow(Rational(0), 0) == 1);
    CHECK_THROWS_AS(qpow(Rational(0), -1), std::invalid_argument);
}

TEST_CASE("ipow computes big powers exactly") {
    CHECK(ipow(Integer(2), 64) == Integer("18446744073709551616"));
    CHECK(ipow(Integer(-3), 3) == -27);
}

TEST_CASE("to_string renders p/q without floats") {
    CHECK(to_string(rat(7, 2)) == "7/2");
    CHECK(to_string(rat(-7, 2)) == "-7/2");
    CHECK(to_string(rat(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse_rational round-trips to_string") {
    for (const char* text : {"0", "5", "-5", "7/2", "-7/2", "22/7"}) {
        const Rational q = parse_rational(text);
        CHECK(to_string(q) == text);
    }
    CHECK(parse_rational("6/4") == rat(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}
