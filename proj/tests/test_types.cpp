#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "euchar/types.hpp"

using namespace euchar;

TEST_CASE("formal cardinality arithmetic") {
    auto one = FormalCardinality::one();
    CHECK(one.is_one());
    CHECK(one.to_rational() == Rat(1));

    auto a = FormalCardinality::prime_power(2, 3);
    auto b = FormalCardinality::prime_power(3, -1);
    auto c = a * b;
    CHECK(c.to_rational() == Rat(8, 3));
    CHECK(c.exponent_of(2) == 3);
    CHECK(c.exponent_of(3) == -1);
    CHECK(c.exponent_of(5) == 0);
    CHECK(!c.is_integral());
    CHECK(a.is_integral());

    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(2).to_rational() == Rat(64));
    CHECK(a.pow(0).is_one());
    CHECK(a.pow(-1) == a.inverse());

    CHECK(FormalCardinality::prime_power(5, 0).is_one());
    CHECK_THROWS_AS(FormalCardinality::prime_power(6, 1), EngineError);
}

TEST_CASE("formal cardinality comparisons are rational comparisons") {
    auto two = FormalCardinality::prime_power(2, 1);
    auto three = FormalCardinality::prime_power(3, 1);
    auto half = FormalCardinality::prime_power(2, -1);
    CHECK(two < three);
    CHECK(half < two);
    CHECK(two <= two);
    CHECK(!(three <= two));
    CHECK(half <= FormalCardinality::one());
}

TEST_CASE("formal cardinality rendering") {
    CHECK(FormalCardinality::one().str() == "1");
    CHECK(FormalCardinality::prime_power(3, -1).str() == "3^-1");
    auto m = FormalCardinality::prime_power(5, 2) *
             FormalCardinality::prime_power(2, 1);
    CHECK(m.str() == "2 * 5^2");
}

TEST_CASE("valuation and primality") {
    CHECK(valuation(Int(24), 2) == 3);
    CHECK(valuation(Int(24), 3) == 1);
    CHECK(valuation(Int(-9), 3) == 2);
    CHECK(valuation(Int(7), 5) == 0);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
}

TEST_CASE("value-or-bound kinds and scaling") {
    auto v = ValueOrBound::exact(FormalCardinality::prime_power(2, 1));
    CHECK(v.kind() == ValueOrBound::Kind::Exact);
    CHECK(v.value() == FormalCardinality::prime_power(2, 1));

    auto u = ValueOrBound::upper_bound(FormalCardinality::prime_power(2, 3));
    CHECK(u.kind() == ValueOrBound::Kind::UpperBound);
    auto us = u.scaled(FormalCardinality::prime_power(2, -1));
    CHECK(us.kind() == ValueOrBound::Kind::UpperBound);
    CHECK(us.value() == FormalCardinality::prime_power(2, 2));

    auto i = ValueOrBound::interval(FormalCardinality::one(),
                                    FormalCardinality::prime_power(2, 1));
    CHECK(i.kind() == ValueOrBound::Kind::Interval);
    auto is = i.scaled(FormalCardinality::prime_power(2, 1));
    CHECK(is.lo() == FormalCardinality::prime_power(2, 1));
    CHECK(is.hi() == FormalCardinality::prime_power(2, 2));
}

TEST_CASE("error types carry stable codes and exit mapping") {
    EngineError e("NotPrime", "6 is not prime");
    CHECK(e.code() == "NotPrime");
    CHECK(std::string(e.what()).find("NotPrime") == 0);
}
