#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "euchar/numfield.hpp"

using namespace euchar;

namespace {
IntPoly P(std::initializer_list<long> cs) {
    IntPoly f;
    for (long c : cs) f.push_back(Int(c));
    return f;
}
}  // namespace

TEST_CASE("field construction and signatures") {
    auto q = NumberField::from_builtin("Q");
    CHECK(q.degree == 1);
    CHECK(q.r1 == 1);
    CHECK(q.r2 == 0);
    CHECK(!q.totally_imaginary());

    auto k = NumberField::from_builtin("Q(sqrt,-5)");
    CHECK(k.degree == 2);
    CHECK(k.r1 == 0);
    CHECK(k.r2 == 1);
    CHECK(k.totally_imaginary());

    auto r = NumberField::from_builtin("Q(sqrt,2)");
    CHECK(r.r1 == 2);
    CHECK(r.r2 == 0);

    // d reduces to its squarefree core: sqrt(-120) and sqrt(-30) agree.
    auto k120 = NumberField::from_builtin("Q(sqrt,-120)");
    CHECK(k120.min_poly == P({30, 0, 1}));

    auto cubic = NumberField::from_poly(P({-2, 0, 0, 1}));
    CHECK(cubic.degree == 3);
    CHECK(cubic.r1 == 1);
    CHECK(cubic.r2 == 1);

    CHECK_THROWS_AS(NumberField::from_poly(P({1, 2})), EngineError);
    CHECK_THROWS_AS(NumberField::from_poly(P({1, 2, 1})), EngineError);
    CHECK_THROWS_AS(NumberField::from_builtin("Q(sqrt,0)"), SchemaError);
    CHECK_THROWS_AS(NumberField::from_builtin("nonsense"), SchemaError);
}

TEST_CASE("prime splitting in the monogenic order") {
    auto k = NumberField::from_builtin("Q(sqrt,-5)");

    auto s2 = split_prime(k, 2);
    REQUIRE(s2.factors.size() == 1);
    CHECK(s2.factors[0].e == 2);
    CHECK(s2.factors[0].f == 1);
    CHECK(!s2.index_warning);

    auto s3 = split_prime(k, 3);
    REQUIRE(s3.factors.size() == 2);
    CHECK(s3.factors[0].f == 1);
    CHECK(s3.factors[1].f == 1);

    auto s11 = split_prime(k, 11);
    REQUIRE(s11.factors.size() == 1);
    CHECK(s11.factors[0].e == 1);
    CHECK(s11.factors[0].f == 2);

    auto cubic = NumberField::from_poly(P({-2, 0, 0, 1}));
    auto c5 = split_prime(cubic, 5);
    REQUIRE(c5.factors.size() == 2);
    int sum = 0;
    for (auto& v : c5.factors) sum += v.e * v.f;
    CHECK(sum == 3);
    auto c3 = split_prime(cubic, 3);
    REQUIRE(c3.factors.size() == 1);
    CHECK(c3.factors[0].e == 3);
    CHECK(!c3.index_warning);

    CHECK_THROWS_AS(split_prime(k, 4), EngineError);
}

TEST_CASE("sum of e*f equals the degree across many primes") {
    for (auto f : {P({5, 0, 1}), P({30, 0, 1}), P({-2, 0, 0, 1}),
                   P({-1, -1, 0, 1}), P({1, 0, 0, 0, 1})}) {
        auto k = NumberField::from_poly(f);
        for (std::int64_t p : {2, 3, 5, 7, 11, 13, 101}) {
            auto s = split_prime(k, p);
            int sum = 0;
            for (auto& v : s.factors) sum += v.e * v.f;
            CHECK(sum == k.degree);
        }
    }
}

TEST_CASE("non-maximal order detection") {
    // x^2 + 3 has index 2 in the maximal order; x^2 + 5 and x^2 - 2 are
    // maximal at 2.
    auto bad = NumberField::from_poly(P({3, 0, 1}));
    CHECK(split_prime(bad, 2).index_warning);
    CHECK(!split_prime(bad, 3).index_warning);
    CHECK(!split_prime(NumberField::from_builtin("Q(sqrt,-5)"), 2).index_warning);
    CHECK(!split_prime(NumberField::from_builtin("Q(sqrt,2)"), 2).index_warning);
}

TEST_CASE("normalized absolute values") {
    SplitFactor ram{2, 1};
    CHECK(normalized_abs_value(ram, 2, Int(2)) ==
          FormalCardinality::prime_power(2, -2));
    SplitFactor inert{1, 2};
    CHECK(normalized_abs_value(inert, 3, Int(9)) ==
          FormalCardinality::prime_power(3, -4));
    CHECK(normalized_abs_value(inert, 3, Int(1)).is_one());
    CHECK_THROWS_AS(normalized_abs_value(inert, 3, Int(6)), EngineError);
}

TEST_CASE("product formula over seeded rationals") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> num(-300, 300);
    std::uniform_int_distribution<std::int64_t> den(1, 300);
    std::vector<NumberField> fields = {
        NumberField::from_builtin("Q"),
        NumberField::from_builtin("Q(sqrt,-5)"),
        NumberField::from_builtin("Q(sqrt,2)"),
        NumberField::from_poly(P({-2, 0, 0, 1})),
    };
    for (int i = 0; i < 60; ++i) {
        std::int64_t n = num(rng);
        if (n == 0) n = 11;
        Rat x(Int(n), Int(den(rng)));
        x.canonicalize();
        CHECK(product_formula_check(fields[i % fields.size()], x));
    }
}

TEST_CASE("place sets and the missed-place exponent") {
    auto k = NumberField::from_builtin("Q(sqrt,-5)");
    PlaceSet s(k);
    CHECK(!s.s_finite_nonempty());
    CHECK(s.gamma() == 0);
    CHECK(s.finite_primes().empty());
    CHECK(!s.contains_all_above(2));

    // All places above 2 missed: exponent a * e * f.
    CHECK(bound_exponent_S_p(s, 2, 1) == FormalCardinality::prime_power(2, 2));
    CHECK(bound_exponent_S_p(s, 2, 3) == FormalCardinality::prime_power(2, 6));
    CHECK(bound_exponent_S_p(s, 3, 1) == FormalCardinality::prime_power(3, 2));

    PlaceSet t(k);
    t.add_finite(3, {0});
    CHECK(t.s_finite_nonempty());
    CHECK(t.gamma() == 1);
    CHECK(t.selected(3).count(0) == 1);
    CHECK(!t.contains_all_above(3));
    CHECK(bound_exponent_S_p(t, 3, 1) == FormalCardinality::prime_power(3, 1));

    t.add_finite(3, {});
    CHECK(t.contains_all_above(3));
    CHECK(bound_exponent_S_p(t, 3, 1).is_one());

    PlaceSet u(k);
    CHECK_THROWS_AS(u.add_finite(3, {2}), SchemaError);
    CHECK_THROWS_AS(u.add_finite(4, {}), EngineError);
}

TEST_CASE("splitting overrides replace the heuristic data") {
    auto bad = NumberField::from_poly(P({3, 0, 1}));
    PlaceSet s(bad);
    CHECK(s.splitting(2).index_warning);
    s.override_splitting(2, {{1, 2}}, false);
    CHECK(!s.splitting(2).index_warning);
    CHECK(s.splitting(2).factors.size() == 1);
    CHECK(s.splitting(2).factors[0].f == 2);
    s.add_finite(2, {});
    CHECK(s.contains_all_above(2));
    CHECK(bound_exponent_S_p(s, 2, 1).is_one());

    // Overrides must still cover the full degree.
    PlaceSet t(bad);
    CHECK_THROWS_AS(t.override_splitting(2, {{1, 1}}, false), SchemaError);
}
