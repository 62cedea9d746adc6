#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "euchar/poly.hpp"

using namespace euchar;

namespace {
IntPoly P(std::initializer_list<long> cs) {
    IntPoly f;
    for (long c : cs) f.push_back(Int(c));
    return f;
}
}  // namespace

TEST_CASE("degree, monic, arithmetic") {
    CHECK(poly::degree(P({})) == -1);
    CHECK(poly::degree(P({5})) == 0);
    CHECK(poly::degree(P({5, 0, 1})) == 2);
    CHECK(poly::is_monic(P({5, 0, 1})));
    CHECK(!poly::is_monic(P({1, 2})));

    auto s = poly::mul(P({-1, 1}), P({1, 1}));
    CHECK(s == P({-1, 0, 1}));
    CHECK(poly::add(P({1, 2}), P({3})) == P({4, 2}));
    CHECK(poly::sub(P({1, 2}), P({1, 2})) == P({}));
    CHECK(poly::eval(P({5, 0, 1}), Int(2)) == Int(9));
    CHECK(poly::derivative(P({5, 0, 1})) == P({0, 2}));
}

TEST_CASE("squarefree detection") {
    CHECK(poly::squarefree_over_q(P({5, 0, 1})));
    CHECK(poly::squarefree_over_q(P({-2, 0, 0, 1})));
    CHECK(!poly::squarefree_over_q(P({1, 2, 1})));
    CHECK(!poly::squarefree_over_q(poly::mul(P({-1, 1}), P({1, -2, 1}))));
}

TEST_CASE("real root counts by exact Sturm sequences") {
    CHECK(poly::count_real_roots(P({5, 0, 1})) == 0);
    CHECK(poly::count_real_roots(P({-2, 0, 1})) == 2);
    CHECK(poly::count_real_roots(P({-2, 0, 0, 1})) == 1);
    CHECK(poly::count_real_roots(P({-1, -1, 0, 1})) == 1);
    CHECK(poly::count_real_roots(P({1, -3, 0, 1})) == 3);
    CHECK(poly::count_real_roots(P({1, 0, 0, 0, 1})) == 0);
}

TEST_CASE("discriminants via the Sylvester matrix") {
    CHECK(poly::discriminant(P({5, 0, 1})) == Int(-20));
    CHECK(poly::discriminant(P({-2, 0, 1})) == Int(8));
    CHECK(poly::discriminant(P({-2, 0, 0, 1})) == Int(-108));
    CHECK(poly::discriminant(P({-1, -1, 0, 1})) == Int(-23));
    CHECK(poly::discriminant(P({1, 1, 1})) == Int(-3));
}

TEST_CASE("discriminant sign matches the signature parity") {
    // sign(disc) = (-1)^{r2} for a squarefree monic integer polynomial.
    for (auto f : {P({5, 0, 1}), P({-2, 0, 1}), P({-2, 0, 0, 1}),
                   P({-1, -1, 0, 1}), P({1, 0, 0, 0, 1})}) {
        int n = poly::degree(f);
        int r1 = poly::count_real_roots(f);
        int r2 = (n - r1) / 2;
        Int d = poly::discriminant(f);
        CHECK(d != 0);
        CHECK(((d > 0) ? 0 : 1) == r2 % 2);
    }
}

TEST_CASE("bareiss determinant is exact") {
    IntMat m(3, 3);
    m << Int(2), Int(-3), Int(1), Int(5), Int(0), Int(7), Int(-1), Int(4),
        Int(6);
    CHECK(poly::bareiss_det(m) == Int(2 * (0 * 6 - 7 * 4) - (-3) * (5 * 6 - 7 * (-1)) + 1 * (5 * 4 - 0 * (-1))));
}
