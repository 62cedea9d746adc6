#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "euchar/abelian.hpp"

using namespace euchar;

namespace {
IntMat M(int r, int c, std::initializer_list<long> entries) {
    IntMat m(r, c);
    auto it = entries.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Int(*it++);
    return m;
}
}  // namespace

TEST_CASE("finite abelian p-group basics") {
    FiniteAbelianPGroup a(2, {2, 1});
    CHECK(a.p() == 2);
    CHECK(a.components() == 2);
    CHECK(a.order_exponent() == 3);
    CHECK(a.order() == FormalCardinality::prime_power(2, 3));
    CHECK(!a.elementary());
    CHECK(!a.uniform());
    CHECK(a.max_exponent() == 2);

    FiniteAbelianPGroup e(3, {1, 1, 1});
    CHECK(e.elementary());
    CHECK(e.uniform());

    auto sq = e.power(2);
    CHECK(sq.components() == 6);
    CHECK(sq.order_exponent() == 6);

    CHECK_THROWS_AS(FiniteAbelianPGroup(6, {1}), EngineError);
    CHECK_THROWS_AS(FiniteAbelianPGroup(3, {0}), EngineError);
    CHECK_THROWS_AS(FiniteAbelianPGroup(3, {-1}), EngineError);
}

TEST_CASE("hom orders on cyclic groups") {
    FiniteAbelianPGroup z4(2, {2}), z2(2, {1});

    // x -> 2x on Z/4: image Z/2, kernel Z/2.
    FinAbHom dbl(z4, z4, M(1, 1, {2}));
    CHECK(dbl.image_order_exponent() == 1);
    CHECK(dbl.kernel_order_exponent() == 1);
    CHECK(!dbl.is_zero());

    FinAbHom zero(z4, z4, M(1, 1, {0}));
    CHECK(zero.is_zero());
    CHECK(zero.image_order_exponent() == 0);
    CHECK(zero.kernel_order_exponent() == 2);

    // Reduction Z/4 -> Z/2 is onto with kernel Z/2.
    FinAbHom red(z4, z2, M(1, 1, {1}));
    CHECK(red.image_order_exponent() == 1);
    CHECK(red.kernel_order_exponent() == 1);

    // Z/2 -> Z/4 needs an even entry.
    FinAbHom incl(z2, z4, M(1, 1, {2}));
    CHECK(incl.image_order_exponent() == 1);
    CHECK(incl.kernel_order_exponent() == 0);
    CHECK_THROWS_AS(FinAbHom(z2, z4, M(1, 1, {1})), EngineError);
}

TEST_CASE("hom orders on mixed-exponent groups") {
    FiniteAbelianPGroup dom(2, {2, 1}), cod(2, {1, 2});
    // (x, y) -> (x mod 2, 2y).
    FinAbHom h(dom, cod, M(2, 2, {1, 0, 0, 2}));
    CHECK(h.image_order_exponent() == 2);
    CHECK(h.kernel_order_exponent() == 1);

    FiniteAbelianPGroup d3(3, {1, 1});
    // Invertible 2x2 over F_3.
    FinAbHom inv3(d3, d3, M(2, 2, {1, 1, 1, 2}));
    CHECK(inv3.image_order_exponent() == 2);
    CHECK(inv3.kernel_order_exponent() == 0);
    // Rank-1 projector.
    FinAbHom proj(d3, d3, M(2, 2, {1, 1, 1, 1}));
    CHECK(proj.image_order_exponent() == 1);
    CHECK(proj.kernel_order_exponent() == 1);
}

TEST_CASE("kernel and image exponents always sum to the domain order") {
    FiniteAbelianPGroup dom(2, {2, 1, 1});
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 2; ++b) {
            FinAbHom h(dom, dom,
                       M(3, 3, {a, 2 * b, 0, b, 1, 1, 0, b, a % 2}));
            CHECK(h.image_order_exponent() + h.kernel_order_exponent() ==
                  dom.order_exponent());
        }
}

TEST_CASE("composition") {
    FiniteAbelianPGroup z4(2, {2}), z2(2, {1});
    FinAbHom red(z4, z2, M(1, 1, {1}));
    FinAbHom incl(z2, z4, M(1, 1, {2}));
    auto comp = incl.compose_after(red);
    CHECK(comp.domain().max_exponent() == 2);
    CHECK(comp.codomain().max_exponent() == 2);
    // x -> 2x on Z/4.
    CHECK(comp.image_order_exponent() == 1);
    CHECK(comp.kernel_order_exponent() == 1);

    auto other = red.compose_after(incl);
    CHECK(other.is_zero());
}
