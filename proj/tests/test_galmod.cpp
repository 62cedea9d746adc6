#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "euchar/galmod.hpp"

using namespace euchar;

namespace {

IntMat M1(long v) {
    IntMat m(1, 1);
    m(0, 0) = Int(v);
    return m;
}

IntMat M2(long a, long b, long c, long d) {
    IntMat m(2, 2);
    m(0, 0) = Int(a);
    m(0, 1) = Int(b);
    m(1, 0) = Int(c);
    m(1, 1) = Int(d);
    return m;
}

std::shared_ptr<const FiniteGroup> G(FiniteGroup g) {
    return std::make_shared<const FiniteGroup>(std::move(g));
}

}  // namespace

TEST_CASE("action completion from generators") {
    auto q8 = G(FiniteGroup::quaternion8());
    int i = q8->element_by_label("i").value();
    int j = q8->element_by_label("j").value();

    auto act = complete_action(*q8, {{i, M1(-1)}, {j, M1(-1)}}, 1);
    REQUIRE(act.size() == 8);
    CHECK(act[0](0, 0) == 1);
    CHECK(act[static_cast<std::size_t>(q8->element_by_label("-1").value())](0, 0) == 1);
    CHECK(act[static_cast<std::size_t>(q8->element_by_label("k").value())](0, 0) == 1);
    CHECK(act[static_cast<std::size_t>(i)](0, 0) == -1);

    CHECK_THROWS_AS(complete_action(*q8, {{i, M1(-1)}}, 1), SchemaError);

    auto chars = complete_character(*q8, {{i, Int(-1)}, {j, Int(-1)}});
    CHECK(chars[static_cast<std::size_t>(q8->element_by_label("k").value())] == 1);
    CHECK(chars[static_cast<std::size_t>(i)] == -1);
}

TEST_CASE("module validation") {
    auto c2 = G(FiniteGroup::cyclic(2));
    FiniteAbelianPGroup z3(3, {1});

    GaloisModule sign(c2, z3, {M1(1), M1(-1)}, std::nullopt, {});
    CHECK(!sign.trivial_action());
    GaloisModule triv(c2, z3, {M1(1), M1(1)}, std::nullopt, {});
    CHECK(triv.trivial_action());

    CHECK_THROWS_AS(GaloisModule(c2, z3, {M1(1), M1(0)}, std::nullopt, {}),
                    EngineError);
    CHECK_THROWS_AS(
        GaloisModule(c2, FiniteAbelianPGroup(5, {1}), {M1(1), M1(2)},
                     std::nullopt, {}),
        EngineError);
    CHECK_THROWS_AS(GaloisModule(c2, z3, {M1(1)}, std::nullopt, {}),
                    EngineError);

    // Characters must be homomorphisms into the units.
    CHECK_THROWS_AS(
        GaloisModule(c2, FiniteAbelianPGroup(5, {1}), {M1(1), M1(-1)},
                     std::vector<Int>{Int(1), Int(2)}, {}),
        EngineError);
    CHECK_THROWS_AS(
        GaloisModule(c2, z3, {M1(1), M1(-1)},
                     std::vector<Int>{Int(1), Int(0)}, {}),
        EngineError);
    GaloisModule ok(c2, z3, {M1(1), M1(-1)},
                    std::vector<Int>{Int(1), Int(-1)}, {});
    CHECK(ok.has_cyclo());
    CHECK(ok.cyclo(1) == Int(2));

    // Involutions must square to the identity.
    auto c4 = G(FiniteGroup::cyclic(4));
    int gen = c4->cyclic_generator().value();
    auto act = complete_action(*c4, {{gen, M1(-1)}}, 1);
    CHECK_THROWS_AS(
        GaloisModule(c4, z3, act, std::nullopt, {{false, gen}}),
        EngineError);
    GaloisModule with_arch(c4, z3, act, std::nullopt,
                           {{false, c4->mul(gen, gen)}});
    CHECK(with_arch.arch_places().size() == 1);
}

TEST_CASE("fixed points of subgroups") {
    auto q8 = G(FiniteGroup::quaternion8());
    int i = q8->element_by_label("i").value();
    int j = q8->element_by_label("j").value();
    FiniteAbelianPGroup z5(5, {1});
    auto act = complete_action(*q8, {{i, M1(-1)}, {j, M1(-1)}}, 1);
    GaloisModule m(q8, z5, act, std::nullopt, {});

    CHECK(fixed_points(m, {}) == FormalCardinality::prime_power(5, 1));
    CHECK(fixed_points(m, {i}).is_one());
    CHECK(fixed_points(m, {q8->element_by_label("k").value()}) ==
          FormalCardinality::prime_power(5, 1));
    CHECK(fixed_points(m, {i, j}).is_one());
}

TEST_CASE("cartier dual twists by the character") {
    auto c2 = G(FiniteGroup::cyclic(2));
    FiniteAbelianPGroup z5(5, {1});
    GaloisModule sign(c2, z5, {M1(1), M1(-1)},
                      std::vector<Int>{Int(1), Int(-1)}, {});
    auto dual = cartier_dual(sign);
    // chi(g) * (A(g^-1))^T = (-1) * (-1) = 1: the dual is trivial.
    CHECK(dual.trivial_action());
    CHECK(dual.module() == sign.module());

    auto doubled = cartier_dual(dual);
    CHECK(doubled.action(1) == sign.action(1));

    GaloisModule triv(c2, z5, {M1(1), M1(1)},
                      std::vector<Int>{Int(1), Int(-1)}, {});
    auto tdual = cartier_dual(triv);
    CHECK(!tdual.trivial_action());
    CHECK(tdual.action(1) == M1(4));

    GaloisModule nochar(c2, z5, {M1(1), M1(-1)}, std::nullopt, {});
    CHECK_THROWS_AS(cartier_dual(nochar), EngineError);
}

TEST_CASE("norms and augmentation maps") {
    auto c2 = G(FiniteGroup::cyclic(2));
    FiniteAbelianPGroup z4(2, {2});
    GaloisModule inv(c2, z4, {M1(1), M1(-1)}, std::nullopt, {});

    auto n = inv.norm_hom({0, 1});
    CHECK(n.is_zero());
    auto am1 = inv.action_minus_identity(1);
    // x -> -2x on Z/4: image {0, 2}, kernel {0, 2}.
    CHECK(am1.image_order_exponent() == 1);
    CHECK(am1.kernel_order_exponent() == 1);
}

TEST_CASE("tate cohomology at a real place") {
    auto c2 = G(FiniteGroup::cyclic(2));

    // Trivial involution on Z/2: fixed = 2, norms = 2M = 0.
    GaloisModule t2(c2, FiniteAbelianPGroup(2, {1}), {M1(1), M1(1)},
                    std::nullopt, {});
    CHECK(tate_h0_real_place(t2, 0) == FormalCardinality::prime_power(2, 1));
    CHECK(tate_h0_real_place(t2, 1) == FormalCardinality::prime_power(2, 1));

    // Trivial involution on Z/3: norm map x -> 2x is onto.
    GaloisModule t3(c2, FiniteAbelianPGroup(3, {1}), {M1(1), M1(1)},
                    std::nullopt, {});
    CHECK(tate_h0_real_place(t3, 0).is_one());

    // Inversion on Z/4: fixed {0,2}, norms = 0.
    GaloisModule i4(c2, FiniteAbelianPGroup(2, {2}), {M1(1), M1(-1)},
                    std::nullopt, {});
    CHECK(tate_h0_real_place(i4, 1) == FormalCardinality::prime_power(2, 1));
}

TEST_CASE("adjoint module and centralizers") {
    auto c2 = G(FiniteGroup::cyclic(2));
    I64Mat id2 = I64Mat::Identity(2, 2);
    I64Mat diag(2, 2);
    diag << 1, 0, 0, 2;

    AdjointModule rho(c2, 3, {id2, diag});
    CHECK(rho.n() == 2);
    CHECK(centralizer_dim(rho, 0) == 4);
    CHECK(centralizer_dim(rho, 1) == 2);
    CHECK(centralizer_dim_of_image(rho) == 2);

    auto ad = adjoint_of(rho, {});
    CHECK(ad.module().components() == 4);
    CHECK(ad.module().p() == 3);
    CHECK(!ad.trivial_action());

    // Scalar image centralizes everything.
    AdjointModule scalar(c2, 3, {id2, 2 * id2});
    CHECK(centralizer_dim_of_image(scalar) == 4);

    auto s3 = G(FiniteGroup::symmetric3());
    int t = s3->element_by_label("(1 2)").value();
    int r = s3->element_by_label("(1 2 3)").value();
    I64Mat mt(2, 2), mr(2, 2);
    mt << 0, 1, 1, 0;
    mr << 0, 1, 1, 1;
    std::map<int, IntMat> seeds;
    seeds[t] = M2(0, 1, 1, 0);
    seeds[r] = M2(0, 1, 1, 1);
    auto acts = complete_action(*s3, seeds, 2);
    std::vector<I64Mat> rep;
    for (const auto& a : acts) {
        I64Mat m(2, 2);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                Int v;
                mpz_fdiv_r(v.get_mpz_t(), a(x, y).get_mpz_t(),
                           Int(2).get_mpz_t());
                m(x, y) = v.get_si();
            }
        rep.push_back(m);
    }
    AdjointModule full(s3, 2, rep);
    // The full GL_2(F_2) image has scalar centralizer only.
    CHECK(centralizer_dim_of_image(full) == 1);

    I64Mat bad(2, 2);
    bad << 1, 0, 0, 0;
    CHECK_THROWS_AS(AdjointModule(c2, 3, {id2, bad}), EngineError);
}
