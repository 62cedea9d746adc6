#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <set>
#include <vector>

#include "euchar/cohom.hpp"

using namespace euchar;

namespace {

IntMat M1(long v) {
    IntMat m(1, 1);
    m(0, 0) = Int(v);
    return m;
}

std::shared_ptr<const FiniteGroup> G(FiniteGroup g) {
    return std::make_shared<const FiniteGroup>(std::move(g));
}

// Direct enumeration of Z^1 and B^1 for a one-component module: maps
// f: Gamma -> M with f(ab) = f(a) + a.f(b), modulo f_m(a) = a.m - m.  Only
// viable for tiny |Gamma| and |M|; an engine-independent third opinion.
std::int64_t brute_h1(const GaloisModule& m) {
    const auto& g = m.group();
    std::int64_t pe = 1;
    for (int i = 0; i < m.module().exponents()[0]; ++i) pe *= m.module().p();
    int n = g.order();
    auto act = [&](int a, std::int64_t x) {
        Int v = m.action(a)(0, 0) * Int(x);
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Int(pe).get_mpz_t());
        return r.get_si();
    };

    std::vector<std::int64_t> f(static_cast<std::size_t>(n), 0);
    std::int64_t cocycles = 0;
    while (true) {
        bool ok = f[0] == 0;
        for (int a = 0; ok && a < n; ++a)
            for (int b = 0; ok && b < n; ++b) {
                std::int64_t want =
                    (f[static_cast<std::size_t>(a)] + act(a, f[static_cast<std::size_t>(b)])) % pe;
                if (f[static_cast<std::size_t>(g.mul(a, b))] != want) ok = false;
            }
        if (ok) ++cocycles;
        int pos = 0;
        while (pos < n) {
            f[static_cast<std::size_t>(pos)] += 1;
            if (f[static_cast<std::size_t>(pos)] < pe) break;
            f[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }

    std::set<std::vector<std::int64_t>> coboundaries;
    for (std::int64_t x = 0; x < pe; ++x) {
        std::vector<std::int64_t> fb(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            fb[static_cast<std::size_t>(a)] =
                ((act(a, x) - x) % pe + pe) % pe;
        coboundaries.insert(fb);
    }
    return cocycles / static_cast<std::int64_t>(coboundaries.size());
}

}  // namespace

TEST_CASE("closed forms for small cyclic groups") {
    auto c2 = G(FiniteGroup::cyclic(2));

    GaloisModule t22(c2, FiniteAbelianPGroup(2, {1}), {M1(1), M1(1)},
                     std::nullopt, {});
    auto r = cohomology(t22);
    CHECK(r.h[0] == FormalCardinality::prime_power(2, 1));
    CHECK(r.h[1] == FormalCardinality::prime_power(2, 1));
    CHECK(r.h[2] == FormalCardinality::prime_power(2, 1));
    REQUIRE(r.dims.has_value());
    CHECK(*r.dims == std::array<std::int64_t, 3>({1, 1, 1}));
    CHECK(r.tate_h0 == FormalCardinality::prime_power(2, 1));

    auto c4 = G(FiniteGroup::cyclic(4));
    GaloisModule t44(c4, FiniteAbelianPGroup(2, {2}),
                     {M1(1), M1(1), M1(1), M1(1)}, std::nullopt, {});
    auto r44 = cohomology(t44);
    CHECK(r44.h[0] == FormalCardinality::prime_power(2, 2));
    CHECK(r44.h[1] == FormalCardinality::prime_power(2, 2));
    CHECK(r44.h[2] == FormalCardinality::prime_power(2, 2));
    CHECK(!r44.dims.has_value());

    GaloisModule s3m(c2, FiniteAbelianPGroup(3, {1}), {M1(1), M1(-1)},
                     std::nullopt, {});
    auto rs = cohomology(s3m);
    CHECK(rs.h[0].is_one());
    CHECK(rs.h[1].is_one());
    CHECK(rs.h[2].is_one());
}

TEST_CASE("engine disagreement is impossible on elementary modules") {
    auto v4 = G(FiniteGroup::klein4());
    GaloisModule m(v4, FiniteAbelianPGroup(2, {1}),
                   {M1(1), M1(1), M1(1), M1(1)}, std::nullopt, {});
    auto a = cohomology(m);
    auto b = cocycle_oracle(m);
    CHECK(a.h[1] == b.h[1]);
    // dim H^1(V4, F_2) = 2, dim H^2 = 3.
    CHECK(*a.dims == std::array<std::int64_t, 3>({1, 2, 3}));
    CHECK(*b.dims == std::array<std::int64_t, 3>({1, 2, 3}));
    CHECK(engine_name(a.engine) != engine_name(b.engine));
}

TEST_CASE("quaternion cohomology mod 2") {
    auto q8 = G(FiniteGroup::quaternion8());
    std::vector<IntMat> act(8, M1(1));
    GaloisModule m(q8, FiniteAbelianPGroup(2, {1}), act, std::nullopt, {});
    auto a = cohomology(m);
    auto b = cocycle_oracle(m);
    CHECK(*a.dims == std::array<std::int64_t, 3>({1, 2, 2}));
    CHECK(*b.dims == std::array<std::int64_t, 3>({1, 2, 2}));
}

TEST_CASE("brute-force H^1 agreement on tiny modules") {
    auto c2 = G(FiniteGroup::cyclic(2));
    auto c3 = G(FiniteGroup::cyclic(3));
    auto c4 = G(FiniteGroup::cyclic(4));
    std::vector<GaloisModule> cases;
    cases.emplace_back(c2, FiniteAbelianPGroup(2, {1}),
                       std::vector<IntMat>{M1(1), M1(1)}, std::nullopt,
                       std::vector<ArchPlace>{});
    cases.emplace_back(c2, FiniteAbelianPGroup(2, {2}),
                       std::vector<IntMat>{M1(1), M1(-1)}, std::nullopt,
                       std::vector<ArchPlace>{});
    cases.emplace_back(c2, FiniteAbelianPGroup(3, {1}),
                       std::vector<IntMat>{M1(1), M1(-1)}, std::nullopt,
                       std::vector<ArchPlace>{});
    cases.emplace_back(c3, FiniteAbelianPGroup(3, {1}),
                       std::vector<IntMat>{M1(1), M1(1), M1(1)}, std::nullopt,
                       std::vector<ArchPlace>{});
    cases.emplace_back(c4, FiniteAbelianPGroup(2, {1}),
                       complete_action(*c4, {{1, M1(1)}}, 1), std::nullopt,
                       std::vector<ArchPlace>{});
    for (const auto& m : cases) {
        auto r = cohomology(m);
        std::int64_t h1 = brute_h1(m);
        CHECK(r.h[1] == FormalCardinality::prime_power(
                            m.module().p(),
                            h1 == 1 ? 0 : valuation(Int(h1), m.module().p())));
    }
}

TEST_CASE("herbrand quotient is one for every finite module") {
    for (int n : {2, 3, 4, 6}) {
        auto g = G(FiniteGroup::cyclic(n));
        for (std::int64_t p : {2, 3}) {
            GaloisModule m(g, FiniteAbelianPGroup(p, {1, 1}),
                           std::vector<IntMat>(static_cast<std::size_t>(n),
                                               IntMat::Identity(2, 2)),
                           std::nullopt, {});
            CHECK(herbrand_quotient(m).is_one());
        }
    }
    auto c6 = G(FiniteGroup::cyclic(6));
    int gen = c6->cyclic_generator().value();
    GaloisModule tw(c6, FiniteAbelianPGroup(3, {2}),
                    complete_action(*c6, {{gen, M1(-1)}}, 1), std::nullopt,
                    {});
    CHECK(herbrand_quotient(tw).is_one());
}

TEST_CASE("chi2 and full tate h0") {
    auto q8 = G(FiniteGroup::quaternion8());
    std::vector<IntMat> act(8, M1(1));
    GaloisModule m(q8, FiniteAbelianPGroup(2, {1}), act, std::nullopt, {});
    // 2 * 4 / 4 = 2.
    CHECK(chi2_finite(m) == FormalCardinality::prime_power(2, 1));
    // All of M is fixed; the norm multiplies by |Q8| = 8 = 0 on Z/2.
    CHECK(tate_h0_full(m) == FormalCardinality::prime_power(2, 1));

    auto c2 = G(FiniteGroup::cyclic(2));
    GaloisModule t3(c2, FiniteAbelianPGroup(3, {1}), {M1(1), M1(1)},
                    std::nullopt, {});
    CHECK(tate_h0_full(t3).is_one());
}

TEST_CASE("non-elementary modules are rejected by the mod-p engine only") {
    auto c2 = G(FiniteGroup::cyclic(2));
    GaloisModule m(c2, FiniteAbelianPGroup(2, {2}), {M1(1), M1(1)},
                   std::nullopt, {});
    CHECK_THROWS_AS(cocycle_oracle(m), EngineError);
    CHECK(cohomology(m).h[0] == FormalCardinality::prime_power(2, 2));
}
