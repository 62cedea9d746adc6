#include "euchar/selftest.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "euchar/bundled.hpp"
#include "euchar/cohom.hpp"
#include "euchar/fingroup.hpp"
#include "euchar/formulas.hpp"
#include "euchar/fplin.hpp"
#include "euchar/galmod.hpp"
#include "euchar/numfield.hpp"
#include "euchar/scenario.hpp"
#include "euchar/snf.hpp"
#include "euchar/types.hpp"

namespace euchar {
namespace {

struct Suite {
  SuiteResult result;

  explicit Suite(std::string name) { result.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++result.passed;
    } else {
      ++result.failed;
      result.failures.push_back(what);
    }
  }
};

IntMat mat1(std::int64_t v) {
  IntMat m(1, 1);
  m(0, 0) = Int(v);
  return m;
}

IntMat mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IntMat m(2, 2);
  m(0, 0) = Int(a);
  m(0, 1) = Int(b);
  m(1, 0) = Int(c);
  m(1, 1) = Int(d);
  return m;
}

GaloisModule make_module(std::shared_ptr<const FiniteGroup> g, std::int64_t p,
                         std::vector<std::int64_t> exps,
                         const std::map<int, IntMat>& seeds,
                         std::vector<ArchPlace> arch = {}) {
  FiniteAbelianPGroup m(p, std::move(exps));
  std::vector<IntMat> action;
  if (seeds.empty()) {
    action.assign(static_cast<std::size_t>(g->order()),
                  IntMat::Identity(m.components(), m.components()));
  } else {
    action = complete_action(*g, seeds, m.components());
  }
  return GaloisModule(std::move(g), std::move(m), std::move(action),
                      std::nullopt, std::move(arch));
}

std::string card_str(const FormalCardinality& c) { return c.str(); }

// ---------------------------------------------------------------- suites --

void suite_product_formula(Suite& s, std::uint64_t seed) {
  std::vector<std::pair<std::string, NumberField>> fields;
  fields.emplace_back("Q", NumberField::from_builtin("Q"));
  fields.emplace_back("Q(sqrt,-5)", NumberField::from_builtin("Q(sqrt,-5)"));
  fields.emplace_back("Q(sqrt,2)", NumberField::from_builtin("Q(sqrt,2)"));
  fields.emplace_back("x^3-2", NumberField::from_poly(
                                   IntPoly{Int(-2), Int(0), Int(0), Int(1)}));
  fields.emplace_back("x^3-x-1", NumberField::from_poly(IntPoly{
                                     Int(-1), Int(-1), Int(0), Int(1)}));

  std::mt19937_64 rng(seed ^ 0x70726f64756374ULL);
  std::uniform_int_distribution<std::int64_t> num(-500, 500);
  std::uniform_int_distribution<std::int64_t> den(1, 500);

  for (int i = 0; i < 100; ++i) {
    const auto& [name, k] = fields[static_cast<std::size_t>(i) % fields.size()];
    std::int64_t n = num(rng);
    if (n == 0) n = 7;
    Rat x(Int(n), Int(den(rng)));
    x.canonicalize();
    std::ostringstream what;
    what << "product over places of |" << x.get_str() << "| = 1 over " << name;
    s.check(product_formula_check(k, x), what.str());
  }
}

void suite_cyclic(Suite& s) {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 12}) {
    auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t k = 1; k <= 3; ++k) {
        auto m = make_module(g, p, {k}, {});
        auto rep = cohomology(m);
        std::int64_t tw = std::min(valuation(Int(n), p), k);
        bool ok = rep.h[0] == FormalCardinality::prime_power(p, k) &&
                  rep.h[1] == FormalCardinality::prime_power(p, tw) &&
                  rep.h[2] == FormalCardinality::prime_power(p, tw);
        std::ostringstream what;
        what << "C" << n << " trivial on Z/" << p << "^" << k << ": got ["
             << card_str(rep.h[0]) << ", " << card_str(rep.h[1]) << ", "
             << card_str(rep.h[2]) << "]";
        s.check(ok, what.str());
        s.check(herbrand_quotient(m).is_one(),
                "herbrand quotient is 1 for C" + std::to_string(n));

        if (n % 2 == 0) {
          int gen = g->cyclic_generator().value();
          auto inv = make_module(g, p, {k}, {{gen, mat1(-1)}});
          auto irep = cohomology(inv);
          std::int64_t e = p == 2 ? 1 : 0;
          bool iok = irep.h[0] == FormalCardinality::prime_power(p, e) &&
                     irep.h[1] == FormalCardinality::prime_power(p, e) &&
                     irep.h[2] == FormalCardinality::prime_power(p, e);
          std::ostringstream iw;
          iw << "C" << n << " inversion on Z/" << p << "^" << k << ": got ["
             << card_str(irep.h[0]) << ", " << card_str(irep.h[1]) << ", "
             << card_str(irep.h[2]) << "]";
          s.check(iok, iw.str());
          s.check(herbrand_quotient(inv).is_one(),
                  "herbrand quotient is 1 under inversion for C" +
                      std::to_string(n));
        }
      }
    }
  }
}

void suite_engine_agreement(Suite& s) {
  struct Case {
    std::string name;
    GaloisModule m;
  };
  std::vector<Case> cases;

  auto add = [&cases](std::string name, GaloisModule m) {
    cases.push_back({std::move(name), std::move(m)});
  };

  auto triv = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  auto c3 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  auto c4 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4));
  auto v4 = std::make_shared<const FiniteGroup>(FiniteGroup::klein4());
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
  auto q8 = std::make_shared<const FiniteGroup>(FiniteGroup::quaternion8());

  for (std::int64_t p : {2, 3, 5}) {
    add("trivial group, Z/" + std::to_string(p), make_module(triv, p, {1}, {}));
    add("C2 trivial, Z/" + std::to_string(p), make_module(c2, p, {1}, {}));
    add("Klein4 trivial, Z/" + std::to_string(p), make_module(v4, p, {1}, {}));
    add("S3 trivial, Z/" + std::to_string(p), make_module(s3, p, {1}, {}));
    add("Q8 trivial, Z/" + std::to_string(p), make_module(q8, p, {1}, {}));
  }
  for (std::int64_t p : {3, 5}) {
    add("C2 sign, Z/" + std::to_string(p),
        make_module(c2, p, {1}, {{1, mat1(-1)}}));
    add("C4 order-2 character, Z/" + std::to_string(p),
        make_module(c4, p, {1}, {{c4->cyclic_generator().value(), mat1(-1)}}));
    int a = v4->element_by_label("a").value();
    int b = v4->element_by_label("b").value();
    add("Klein4 character, Z/" + std::to_string(p),
        make_module(v4, p, {1}, {{a, mat1(-1)}, {b, mat1(1)}}));
    int i = q8->element_by_label("i").value();
    int j = q8->element_by_label("j").value();
    add("Q8 character, Z/" + std::to_string(p),
        make_module(q8, p, {1}, {{i, mat1(-1)}, {j, mat1(-1)}}));
  }
  {
    int t = s3->element_by_label("(1 2)").value();
    int r = s3->element_by_label("(1 2 3)").value();
    add("S3 sign, Z/3", make_module(s3, 3, {1}, {{t, mat1(-1)}, {r, mat1(1)}}));
    add("S3 standard 2-dim, F_2",
        make_module(s3, 2, {1, 1},
                    {{t, mat2(0, 1, 1, 0)}, {r, mat2(0, 1, 1, 1)}}));
    int c3gen = c3->cyclic_generator().value();
    add("C3 order-3 matrix, F_2",
        make_module(c3, 2, {1, 1}, {{c3gen, mat2(0, 1, 1, 1)}}));
    int i = q8->element_by_label("i").value();
    int j = q8->element_by_label("j").value();
    add("Q8 faithful 2-dim, F_3",
        make_module(q8, 3, {1, 1},
                    {{i, mat2(0, -1, 1, 0)}, {j, mat2(1, 1, 1, -1)}}));
  }

  for (const auto& c : cases) {
    auto a = cohomology(c.m);
    auto b = cocycle_oracle(c.m);
    bool same_h =
        a.h[0] == b.h[0] && a.h[1] == b.h[1] && a.h[2] == b.h[2];
    bool same_dims = a.dims.has_value() && b.dims.has_value() &&
                     *a.dims == *b.dims;
    std::ostringstream what;
    what << c.name << ": snf [" << card_str(a.h[0]) << ", " << card_str(a.h[1])
         << ", " << card_str(a.h[2]) << "] vs fp-linear ["
         << card_str(b.h[0]) << ", " << card_str(b.h[1]) << ", "
         << card_str(b.h[2]) << "]";
    s.check(same_h && same_dims, what.str());
    s.check(a.tate_h0 == b.tate_h0, c.name + ": tate H^0 agreement");
  }
}

void suite_snf_conformance(Suite& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x736e66636f6e66ULL);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<std::int64_t> entry(-20, 20);

  for (int t = 0; t < 40; ++t) {
    int r = dim(rng), c = dim(rng);
    IntMat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = Int(entry(rng));
    auto diag = smith_diagonal(a);
    for (std::int64_t p : {2, 3}) {
      const std::int64_t cap = 6;
      std::vector<std::int64_t> expect;
      for (const Int& d : diag)
        expect.push_back(d == 0 ? cap : std::min(valuation(d, p), cap));
      std::sort(expect.begin(), expect.end());
      auto got = valuation_profile(a, p, cap);
      std::ostringstream what;
      what << "valuation profile vs smith diagonal at p=" << p << " (case "
           << t << ")";
      s.check(got == expect, what.str());
    }
  }

  // Image and kernel orders of random well-defined homs against direct
  // enumeration of small modules.
  std::uniform_int_distribution<int> comp(1, 2);
  std::uniform_int_distribution<std::int64_t> exp_d(1, 2);
  for (int t = 0; t < 30; ++t) {
    std::int64_t p = t % 2 == 0 ? 2 : 3;
    std::vector<std::int64_t> de, ce;
    int dn = comp(rng), cn = comp(rng);
    for (int i = 0; i < dn; ++i) de.push_back(exp_d(rng));
    for (int i = 0; i < cn; ++i) ce.push_back(exp_d(rng));
    FiniteAbelianPGroup dom(p, de), cod(p, ce);
    IntMat m(cn, dn);
    for (int i = 0; i < cn; ++i)
      for (int j = 0; j < dn; ++j) {
        std::int64_t step = 1;
        for (std::int64_t k = 0; k < std::max<std::int64_t>(0, ce[static_cast<std::size_t>(i)] - de[static_cast<std::size_t>(j)]); ++k)
          step *= p;
        m(i, j) = Int(step * (entry(rng) % 5));
      }
    FinAbHom h(dom, cod, m);

    std::vector<std::int64_t> dmod, cmod;
    for (auto e : de) {
      std::int64_t q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      dmod.push_back(q);
    }
    for (auto e : ce) {
      std::int64_t q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      cmod.push_back(q);
    }
    std::set<std::vector<std::int64_t>> image;
    std::int64_t kernel = 0;
    std::vector<std::int64_t> x(static_cast<std::size_t>(dn), 0);
    while (true) {
      std::vector<std::int64_t> y(static_cast<std::size_t>(cn), 0);
      for (int i = 0; i < cn; ++i) {
        Int acc(0);
        for (int j = 0; j < dn; ++j)
          acc += h.matrix()(i, j) * Int(x[static_cast<std::size_t>(j)]);
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(),
                   Int(cmod[static_cast<std::size_t>(i)]).get_mpz_t());
        y[static_cast<std::size_t>(i)] = r.get_si();
      }
      image.insert(y);
      if (std::all_of(y.begin(), y.end(),
                      [](std::int64_t v) { return v == 0; }))
        ++kernel;
      int pos = 0;
      while (pos < dn) {
        x[static_cast<std::size_t>(pos)] += 1;
        if (x[static_cast<std::size_t>(pos)] < dmod[static_cast<std::size_t>(pos)]) break;
        x[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == dn) break;
    }
    std::int64_t img_exp = 0, q = 1;
    while (q < static_cast<std::int64_t>(image.size())) {
      q *= p;
      ++img_exp;
    }
    std::int64_t ker_exp = 0;
    q = 1;
    while (q < kernel) {
      q *= p;
      ++ker_exp;
    }
    std::ostringstream what;
    what << "hom order exponents vs enumeration (case " << t << ", p=" << p
         << "): got image " << h.image_order_exponent() << " kernel "
         << h.kernel_order_exponent() << ", enumerated " << img_exp << " / "
         << ker_exp;
    s.check(h.image_order_exponent() == img_exp &&
                h.kernel_order_exponent() == ker_exp,
            what.str());
  }
}

void suite_reduction(Suite& s) {
  struct FieldCase {
    std::string name;
    NumberField k;
  };
  std::vector<FieldCase> fields;
  fields.push_back({"Q", NumberField::from_builtin("Q")});
  fields.push_back({"Q(sqrt,-5)", NumberField::from_builtin("Q(sqrt,-5)")});
  fields.push_back({"Q(sqrt,-1)", NumberField::from_builtin("Q(sqrt,-1)")});
  fields.push_back({"Q(sqrt,2)", NumberField::from_builtin("Q(sqrt,2)")});

  auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));

  for (const auto& fc : fields) {
    std::vector<ArchPlace> arch;
    for (int i = 0; i < fc.k.r1; ++i) arch.push_back({false, 0});
    for (int i = 0; i < fc.k.r2; ++i) arch.push_back({true, 0});

    for (std::int64_t p : {2, 3}) {
      std::vector<GaloisModule> mods;
      mods.push_back(make_module(c2, p, {1}, {}, arch));
      mods.push_back(make_module(c2, p, {2}, {}, arch));
      if (p != 2) mods.push_back(make_module(c2, p, {1}, {{1, mat1(-1)}}, arch));

      for (std::size_t mi = 0; mi < mods.size(); ++mi) {
        PlaceSet S(fc.k);
        S.add_finite(p, {});
        EulerContext ctx(S, mods[mi], false, false);
        auto t = tate_rhs(ctx);
        auto b = chi2_upper_bound(ctx);
        std::ostringstream w1;
        w1 << fc.name << " p=" << p << " module " << mi
           << ": bound collapses to the closed form when S covers p (got "
           << card_str(b) << " vs " << card_str(t) << ")";
        s.check(b == t, w1.str());
        if (fc.k.totally_imaginary()) {
          auto e = etale_chi(ctx);
          std::ostringstream w2;
          w2 << fc.name << " p=" << p << " module " << mi
             << ": etale product equals the closed form (got " << card_str(e)
             << " vs " << card_str(t) << ")";
          s.check(e == t, w2.str());
        }
      }
    }
  }
}

FormalCardinality card_from_json(const nlohmann::json& j) {
  FormalCardinality c;
  for (auto it = j.begin(); it != j.end(); ++it)
    c *= FormalCardinality::prime_power(std::stoll(it.key()),
                                        it.value().get<std::int64_t>());
  return c;
}

void suite_dominance(Suite& s) {
  for (const auto& name : bundled_names()) {
    auto batch = parse_batch(bundled_text(name));
    for (const auto& sc : batch) {
      auto out = evaluate_scenario(sc, false);
      const auto& res = out.report["results"];
      if (!res.contains("chi2_exact")) continue;
      auto lhs = card_from_json(res["chi2_exact"]);
      auto rhs = card_from_json(res["chi2_bound"]);
      std::ostringstream what;
      what << out.id << ": exact value " << card_str(lhs)
           << " within bound " << card_str(rhs);
      s.check(lhs <= rhs, what.str());
    }
  }
}

void suite_case_soundness(Suite& s) {
  for (const auto& name : bundled_names()) {
    auto batch = parse_batch(bundled_text(name));
    for (const auto& sc : batch) {
      auto out = evaluate_scenario(sc, false);
      const auto& res = out.report["results"];
      if (!res.contains("ledger")) continue;
      const auto& led = res["ledger"];
      std::int64_t d = led["d"].get<std::int64_t>();
      for (const auto& row : led["rows"]) {
        if (!row.contains("case_bound")) continue;
        std::int64_t r = row["r"].get<std::int64_t>();
        std::int64_t cb = row["case_bound"].get<std::int64_t>();
        std::ostringstream what;
        what << out.id << " row " << row["id"].get<std::string>() << ": r - d = "
             << (r - d) << " within case bound " << cb;
        s.check(r - d <= cb, what.str());
      }
      s.check(!led["violation"].get<bool>(),
              out.id + ": ledger stays within the presentation bound");
    }
  }
}

void suite_defect(Suite& s) {
  std::map<std::string, std::int64_t> expected = {
      {"defect_totally_imaginary_n2", -3},
      {"defect_real_quadratic_diag", -3},
      {"defect_scalar_boundary", 0},
  };
  auto batch = parse_batch(bundled_text("extras_defect"));
  for (const auto& sc : batch) {
    auto out = evaluate_scenario(sc, false);
    std::int64_t got = out.report["results"]["defect"].get<std::int64_t>();
    std::int64_t want = expected.at(out.id);
    std::ostringstream what;
    what << out.id << ": defect " << got << " (expected " << want << ")";
    s.check(got == want, what.str());
  }
}

void suite_group_invariants(Suite& s) {
  auto q8 = FiniteGroup::quaternion8();
  auto s3 = FiniteGroup::symmetric3();
  auto c6 = FiniteGroup::cyclic(6);
  auto c12 = FiniteGroup::cyclic(12);
  auto v4 = FiniteGroup::klein4();

  using IV = std::vector<std::int64_t>;
  s.check(q8.abelianization() == IV({2, 2}), "Q8 abelianization is [2, 2]");
  s.check(s3.abelianization() == IV({2}), "S3 abelianization is [2]");
  s.check(c6.abelianization() == IV({6}), "C6 abelianization is [6]");
  s.check(c12.abelianization() == IV({12}), "C12 abelianization is [12]");
  s.check(v4.abelianization() == IV({2, 2}), "Klein4 abelianization is [2, 2]");

  s.check(FiniteGroup::trivial().minimal_generators() == 0,
          "trivial group needs 0 generators");
  s.check(c6.minimal_generators() == 1, "C6 needs 1 generator");
  s.check(v4.minimal_generators() == 2, "Klein4 needs 2 generators");
  s.check(q8.minimal_generators() == 2, "Q8 needs 2 generators");
  s.check(s3.minimal_generators() == 2, "S3 needs 2 generators");

  s.check(q8.involutions().size() == 2, "Q8 has one nontrivial involution");
  s.check(s3.involutions().size() == 4, "S3 has three transpositions");
  s.check(v4.involutions().size() == 4, "Klein4 is all involutions");

  s.check(q8.commutator_subgroup().size() == 2, "Q8 commutator has order 2");
  s.check(s3.commutator_subgroup().size() == 3, "S3 commutator has order 3");

  s.check(q8.element_order(q8.element_by_label("i").value()) == 4,
          "i has order 4 in Q8");
  s.check(s3.element_order(s3.element_by_label("(1 2 3)").value()) == 3,
          "(1 2 3) has order 3 in S3");
}

void suite_validators(Suite& s) {
  {
    Eigen::MatrixXi t(2, 2);
    t << 0, 1, 1, 1;
    bool threw = false;
    try {
      FiniteGroup::from_table(t, {});
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "table without inverses is rejected");
  }
  {
    bool threw = false;
    try {
      FiniteAbelianPGroup bad(6, {1});
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "composite p is rejected");
  }
  {
    bool threw = false;
    try {
      FiniteAbelianPGroup bad(3, {0});
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "exponent 0 is rejected");
  }
  {
    auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    bool threw = false;
    try {
      std::vector<IntMat> act = {mat1(1), mat1(0)};
      GaloisModule bad(c2, FiniteAbelianPGroup(3, {1}), act, std::nullopt, {});
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "non-invertible action matrix is rejected");
  }
  {
    auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    bool threw = false;
    try {
      std::vector<IntMat> act = {mat1(1), mat1(2)};
      GaloisModule bad(c2, FiniteAbelianPGroup(5, {1}), act, std::nullopt, {});
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "non-homomorphic action is rejected");
  }
  {
    auto c4 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4));
    bool threw = false;
    try {
      int gen = c4->cyclic_generator().value();
      auto m = make_module(c4, 3, {1}, {},
                           {{false, gen}});
      (void)m;
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "order-4 element is rejected as an involution");
  }
  {
    bool threw = false;
    try {
      IntMat m(1, 1);
      m(0, 0) = 1;
      FinAbHom bad(FiniteAbelianPGroup(2, {1}), FiniteAbelianPGroup(2, {2}), m);
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "ill-defined hom into a larger cyclic factor is rejected");
  }
  {
    auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    auto m = make_module(c2, 3, {1}, {});
    bool threw = false;
    try {
      cartier_dual(m);
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "dual without a character is rejected");
  }
  {
    auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
    auto m = make_module(c2, 2, {2, 1}, {});
    bool threw = false;
    try {
      cocycle_oracle(m);
    } catch (const EngineError&) {
      threw = true;
    }
    s.check(threw, "mod-p engine rejects non-elementary modules");
  }
}

}  // namespace

std::vector<SuiteResult> run_selftest(const std::string& filter,
                                      std::uint64_t seed) {
  struct Entry {
    const char* name;
    void (*run)(Suite&, std::uint64_t);
  };
  static const Entry entries[] = {
      {"product-formula",
       [](Suite& s, std::uint64_t seed) { suite_product_formula(s, seed); }},
      {"cyclic", [](Suite& s, std::uint64_t) { suite_cyclic(s); }},
      {"engine-agreement",
       [](Suite& s, std::uint64_t) { suite_engine_agreement(s); }},
      {"snf-conformance",
       [](Suite& s, std::uint64_t seed) { suite_snf_conformance(s, seed); }},
      {"reduction", [](Suite& s, std::uint64_t) { suite_reduction(s); }},
      {"dominance", [](Suite& s, std::uint64_t) { suite_dominance(s); }},
      {"case-soundness",
       [](Suite& s, std::uint64_t) { suite_case_soundness(s); }},
      {"defect", [](Suite& s, std::uint64_t) { suite_defect(s); }},
      {"group-invariants",
       [](Suite& s, std::uint64_t) { suite_group_invariants(s); }},
      {"validators", [](Suite& s, std::uint64_t) { suite_validators(s); }},
  };

  std::vector<SuiteResult> results;
  for (const auto& e : entries) {
    if (!filter.empty() &&
        std::string(e.name).find(filter) == std::string::npos)
      continue;
    Suite s(e.name);
    e.run(s, seed);
    results.push_back(std::move(s.result));
  }
  return results;
}

}  // namespace euchar
