#include "euchar/scenario.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "euchar/cohom.hpp"
#include "euchar/formulas.hpp"

namespace euchar {

namespace {

using json = nlohmann::json;

constexpr int kMaxDegree = 24;
constexpr int kMaxTableOrder = 256;
constexpr int kMaxGroundSize = 32;
constexpr int kMaxGenerators = 8;
constexpr int kMaxComponents = 64;
constexpr std::int64_t kMaxExponent = 30;
constexpr std::int64_t kMaxPrime = 2147483647;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

const json& member(const json& o, const std::string& path,
                   const std::string& key) {
  if (!o.is_object()) fail(path, "expected an object");
  auto it = o.find(key);
  if (it == o.end()) fail(path, "missing required key \"" + key + "\"");
  return *it;
}

const json* opt_member(const json& o, const std::string& path,
                       const std::string& key) {
  if (!o.is_object()) fail(path, "expected an object");
  auto it = o.find(key);
  return it == o.end() ? nullptr : &*it;
}

void check_keys(const json& o, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!o.is_object()) fail(path, "expected an object");
  for (auto it = o.begin(); it != o.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(path, "unknown key \"" + it.key() + "\"");
  }
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::int64_t as_prime(const json& v, const std::string& path) {
  const std::int64_t p = as_int(v, path);
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    fail(path, "expected a prime below 2^31");
  }
  return p;
}

NumberField parse_field(const json& j, const std::string& path) {
  check_keys(j, path, {"builtin", "poly"});
  if (const json* b = opt_member(j, path, "builtin")) {
    return NumberField::from_builtin(as_string(*b, path + ".builtin"));
  }
  const json& poly = member(j, path, "poly");
  if (!poly.is_array() || poly.size() < 2) {
    fail(path + ".poly", "expected a coefficient array, constant term first");
  }
  if (static_cast<int>(poly.size()) > kMaxDegree + 1) {
    fail(path + ".poly", "degree above " + std::to_string(kMaxDegree));
  }
  IntPoly f;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    f.push_back(Int(as_int(poly[i], path + ".poly[" + std::to_string(i) + "]")));
  }
  return NumberField::from_poly(std::move(f));
}

struct ParsedGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::string name;
};

ParsedGroup parse_group(const json& j, const std::string& path) {
  check_keys(j, path, {"builtin", "permutations", "ground", "table", "labels"});
  if (const json* b = opt_member(j, path, "builtin")) {
    std::string name = as_string(*b, path + ".builtin");
    return {std::make_shared<const FiniteGroup>(FiniteGroup::from_builtin(name)),
            name};
  }
  if (const json* perms = opt_member(j, path, "permutations")) {
    if (!perms->is_array() || perms->empty()) {
      fail(path + ".permutations", "expected a nonempty array");
    }
    if (static_cast<int>(perms->size()) > kMaxGenerators) {
      fail(path + ".permutations",
           "more than " + std::to_string(kMaxGenerators) + " generators");
    }
    int ground = 0;
    if (const json* g = opt_member(j, path, "ground")) {
      ground = static_cast<int>(as_int(*g, path + ".ground"));
      if (ground < 0 || ground > kMaxGroundSize) {
        fail(path + ".ground", "ground size out of range");
      }
    }
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < perms->size(); ++i) {
      const std::string where = path + ".permutations[" + std::to_string(i) + "]";
      Permutation p = parse_cycles(as_string((*perms)[i], where), ground);
      if (static_cast<int>(p.size()) > kMaxGroundSize) {
        fail(where, "ground size out of range");
      }
      gens.push_back(std::move(p));
    }
    auto g = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_permutations(std::move(gens)));
    return {g, "perm-group(" + std::to_string(g->order()) + ")"};
  }
  const json& table = member(j, path, "table");
  if (!table.is_array() || table.empty()) {
    fail(path + ".table", "expected a nonempty square array");
  }
  const int n = static_cast<int>(table.size());
  if (n > kMaxTableOrder) fail(path + ".table", "order above cap");
  Eigen::MatrixXi t(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = table[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      fail(path + ".table", "row " + std::to_string(r) + " is not length " +
                                std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      t(r, c) = static_cast<int>(
          as_int(row[static_cast<std::size_t>(c)],
                 path + ".table[" + std::to_string(r) + "]"));
    }
  }
  std::vector<std::string> labels;
  if (const json* ls = opt_member(j, path, "labels")) {
    if (!ls->is_array()) fail(path + ".labels", "expected an array");
    for (const auto& l : *ls) labels.push_back(as_string(l, path + ".labels"));
  }
  auto g = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(t), std::move(labels)));
  return {g, "table-group(" + std::to_string(g->order()) + ")"};
}

int element_by_label_checked(const FiniteGroup& g, const std::string& label,
                             const std::string& path) {
  if (auto e = g.element_by_label(label)) return *e;
  fail(path, "no group element labeled \"" + label + "\"");
}

IntMat parse_matrix(const json& j, int k, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != k) {
    fail(path, "expected a " + std::to_string(k) + "x" + std::to_string(k) +
                   " integer matrix");
  }
  IntMat m(k, k);
  for (int r = 0; r < k; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != k) {
      fail(path, "row " + std::to_string(r) + " is not length " +
                     std::to_string(k));
    }
    for (int c = 0; c < k; ++c) {
      m(r, c) = Int(as_int(row[static_cast<std::size_t>(c)],
                           path + "[" + std::to_string(r) + "]"));
    }
  }
  return m;
}

std::vector<IntMat> parse_action(const json& j, const FiniteGroup& g, int k,
                                 const std::string& path) {
  if (j.is_string()) {
    if (as_string(j, path) != "trivial") {
      fail(path, "expected \"trivial\" or a label-to-matrix object");
    }
    return std::vector<IntMat>(static_cast<std::size_t>(g.order()),
                               IntMat::Identity(k, k));
  }
  if (!j.is_object()) fail(path, "expected \"trivial\" or an object");
  std::map<int, IntMat> seeds;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int e = element_by_label_checked(g, it.key(), path);
    seeds[e] = parse_matrix(it.value(), k, path + "." + it.key());
  }
  return complete_action(g, seeds, k);
}

std::optional<std::vector<Int>> parse_cyclo(const json* j,
                                            const FiniteGroup& g,
                                            const std::string& path) {
  if (!j) return std::nullopt;
  if (j->is_string()) {
    if (as_string(*j, path) != "trivial") {
      fail(path, "expected \"trivial\" or a label-to-integer object");
    }
    return std::vector<Int>(static_cast<std::size_t>(g.order()), Int(1));
  }
  if (!j->is_object()) fail(path, "expected \"trivial\" or an object");
  std::map<int, Int> seeds;
  for (auto it = j->begin(); it != j->end(); ++it) {
    const int e = element_by_label_checked(g, it.key(), path);
    seeds[e] = Int(as_int(it.value(), path + "." + it.key()));
  }
  return complete_character(g, seeds);
}

struct ModuleSpec {
  std::int64_t p = 2;
  std::vector<std::int64_t> exponents;
  std::vector<IntMat> action;
  std::optional<std::vector<Int>> cyclo;
  bool has_cyclo_key = false;
};

ModuleSpec parse_module_spec(const json& j, const FiniteGroup& g,
                             const std::string& path) {
  check_keys(j, path, {"p", "exponents", "action", "cyclo"});
  ModuleSpec spec;
  spec.p = as_prime(member(j, path, "p"), path + ".p");
  const json& exps = member(j, path, "exponents");
  if (!exps.is_array() || exps.empty()) {
    fail(path + ".exponents", "expected a nonempty array");
  }
  if (static_cast<int>(exps.size()) > kMaxComponents) {
    fail(path + ".exponents", "more than " + std::to_string(kMaxComponents) +
                                  " components");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const std::int64_t e =
        as_int(exps[i], path + ".exponents[" + std::to_string(i) + "]");
    if (e < 1 || e > kMaxExponent) {
      fail(path + ".exponents", "exponents must lie in [1, " +
                                    std::to_string(kMaxExponent) + "]");
    }
    if (!spec.exponents.empty() && e > spec.exponents.back()) {
      fail(path + ".exponents", "exponents must be non-increasing");
    }
    spec.exponents.push_back(e);
  }
  const int k = static_cast<int>(spec.exponents.size());
  spec.action = parse_action(member(j, path, "action"), g, k, path + ".action");
  const json* cy = opt_member(j, path, "cyclo");
  spec.has_cyclo_key = cy != nullptr;
  spec.cyclo = parse_cyclo(cy, g, path + ".cyclo");
  return spec;
}

std::vector<ArchPlace> parse_arch(const json* j, const FiniteGroup& g,
                                  const NumberField& k,
                                  const std::string& path) {
  std::vector<ArchPlace> arch;
  if (!j) {
    // Default: complex markers for the complex places, the identity
    // involution for the real ones.
    for (int i = 0; i < k.r1; ++i) arch.push_back(ArchPlace{false, 0});
    for (int i = 0; i < k.r2; ++i) arch.push_back(ArchPlace{true, 0});
    return arch;
  }
  if (!j->is_array()) fail(path, "expected an array of place entries");
  for (std::size_t i = 0; i < j->size(); ++i) {
    const std::string where = path + "[" + std::to_string(i) + "]";
    const json& e = (*j)[i];
    check_keys(e, where, {"complex", "involution"});
    if (const json* c = opt_member(e, where, "complex")) {
      if (!as_bool(*c, where + ".complex")) {
        fail(where + ".complex", "only true entries are meaningful");
      }
      arch.push_back(ArchPlace{true, 0});
    } else {
      const std::string label =
          as_string(member(e, where, "involution"), where + ".involution");
      arch.push_back(
          ArchPlace{false, element_by_label_checked(g, label, where)});
    }
  }
  if (static_cast<int>(arch.size()) != k.r1 + k.r2) {
    fail(path, "expected one entry per archimedean place (" +
                   std::to_string(k.r1 + k.r2) + ")");
  }
  return arch;
}

PlaceSet parse_places(const json& sc, const NumberField& field,
                      const std::string& path) {
  PlaceSet s(field);
  if (const json* ov = opt_member(sc, path, "splitting_overrides")) {
    if (!ov->is_array()) fail(path + ".splitting_overrides", "expected array");
    for (std::size_t i = 0; i < ov->size(); ++i) {
      const std::string where =
          path + ".splitting_overrides[" + std::to_string(i) + "]";
      const json& e = (*ov)[i];
      check_keys(e, where, {"p", "factors", "index_warning"});
      const std::int64_t p = as_prime(member(e, where, "p"), where + ".p");
      const json& fs = member(e, where, "factors");
      if (!fs.is_array() || fs.empty()) fail(where + ".factors", "expected array");
      std::vector<SplitFactor> factors;
      for (const auto& f : fs) {
        check_keys(f, where + ".factors", {"e", "f"});
        factors.push_back(SplitFactor{
            static_cast<int>(as_int(member(f, where, "e"), where + ".e")),
            static_cast<int>(as_int(member(f, where, "f"), where + ".f"))});
      }
      bool warn = false;
      if (const json* w = opt_member(e, where, "index_warning")) {
        warn = as_bool(*w, where + ".index_warning");
      }
      s.override_splitting(p, std::move(factors), warn);
    }
  }
  if (const json* sj = opt_member(sc, path, "S")) {
    check_keys(*sj, path + ".S", {"finite"});
    const json& fin = member(*sj, path + ".S", "finite");
    if (!fin.is_array()) fail(path + ".S.finite", "expected an array");
    for (std::size_t i = 0; i < fin.size(); ++i) {
      const std::string where = path + ".S.finite[" + std::to_string(i) + "]";
      const json& e = fin[i];
      check_keys(e, where, {"p", "factors"});
      const std::int64_t p = as_prime(member(e, where, "p"), where + ".p");
      std::vector<int> idx;
      if (const json* fs = opt_member(e, where, "factors")) {
        if (!fs->is_array()) fail(where + ".factors", "expected an array");
        for (const auto& f : *fs) {
          idx.push_back(static_cast<int>(as_int(f, where + ".factors")));
        }
      }
      s.add_finite(p, idx);
    }
  }
  return s;
}

GaloisModule build_module(const ModuleSpec& spec,
                          std::shared_ptr<const FiniteGroup> group,
                          std::vector<ArchPlace> arch) {
  return GaloisModule(std::move(group),
                      FiniteAbelianPGroup(spec.p, spec.exponents), spec.action,
                      spec.cyclo, std::move(arch));
}

std::set<std::string> parse_outputs(const json& sc, const std::string& path) {
  static const std::set<std::string> known{"tate",  "bound",  "exact", "etale",
                                           "ledger", "defect", "whatif"};
  std::set<std::string> out;
  const json* oj = opt_member(sc, path, "outputs");
  if (!oj) {
    out.insert("tate");
    out.insert("bound");
    return out;
  }
  if (!oj->is_array() || oj->empty()) {
    fail(path + ".outputs", "expected a nonempty array of output names");
  }
  for (const auto& e : *oj) {
    const std::string name = as_string(e, path + ".outputs");
    if (!known.count(name)) fail(path + ".outputs", "unknown output \"" + name + "\"");
    out.insert(name);
  }
  return out;
}

std::vector<LedgerRowInput> parse_ledger(
    const json& j, const std::shared_ptr<const FiniteGroup>& group,
    const std::string& path) {
  check_keys(j, path, {"rows"});
  const json& rows = member(j, path, "rows");
  if (!rows.is_array() || rows.empty()) {
    fail(path + ".rows", "expected a nonempty array");
  }
  std::vector<LedgerRowInput> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = path + ".rows[" + std::to_string(i) + "]";
    const json& r = rows[i];
    check_keys(r, where,
               {"id", "module", "dims", "dim_m", "trivial", "p",
                "classification", "mu_p_dim", "claimed_dim_h2"});
    LedgerRowInput row;
    row.module_id = as_string(member(r, where, "id"), where + ".id");
    std::optional<std::int64_t> row_p;
    if (const json* mj = opt_member(r, where, "module")) {
      if (opt_member(r, where, "dims")) {
        fail(where, "give either \"module\" or \"dims\", not both");
      }
      ModuleSpec spec = parse_module_spec(*mj, *group, where + ".module");
      for (std::int64_t e : spec.exponents) {
        if (e != 1) {
          fail(where + ".module",
               "ledger rows need elementary modules (dimensions)");
        }
      }
      GaloisModule m = build_module(spec, group, {});
      CohomologyReport rep = cohomology(m);
      row.dim_m = static_cast<std::int64_t>(spec.exponents.size());
      row.trivial = m.trivial_action();
      row.dim_h1 = (*rep.dims)[1];
      row.dim_h2 = (*rep.dims)[2];
      row_p = spec.p;
    } else {
      const json& dims = member(r, where, "dims");
      check_keys(dims, where + ".dims", {"h1", "h2"});
      row.dim_h1 = as_int(member(dims, where, "h1"), where + ".dims.h1");
      row.dim_h2 = as_int(member(dims, where, "h2"), where + ".dims.h2");
      if (row.dim_h1 < 0 || row.dim_h2 < 0) {
        fail(where + ".dims", "dimensions must be nonnegative");
      }
      row.dim_m = as_int(member(r, where, "dim_m"), where + ".dim_m");
      if (row.dim_m < 1) fail(where + ".dim_m", "must be >= 1");
      row.trivial = as_bool(member(r, where, "trivial"), where + ".trivial");
      if (const json* pj = opt_member(r, where, "p")) {
        row_p = as_prime(*pj, where + ".p");
      }
    }
    if (const json* c = opt_member(r, where, "classification")) {
      const std::string name = as_string(*c, where + ".classification");
      try {
        row.classification = module_class_from_string(name);
      } catch (const EngineError&) {
        fail(where + ".classification", "unknown classification \"" + name + "\"");
      }
      if (*row.classification == ModuleClass::trivial_S_finite_empty) {
        if (const json* mu = opt_member(r, where, "mu_p_dim")) {
          row.mu_p_dim = static_cast<int>(as_int(*mu, where + ".mu_p_dim"));
        } else if (row_p) {
          row.mu_p_dim = *row_p == 2 ? 1 : 0;
        } else {
          fail(where, "supply mu_p_dim (or p) for trivial_S_finite_empty");
        }
      }
    }
    if (const json* ch = opt_member(r, where, "claimed_dim_h2")) {
      row.claimed_dim_h2 = as_int(*ch, where + ".claimed_dim_h2");
    }
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json splitting_selection_json(const PlaceSet& s) {
  ordered_json arr = ordered_json::array();
  for (std::int64_t p : s.finite_primes()) {
    ordered_json e;
    e["p"] = p;
    ordered_json idx = ordered_json::array();
    for (int i : s.selected(p)) idx.push_back(i);
    e["factors"] = idx;
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json dims_json(const std::array<std::int64_t, 3>& d) {
  return ordered_json::array({d[0], d[1], d[2]});
}

void chi2_exact_json(const Chi2Exact& ex, const GaloisModule& m,
                     ordered_json& results) {
  results["chi2_exact"] = cardinality_json(ex.lhs);
  results["tight"] = ex.tight;
  ordered_json c;
  c["h"] = ordered_json::array({cardinality_json(ex.report.h[0]),
                                cardinality_json(ex.report.h[1]),
                                cardinality_json(ex.report.h[2])});
  if (ex.report.dims) c["dims"] = dims_json(*ex.report.dims);
  if (m.module().elementary()) {
    CohomologyReport alt = cocycle_oracle(m);
    const bool agree = alt.h == ex.report.h && alt.dims == ex.report.dims &&
                       alt.tate_h0 == ex.report.tate_h0;
    c["dims_fp_linear"] = dims_json(*alt.dims);
    c["engines"] =
        ordered_json::array({engine_name(ex.report.engine), engine_name(alt.engine)});
    c["agree"] = agree;
    if (!agree) {
      throw EngineError("EngineMismatch",
                        "independent cohomology engines disagree");
    }
  } else {
    c["engines"] = ordered_json::array({engine_name(ex.report.engine)});
  }
  c["tate_h0"] = cardinality_json(ex.report.tate_h0);
  results["cohomology"] = std::move(c);
}

struct ClaimCheck {
  ordered_json entries = ordered_json::array();
  bool discrepancy = false;

  void add(const std::string& name, ordered_json claimed, ordered_json computed,
           std::vector<std::string>& warnings) {
    const bool match = claimed == computed;
    ordered_json e;
    e["name"] = name;
    e["claimed"] = std::move(claimed);
    e["computed"] = std::move(computed);
    e["match"] = match;
    entries.push_back(std::move(e));
    if (!match) {
      discrepancy = true;
      warnings.push_back("DISCREPANCY: computed " + name + " = " +
                         entries.back()["computed"].dump() +
                         " differs from the claimed " +
                         entries.back()["claimed"].dump());
    }
  }
};

ordered_json claimed_map_json(const json& m, const std::string& path) {
  if (!m.is_object()) fail(path, "expected a prime-to-exponent object");
  std::map<std::int64_t, std::int64_t> exps;
  for (auto it = m.begin(); it != m.end(); ++it) {
    std::int64_t p = 0;
    try {
      std::size_t pos = 0;
      p = std::stoll(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument(it.key());
    } catch (const std::exception&) {
      fail(path, "keys must be primes, got \"" + it.key() + "\"");
    }
    exps[p] = as_int(it.value(), path + "." + it.key());
  }
  ordered_json out = ordered_json::object();
  for (const auto& [p, e] : exps) {
    if (e != 0) out[std::to_string(p)] = e;
  }
  return out;
}

// Expectation block: frozen values the bundled scenarios must reproduce.
void check_expectations(const json& ex, const std::string& path,
                        const ordered_json& report,
                        std::vector<std::string>& failures) {
  check_keys(ex, path,
             {"tate", "bound", "chi2", "tight", "etale_chi", "dims", "h3_kind",
              "ledger_sup_minus_d", "ledger_rhs_bound", "defect",
              "whatif_bound", "warnings_contain", "warnings_empty"});
  const ordered_json& results = report.at("results");
  auto expect_eq = [&](const std::string& name, const ordered_json& got,
                       const ordered_json& want) {
    if (got != want) {
      failures.push_back(name + ": expected " + want.dump() + ", got " +
                         got.dump());
    }
  };
  auto result_or_fail = [&](const char* key) -> const ordered_json* {
    if (!results.contains(key)) {
      failures.push_back(std::string(key) + ": not computed");
      return nullptr;
    }
    return &results.at(key);
  };
  if (const json* v = opt_member(ex, path, "tate")) {
    if (const auto* got = result_or_fail("tate_rhs")) {
      expect_eq("tate", *got, claimed_map_json(*v, path + ".tate"));
    }
  }
  if (const json* v = opt_member(ex, path, "bound")) {
    if (const auto* got = result_or_fail("chi2_bound")) {
      expect_eq("bound", *got, claimed_map_json(*v, path + ".bound"));
    }
  }
  if (const json* v = opt_member(ex, path, "chi2")) {
    if (const auto* got = result_or_fail("chi2_exact")) {
      expect_eq("chi2", *got, claimed_map_json(*v, path + ".chi2"));
    }
  }
  if (const json* v = opt_member(ex, path, "tight")) {
    if (const auto* got = result_or_fail("tight")) {
      expect_eq("tight", *got, ordered_json(as_bool(*v, path + ".tight")));
    }
  }
  if (const json* v = opt_member(ex, path, "etale_chi")) {
    if (const auto* got = result_or_fail("etale_chi")) {
      expect_eq("etale_chi", *got, claimed_map_json(*v, path + ".etale_chi"));
    }
  }
  if (const json* v = opt_member(ex, path, "dims")) {
    if (const auto* c = result_or_fail("cohomology")) {
      if (!c->contains("dims")) {
        failures.push_back("dims: not computed (module not elementary)");
      } else {
        expect_eq("dims", c->at("dims"), ordered_json(*v));
      }
    }
  }
  if (const json* v = opt_member(ex, path, "h3_kind")) {
    if (const auto* e = result_or_fail("etale_cards")) {
      expect_eq("h3_kind", e->at("h3").at("kind"),
                ordered_json(as_string(*v, path + ".h3_kind")));
    }
  }
  if (const json* v = opt_member(ex, path, "ledger_sup_minus_d")) {
    if (const auto* l = result_or_fail("ledger")) {
      expect_eq("ledger_sup_minus_d", l->at("sup_minus_d"),
                ordered_json(as_int(*v, path + ".ledger_sup_minus_d")));
    }
  }
  if (const json* v = opt_member(ex, path, "ledger_rhs_bound")) {
    if (const auto* l = result_or_fail("ledger")) {
      expect_eq("ledger_rhs_bound", l->at("rhs_bound"),
                ordered_json(as_int(*v, path + ".ledger_rhs_bound")));
    }
  }
  if (const json* v = opt_member(ex, path, "defect")) {
    if (const auto* got = result_or_fail("defect")) {
      expect_eq("defect", *got, ordered_json(as_int(*v, path + ".defect")));
    }
  }
  if (const json* v = opt_member(ex, path, "whatif_bound")) {
    if (const auto* w = result_or_fail("whatif")) {
      expect_eq("whatif_bound", w->at("bound"),
                claimed_map_json(*v, path + ".whatif_bound"));
    }
  }
  const ordered_json& warnings = report.at("warnings");
  if (const json* v = opt_member(ex, path, "warnings_contain")) {
    if (!v->is_array()) fail(path + ".warnings_contain", "expected an array");
    for (const auto& needle : *v) {
      const std::string n = as_string(needle, path + ".warnings_contain");
      bool found = false;
      for (const auto& w : warnings) {
        found = found || w.get<std::string>().find(n) != std::string::npos;
      }
      if (!found) {
        failures.push_back("warnings_contain: no warning mentions \"" + n + "\"");
      }
    }
  }
  if (const json* v = opt_member(ex, path, "warnings_empty")) {
    if (as_bool(*v, path + ".warnings_empty") && !warnings.empty()) {
      failures.push_back("warnings_empty: got " + warnings.dump());
    }
  }
}

}  // namespace

std::vector<json> parse_batch(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  const json* list = nullptr;
  if (root.is_array()) {
    list = &root;
  } else if (root.is_object() && root.contains("scenarios")) {
    check_keys(root, "$", {"scenarios"});
    list = &root.at("scenarios");
    if (!list->is_array()) fail("$.scenarios", "expected an array");
  } else {
    fail("$", "expected a scenario array or {\"scenarios\": [...]}");
  }
  if (list->empty()) fail("$", "empty scenario list");
  std::vector<json> out;
  for (const auto& s : *list) out.push_back(s);
  return out;
}

ScenarioOutcome evaluate_scenario(const json& sc, bool check_expect) {
  const std::string path = "scenario";
  check_keys(sc, path,
             {"id", "field", "S", "splitting_overrides", "group", "module",
              "real_places", "flags", "outputs", "ledger", "adjoint", "whatif",
              "claims", "expect", "notes"});
  ScenarioOutcome outcome;
  outcome.id = as_string(member(sc, path, "id"), path + ".id");
  if (outcome.id.empty()) fail(path + ".id", "must be nonempty");

  NumberField field = parse_field(member(sc, path, "field"), path + ".field");
  ParsedGroup pg = parse_group(member(sc, path, "group"), path + ".group");
  std::vector<ArchPlace> arch =
      parse_arch(opt_member(sc, path, "real_places"), *pg.group, field,
                 path + ".real_places");
  ModuleSpec mspec =
      parse_module_spec(member(sc, path, "module"), *pg.group, path + ".module");
  GaloisModule module = build_module(mspec, pg.group, arch);
  PlaceSet places = parse_places(sc, field, path);

  bool quotient_is_full = false;
  bool faithful_quotient = false;
  if (const json* flags = opt_member(sc, path, "flags")) {
    check_keys(*flags, path + ".flags",
               {"quotient_is_full", "faithful_quotient"});
    if (const json* q = opt_member(*flags, path + ".flags", "quotient_is_full")) {
      quotient_is_full = as_bool(*q, path + ".flags.quotient_is_full");
    }
    if (const json* f = opt_member(*flags, path + ".flags", "faithful_quotient")) {
      faithful_quotient = as_bool(*f, path + ".flags.faithful_quotient");
    }
  }
  std::set<std::string> outputs = parse_outputs(sc, path);
  if ((outputs.count("exact") || outputs.count("ledger")) && !quotient_is_full) {
    fail(path + ".outputs",
         "\"exact\" and \"ledger\" need flags.quotient_is_full");
  }

  EulerContext ctx(places, module, quotient_is_full, faithful_quotient);

  // Report skeleton.
  ordered_json report;
  report["scenario_id"] = outcome.id;
  {
    ordered_json fj;
    ordered_json poly = ordered_json::array();
    for (const Int& c : field.min_poly) poly.push_back(c.get_si());
    fj["poly"] = std::move(poly);
    fj["signature"] = ordered_json::array({field.r1, field.r2});
    fj["degree"] = field.degree;
    report["field"] = std::move(fj);
  }
  {
    ordered_json sj;
    sj["finite"] = splitting_selection_json(ctx.S());
    sj["gamma"] = ctx.S().gamma();
    report["S"] = std::move(sj);
  }
  {
    ordered_json mj;
    mj["p"] = mspec.p;
    ordered_json exps = ordered_json::array();
    for (std::int64_t e : mspec.exponents) exps.push_back(e);
    mj["exponents"] = std::move(exps);
    mj["group"] = pg.name;
    mj["group_order"] = pg.group->order();
    mj["trivial_action"] = module.trivial_action();
    mj["cyclo"] = !mspec.has_cyclo_key ? "absent"
                  : std::all_of(mspec.cyclo->begin(), mspec.cyclo->end(),
                                [](const Int& v) { return v == 1; })
                      ? "trivial"
                      : "supplied";
    ordered_json aj = ordered_json::array();
    for (const ArchPlace& v : module.arch_places()) {
      aj.push_back(v.complex_place
                       ? std::string("complex")
                       : "inv:" + pg.group->labels()[static_cast<std::size_t>(
                                      v.involution)]);
    }
    mj["arch"] = std::move(aj);
    report["module_summary"] = std::move(mj);
  }

  std::vector<std::string> warnings;
  ordered_json results = ordered_json::object();

  // Splitting warnings for every prime the evaluation may consult.
  {
    std::set<std::int64_t> consulted;
    for (std::int64_t p : ctx.S().finite_primes()) consulted.insert(p);
    consulted.insert(mspec.p);
    if (const json* wi = opt_member(sc, path, "whatif")) {
      if (const json* add = opt_member(*wi, path + ".whatif", "add_finite")) {
        if (add->is_array()) {
          for (const auto& e : *add) {
            if (e.is_object() && e.contains("p") &&
                e.at("p").is_number_integer()) {
              consulted.insert(e.at("p").get<std::int64_t>());
            }
          }
        }
      }
    }
    for (std::int64_t p : consulted) {
      if (ctx.S().splitting(p).index_warning) {
        warnings.push_back(
            "index_warning: the defining order may be non-maximal at " +
            std::to_string(p) +
            "; splitting above it is heuristic (supply splitting_overrides "
            "to pin it)");
      }
    }
  }

  if (outputs.count("tate")) {
    results["tate_rhs"] = cardinality_json(tate_rhs(ctx));
  }
  if (outputs.count("bound")) {
    results["chi2_bound"] = cardinality_json(chi2_upper_bound(ctx));
  }
  std::optional<Chi2Exact> exact;
  if (outputs.count("exact")) {
    exact = chi2_exact_finite(ctx);
    chi2_exact_json(*exact, module, results);
  }
  if (outputs.count("etale")) {
    results["etale_chi"] = cardinality_json(etale_chi(ctx));
    if (quotient_is_full) {
      EtaleCards cards = etale_cards(ctx);
      ordered_json ej;
      ej["h0"] = value_or_bound_json(cards.h0);
      ej["h1"] = value_or_bound_json(cards.h1);
      ej["h2"] = value_or_bound_json(cards.h2);
      ej["h3"] = value_or_bound_json(cards.h3);
      results["etale_cards"] = std::move(ej);
    }
  }
  if (outputs.count("ledger")) {
    const json* lj = opt_member(sc, path, "ledger");
    if (!lj) fail(path, "outputs request \"ledger\" but no ledger block");
    std::vector<LedgerRowInput> rows =
        parse_ledger(*lj, pg.group, path + ".ledger");
    PresentationLedger led = presentation_bounds(ctx, rows);
    ordered_json out;
    ordered_json rj = ordered_json::array();
    for (const LedgerRow& row : led.rows) {
      ordered_json r;
      r["id"] = row.module_id;
      r["dim_m"] = row.dim_m;
      r["xi"] = row.xi;
      r["dim_h1"] = row.dim_h1;
      r["dim_h2"] = row.dim_h2;
      r["r"] = row.r;
      if (row.case_bound) r["case_bound"] = *row.case_bound;
      if (row.claimed_dim_h2) {
        r["claimed_dim_h2"] = *row.claimed_dim_h2;
        r["r_claimed"] = *row.r_claimed;
      }
      rj.push_back(std::move(r));
    }
    out["rows"] = std::move(rj);
    out["d"] = led.d;
    out["sup_r"] = led.sup_r;
    out["sup_minus_d"] = led.sup_r - led.d;
    out["gamma"] = led.gamma;
    out["rhs_bound"] = led.rhs_bound;
    out["relations"] = led.relations;
    out["violation"] = led.violation;
    if (led.violation) {
      warnings.push_back(
          "DISCREPANCY: presentation ledger exceeds its bound (sup_r - d = " +
          std::to_string(led.sup_r - led.d) + " > " +
          std::to_string(led.rhs_bound) + "); inputs or engine are wrong");
    }
    results["ledger"] = std::move(out);
  }
  if (outputs.count("defect")) {
    const json* aj = opt_member(sc, path, "adjoint");
    if (!aj) {
      throw EngineError("MissingRepresentation",
                        "outputs request \"defect\" but no adjoint block");
    }
    const std::string apath = path + ".adjoint";
    check_keys(*aj, apath,
               {"p", "rep", "dim", "absolutely_irreducible", "real_places"});
    const std::int64_t ap = as_prime(member(*aj, apath, "p"), apath + ".p");
    const json& repj = member(*aj, apath, "rep");
    int n = 0;
    std::vector<IntMat> rep_int;
    if (repj.is_string()) {
      if (as_string(repj, apath + ".rep") != "trivial") {
        fail(apath + ".rep", "expected \"trivial\" or a label-to-matrix object");
      }
      n = static_cast<int>(as_int(member(*aj, apath, "dim"), apath + ".dim"));
      if (n < 1 || n > kMaxComponents) fail(apath + ".dim", "out of range");
      rep_int = std::vector<IntMat>(static_cast<std::size_t>(pg.group->order()),
                                    IntMat::Identity(n, n));
    } else {
      if (!repj.is_object() || repj.empty()) {
        fail(apath + ".rep", "expected \"trivial\" or a label-to-matrix object");
      }
      n = static_cast<int>(repj.begin().value().is_array()
                               ? repj.begin().value().size()
                               : 0);
      if (n < 1 || n > kMaxComponents) {
        fail(apath + ".rep", "matrices must be square and nonempty");
      }
      std::map<int, IntMat> seeds;
      for (auto it = repj.begin(); it != repj.end(); ++it) {
        const int e = element_by_label_checked(*pg.group, it.key(), apath);
        seeds[e] = parse_matrix(it.value(), n, apath + ".rep." + it.key());
      }
      rep_int = complete_action(*pg.group, seeds, n);
    }
    std::vector<I64Mat> rep;
    for (const IntMat& m : rep_int) {
      I64Mat r(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j2 = 0; j2 < n; ++j2) {
          Int v;
          mpz_fdiv_r(v.get_mpz_t(), m(i, j2).get_mpz_t(), Int(ap).get_mpz_t());
          r(i, j2) = v.get_si();
        }
      }
      rep.push_back(std::move(r));
    }
    AdjointModule rho(pg.group, ap, std::move(rep));
    bool abs_irred = false;
    if (const json* ai = opt_member(*aj, apath, "absolutely_irreducible")) {
      abs_irred = as_bool(*ai, apath + ".absolutely_irreducible");
    }
    std::vector<ArchPlace> aarch =
        parse_arch(opt_member(*aj, apath, "real_places"), *pg.group, field,
                   apath + ".real_places");
    results["defect"] = dimension_defect(field, rho, aarch, abs_irred);
  }
  if (outputs.count("whatif")) {
    const json* wj = opt_member(sc, path, "whatif");
    if (!wj) fail(path, "outputs request \"whatif\" but no whatif block");
    const std::string wpath = path + ".whatif";
    check_keys(*wj, wpath, {"add_finite", "enlarged"});
    const json& addj = member(*wj, wpath, "add_finite");
    if (!addj.is_array() || addj.empty()) {
      fail(wpath + ".add_finite", "expected a nonempty array");
    }
    std::vector<std::pair<std::int64_t, std::vector<int>>> add;
    for (std::size_t i = 0; i < addj.size(); ++i) {
      const std::string where = wpath + ".add_finite[" + std::to_string(i) + "]";
      const json& e = addj[i];
      check_keys(e, where, {"p", "factors"});
      const std::int64_t p = as_prime(member(e, where, "p"), where + ".p");
      std::vector<int> idx;
      if (const json* fs = opt_member(e, where, "factors")) {
        if (!fs->is_array()) fail(where + ".factors", "expected an array");
        for (const auto& f : *fs) {
          idx.push_back(static_cast<int>(as_int(f, where + ".factors")));
        }
      }
      add.emplace_back(p, std::move(idx));
    }
    std::optional<GaloisModule> enlarged;
    if (const json* ej = opt_member(*wj, wpath, "enlarged")) {
      const std::string epath = wpath + ".enlarged";
      check_keys(*ej, epath, {"group", "module", "real_places"});
      ParsedGroup eg = parse_group(member(*ej, epath, "group"), epath + ".group");
      std::vector<ArchPlace> earch =
          parse_arch(opt_member(*ej, epath, "real_places"), *eg.group, field,
                     epath + ".real_places");
      ModuleSpec espec = parse_module_spec(member(*ej, epath, "module"),
                                           *eg.group, epath + ".module");
      enlarged = build_module(espec, eg.group, earch);
    }
    WhatIf wi = whatif_enlarge(ctx, add, enlarged);
    ordered_json out;
    ordered_json added = ordered_json::array();
    for (std::int64_t p : wi.added_primes) added.push_back(p);
    out["added_primes"] = std::move(added);
    out["tate"] = cardinality_json(wi.tate);
    out["epsilon"] = cardinality_json(wi.epsilon);
    out["bound"] = cardinality_json(wi.bound);
    if (wi.exact) {
      out["exact"] = cardinality_json(wi.exact->lhs);
      out["tight"] = wi.exact->tight;
    }
    results["whatif"] = std::move(out);
  }

  report["results"] = std::move(results);

  // External claims: evaluated against computed values, mismatches are
  // surfaced as DISCREPANCY warnings (exit code 4), never patched over.
  if (const json* cj = opt_member(sc, path, "claims")) {
    const std::string cpath = path + ".claims";
    check_keys(*cj, cpath, {"chi2", "dim_h2", "tight"});
    ClaimCheck cc;
    if (const json* v = opt_member(*cj, cpath, "chi2")) {
      if (!exact) fail(cpath + ".chi2", "needs the \"exact\" output");
      cc.add("chi2", claimed_map_json(*v, cpath + ".chi2"),
             cardinality_json(exact->lhs), warnings);
    }
    if (const json* v = opt_member(*cj, cpath, "dim_h2")) {
      if (!exact || !exact->report.dims) {
        fail(cpath + ".dim_h2", "needs \"exact\" on an elementary module");
      }
      cc.add("dim_h2", ordered_json(as_int(*v, cpath + ".dim_h2")),
             ordered_json((*exact->report.dims)[2]), warnings);
    }
    if (const json* v = opt_member(*cj, cpath, "tight")) {
      if (!exact) fail(cpath + ".tight", "needs the \"exact\" output");
      cc.add("tight", ordered_json(as_bool(*v, cpath + ".tight")),
             ordered_json(exact->tight), warnings);
    }
    report["claims_checked"] = std::move(cc.entries);
    outcome.discrepancy = cc.discrepancy;
  }
  for (const std::string& w : warnings) {
    outcome.discrepancy =
        outcome.discrepancy || w.rfind("DISCREPANCY:", 0) == 0;
  }
  {
    ordered_json wj = ordered_json::array();
    for (const std::string& w : warnings) wj.push_back(w);
    report["warnings"] = std::move(wj);
  }

  if (check_expect) {
    if (const json* ex = opt_member(sc, path, "expect")) {
      check_expectations(*ex, path + ".expect", report,
                         outcome.expect_failures);
    }
  }
  outcome.report = std::move(report);
  return outcome;
}

}  // namespace euchar
