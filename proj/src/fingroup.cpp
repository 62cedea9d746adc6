#include "euchar/fingroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "euchar/snf.hpp"

namespace euchar {

Permutation parse_cycles(const std::string& s, int ground_size) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = ground_size;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == 'e') {
      ++i;
      continue;
    }
    if (c != '(') throw SchemaError("bad cycle notation: " + s);
    std::size_t close = s.find(')', i);
    if (close == std::string::npos)
      throw SchemaError("unclosed cycle in: " + s);
    std::istringstream in(s.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    int pt;
    while (in >> pt) {
      if (pt < 1) throw SchemaError("cycle points are 1-based: " + s);
      max_point = std::max(max_point, pt);
      cyc.push_back(pt - 1);
    }
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size())
      throw SchemaError("repeated point in cycle: " + s);
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  Permutation p(static_cast<std::size_t>(max_point));
  for (int j = 0; j < max_point; ++j) p[static_cast<std::size_t>(j)] = j;
  for (const auto& cyc : cycles)
    for (std::size_t j = 0; j < cyc.size(); ++j)
      p[static_cast<std::size_t>(cyc[j])] =
          cyc[(j + 1) % cyc.size()];
  return p;
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      first = false;
      os << (j + 1);
      j = static_cast<std::size_t>(p[j]);
    }
    os << ')';
  }
  return any ? os.str() : "e";
}

void FiniteGroup::validate() const {
  const int n = order();
  if (n < 1)
    throw EngineError("GroupInvariantViolated", "empty multiplication table");
  if (table_.cols() != n)
    throw EngineError("GroupInvariantViolated", "table must be square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table_(i, j) < 0 || table_(i, j) >= n)
        throw EngineError("GroupInvariantViolated",
                          "table entry out of range");
  for (int g = 0; g < n; ++g)
    if (table_(0, g) != g || table_(g, 0) != g)
      throw EngineError("GroupInvariantViolated",
                        "element 0 must be a two-sided identity");
  for (int g = 0; g < n; ++g) {
    bool has_inv = false;
    for (int h = 0; h < n; ++h)
      if (table_(g, h) == 0 && table_(h, g) == 0) has_inv = true;
    if (!has_inv)
      throw EngineError("GroupInvariantViolated",
                        "element without two-sided inverse");
  }
  auto check_assoc = [&](int a, int b, int c) {
    if (table_(table_(a, b), c) != table_(a, table_(b, c)))
      throw EngineError("GroupInvariantViolated",
                        "associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x61737363u);  // fixed seed: deterministic spot check
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int k = 0; k < 10000; ++k)
      check_assoc(dist(rng), dist(rng), dist(rng));
  }
}

FiniteGroup FiniteGroup::from_table(Eigen::MatrixXi table,
                                    std::vector<std::string> labels) {
  FiniteGroup g;
  g.table_ = std::move(table);
  const int n = g.order();
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n)
    throw EngineError("GroupInvariantViolated", "label count mismatch");
  g.labels_ = std::move(labels);
  g.validate();
  g.inv_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_(a, b) == 0) g.inv_[static_cast<std::size_t>(a)] = b;
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> generators,
                                           int order_cap) {
  std::size_t ground = 1;
  for (const auto& p : generators) ground = std::max(ground, p.size());
  for (auto& p : generators) {
    std::size_t old = p.size();
    p.resize(ground);
    for (std::size_t i = old; i < ground; ++i) p[i] = static_cast<int>(i);
    std::vector<bool> hit(ground, false);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(ground) || hit[static_cast<std::size_t>(v)])
        throw SchemaError("generator is not a permutation");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  Permutation id(ground);
  for (std::size_t i = 0; i < ground; ++i) id[i] = static_cast<int>(i);

  auto compose = [ground](const Permutation& a, const Permutation& b) {
    // (a*b)(x) = a(b(x)).
    Permutation r(ground);
    for (std::size_t i = 0; i < ground; ++i)
      r[i] = a[static_cast<std::size_t>(b[i])];
    return r;
  };

  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    Permutation cur = elems[head];
    for (const auto& gen : generators) {
      Permutation nxt = compose(cur, gen);
      if (index.emplace(nxt, static_cast<int>(elems.size())).second) {
        elems.push_back(nxt);
        if (static_cast<int>(elems.size()) > order_cap)
          throw EngineError("OrderCapExceeded",
                            "closure exceeds cap " + std::to_string(order_cap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  Eigen::MatrixXi table(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[static_cast<std::size_t>(a)],
                                   elems[static_cast<std::size_t>(b)]));
      if (it == index.end())
        throw EngineError("GroupInvariantViolated", "closure not closed");
      table(a, b) = it->second;
    }
  std::vector<std::string> labels;
  for (const auto& p : elems) labels.push_back(cycle_string(p));
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw SchemaError("cyclic group needs n >= 1");
  Eigen::MatrixXi table(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table(a, b) = (a + b) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::klein4() {
  Eigen::MatrixXi table(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table(a, b) = a ^ b;
  return from_table(std::move(table), {"1", "a", "b", "ab"});
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements ordered 1, -1, i, -i, j, -j, k, -k; index = 2*axis + sign bit.
  // axis 0 is the scalar 1; sign[a][b] and axis[a][b] encode the quaternion
  // products of the positive units.
  static const int axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Eigen::MatrixXi table(8, 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int s = sign[ax][bx];
      if (a % 2) s = -s;
      if (b % 2) s = -s;
      table(a, b) = 2 * axis[ax][bx] + (s < 0 ? 1 : 0);
    }
  return from_table(std::move(table),
                    {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup FiniteGroup::symmetric3() {
  return from_permutations({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
}

FiniteGroup FiniteGroup::from_builtin(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name == "Klein4") return klein4();
  if (name == "Q8") return quaternion8();
  if (name == "S3") return symmetric3();
  if (name.size() > 1 && name[0] == 'C') {
    int n = std::stoi(name.substr(1));
    return cyclic(n);
  }
  throw SchemaError("unknown builtin group: " + name);
}

int FiniteGroup::element_order(int a) const {
  int o = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

bool FiniteGroup::is_cyclic() const { return cyclic_generator().has_value(); }

std::optional<int> FiniteGroup::cyclic_generator() const {
  for (int g = 0; g < order(); ++g)
    if (element_order(g) == order()) return g;
  return std::nullopt;
}

std::vector<int> FiniteGroup::involutions() const {
  std::vector<int> out;
  for (int g = 0; g < order(); ++g)
    if (mul(g, g) == 0) out.push_back(g);
  return out;
}

std::vector<int> FiniteGroup::subgroup_closure(
    const std::vector<int>& elems) const {
  std::vector<bool> in(static_cast<std::size_t>(order()), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (int g : elems)
    if (!in[static_cast<std::size_t>(g)]) {
      in[static_cast<std::size_t>(g)] = true;
      queue.push_back(g);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int g : elems) {
      int x = mul(queue[head], g);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = true;
        queue.push_back(x);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

int FiniteGroup::minimal_generators(int order_cap) const {
  const int n = order();
  if (n > order_cap)
    throw EngineError("OrderCapExceeded",
                      "minimal_generators capped at order " +
                          std::to_string(order_cap));
  if (n == 1) return 0;
  // d(G) is at least the invariant-factor count of G/[G,G].
  int lower = std::max<int>(1, static_cast<int>(abelianization().size()));

  std::vector<int> pick;
  // Try all ascending element tuples of size k.
  auto search = [&](auto&& self, int k, int from) -> bool {
    if (static_cast<int>(pick.size()) == k)
      return static_cast<int>(subgroup_closure(pick).size()) == n;
    for (int g = from; g < n; ++g) {
      pick.push_back(g);
      if (self(self, k, g + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = lower; k <= n; ++k) {
    pick.clear();
    if (search(search, k, 1)) return k;
  }
  throw EngineError("InternalInvariant", "group not generated by itself");
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
  const int n = order();
  std::vector<int> gens;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = mul(mul(inv(a), inv(b)), mul(a, b));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        gens.push_back(c);
      }
    }
  return subgroup_closure(gens);
}

std::vector<std::int64_t> FiniteGroup::abelianization() const {
  const int n = order();
  std::vector<int> comm = commutator_subgroup();
  std::vector<bool> in_comm(static_cast<std::size_t>(n), false);
  for (int g : comm) in_comm[static_cast<std::size_t>(g)] = true;

  // Cosets of [G,G]; representative = smallest element.
  std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[static_cast<std::size_t>(g)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : comm)
      coset_of[static_cast<std::size_t>(mul(g, h))] = id;
  }
  const int m = static_cast<int>(reps.size());
  auto qmul = [&](int a, int b) {
    return coset_of[static_cast<std::size_t>(
        mul(reps[static_cast<std::size_t>(a)],
            reps[static_cast<std::size_t>(b)]))];
  };

  // Greedy generating set of the abelian quotient.
  std::vector<int> gens;
  {
    std::vector<bool> covered(static_cast<std::size_t>(m), false);
    covered[0] = true;
    int covered_count = 1;
    for (int g = 1; g < m && covered_count < m; ++g) {
      if (covered[static_cast<std::size_t>(g)]) continue;
      gens.push_back(g);
      // Close the current covered set under the new generator.
      std::vector<int> all;
      for (int x = 0; x < m; ++x)
        if (covered[static_cast<std::size_t>(x)]) all.push_back(x);
      for (std::size_t head = 0; head < all.size(); ++head) {
        for (int gg : gens) {
          int y = qmul(all[head], gg);
          if (!covered[static_cast<std::size_t>(y)]) {
            covered[static_cast<std::size_t>(y)] = true;
            all.push_back(y);
            ++covered_count;
          }
        }
      }
    }
  }
  const int k = static_cast<int>(gens.size());
  if (k == 0) return {};

  // Polycyclic relation matrix: row j expresses the least power of gens[j]
  // landing in <gens[0..j-1]> through the earlier generators.  The relation
  // lattice it spans has index |Q|, so it is the full lattice.
  std::map<int, std::vector<std::int64_t>> rep_vec;
  rep_vec[0] = std::vector<std::int64_t>(static_cast<std::size_t>(k), 0);
  IntMat rel = IntMat::Zero(k, k);
  for (int j = 0; j < k; ++j) {
    int g = gens[static_cast<std::size_t>(j)];
    int x = g;
    std::int64_t t = 1;
    while (!rep_vec.count(x)) {
      x = qmul(x, g);
      ++t;
    }
    const auto& tail = rep_vec[x];
    for (int c = 0; c < k; ++c)
      rel(j, c) = -tail[static_cast<std::size_t>(c)];
    rel(j, j) += Int(static_cast<long>(t));
    // Extend representations: every h * g^s for known h and 0 <= s < t.
    std::map<int, std::vector<std::int64_t>> next = rep_vec;
    for (const auto& [h, v] : rep_vec) {
      int y = h;
      for (std::int64_t s = 1; s < t; ++s) {
        y = qmul(y, g);
        auto w = v;
        w[static_cast<std::size_t>(j)] = s;
        next.emplace(y, std::move(w));
      }
    }
    rep_vec = std::move(next);
  }
  if (static_cast<int>(rep_vec.size()) != m)
    throw EngineError("InternalInvariant", "polycyclic closure incomplete");

  std::vector<Int> diag = smith_diagonal(std::move(rel));
  Int prod = 1;
  for (const auto& d : diag) prod *= d;
  if (prod != m)
    throw EngineError("InternalInvariant",
                      "abelianization relation lattice has wrong index");
  std::vector<std::int64_t> out;
  for (const auto& d : diag)
    if (d > 1) out.push_back(d.get_si());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> FiniteGroup::element_by_label(
    const std::string& label) const {
  for (int i = 0; i < order(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

}  // namespace euchar
