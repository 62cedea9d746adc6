#include "euchar/bundled.hpp"

#include <map>

#include "euchar/types.hpp"

namespace euchar {
namespace {

const std::string k_example1_sqrt_5 = R"json([
  {
    "id": "example1_sqrt-5.p2",
    "notes": "Class-group quotient C2 over Q(sqrt(-5)), archimedean-only S, p = 2.",
    "field": {"builtin": "Q(sqrt,-5)"},
    "group": {"builtin": "C2"},
    "module": {"p": 2, "exponents": [1], "action": "trivial", "cyclo": "trivial"},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale", "ledger", "whatif"],
    "ledger": {
      "rows": [
        {"id": "F2-trivial", "module": {"p": 2, "exponents": [1], "action": "trivial"}, "classification": "trivial_S_finite_empty"},
        {"id": "F3-trivial", "module": {"p": 3, "exponents": [1], "action": "trivial"}, "classification": "trivial_S_finite_empty"},
        {"id": "F3-sign", "module": {"p": 3, "exponents": [1], "action": {"g": [[-1]]}}, "classification": "nontrivial_not_mu_p"}
      ]
    },
    "whatif": {"add_finite": [{"p": 3}]},
    "claims": {"chi2": {"2": 1}, "tight": false},
    "expect": {
      "tate": {"2": -1},
      "bound": {"2": 2},
      "chi2": {"2": 1},
      "tight": false,
      "etale_chi": {"2": 1},
      "dims": [1, 1, 1],
      "h3_kind": "upper_bound",
      "ledger_sup_minus_d": 0,
      "ledger_rhs_bound": 1,
      "whatif_bound": {"2": 1},
      "warnings_empty": true
    }
  },
  {
    "id": "example1_sqrt-5.p3",
    "notes": "Same quotient at p = 3; the supplied character is nontrivial since mu_3 is not in K.",
    "field": {"builtin": "Q(sqrt,-5)"},
    "group": {"builtin": "C2"},
    "module": {"p": 3, "exponents": [1], "action": "trivial", "cyclo": {"g": -1}},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale", "ledger"],
    "ledger": {
      "rows": [
        {"id": "F3-trivial", "module": {"p": 3, "exponents": [1], "action": "trivial"}, "classification": "trivial_S_finite_empty"},
        {"id": "F3-sign", "module": {"p": 3, "exponents": [1], "action": {"g": [[-1]]}}, "classification": "nontrivial_not_mu_p"}
      ]
    },
    "claims": {"chi2": {"3": 1}, "tight": true},
    "expect": {
      "tate": {"3": -1},
      "bound": {"3": 1},
      "chi2": {"3": 1},
      "tight": true,
      "etale_chi": {"3": 1},
      "dims": [1, 0, 0],
      "h3_kind": "upper_bound",
      "ledger_sup_minus_d": 0,
      "ledger_rhs_bound": 1,
      "warnings_empty": true
    }
  },
  {
    "id": "example1_sqrt-5.p5",
    "notes": "Same quotient at p = 5.",
    "field": {"builtin": "Q(sqrt,-5)"},
    "group": {"builtin": "C2"},
    "module": {"p": 5, "exponents": [1], "action": "trivial", "cyclo": {"g": -1}},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale"],
    "claims": {"chi2": {"5": 1}, "tight": true},
    "expect": {
      "tate": {"5": -1},
      "bound": {"5": 1},
      "chi2": {"5": 1},
      "tight": true,
      "etale_chi": {"5": 1},
      "dims": [1, 0, 0],
      "h3_kind": "upper_bound",
      "warnings_empty": true
    }
  }
]
)json";

const std::string k_example2_sqrt_120 = R"json([
  {
    "id": "example2_sqrt-120.p2",
    "notes": "Quaternion quotient over Q(sqrt(-120)); the claimed chi2 and dim H^2 disagree with the computed values and the run must surface the discrepancy.",
    "field": {"builtin": "Q(sqrt,-120)"},
    "group": {"builtin": "Q8"},
    "module": {"p": 2, "exponents": [1], "action": "trivial", "cyclo": "trivial"},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale", "ledger"],
    "ledger": {
      "rows": [
        {"id": "F2-trivial", "module": {"p": 2, "exponents": [1], "action": "trivial"}, "classification": "trivial_S_finite_empty", "claimed_dim_h2": 3},
        {"id": "F3-trivial", "module": {"p": 3, "exponents": [1], "action": "trivial"}, "classification": "trivial_S_finite_empty"}
      ]
    },
    "claims": {"chi2": {"2": 2}, "dim_h2": 3},
    "expect": {
      "tate": {"2": -1},
      "bound": {"2": 2},
      "chi2": {"2": 1},
      "tight": false,
      "etale_chi": {"2": 1},
      "dims": [1, 2, 2],
      "h3_kind": "upper_bound",
      "ledger_sup_minus_d": 0,
      "ledger_rhs_bound": 1,
      "warnings_contain": ["DISCREPANCY"]
    }
  },
  {
    "id": "example2_sqrt-120.p3",
    "notes": "Quaternion quotient at p = 3; the supplied character factors through the abelianization.",
    "field": {"builtin": "Q(sqrt,-120)"},
    "group": {"builtin": "Q8"},
    "module": {"p": 3, "exponents": [1], "action": "trivial", "cyclo": {"i": -1, "j": -1}},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale"],
    "claims": {"chi2": {"3": 1}, "tight": true},
    "expect": {
      "tate": {"3": -1},
      "bound": {"3": 1},
      "chi2": {"3": 1},
      "tight": true,
      "etale_chi": {"3": 1},
      "dims": [1, 0, 0],
      "h3_kind": "upper_bound",
      "warnings_empty": true
    }
  },
  {
    "id": "example2_sqrt-120.p5",
    "notes": "Quaternion quotient at p = 5.",
    "field": {"builtin": "Q(sqrt,-120)"},
    "group": {"builtin": "Q8"},
    "module": {"p": 5, "exponents": [1], "action": "trivial", "cyclo": {"i": -1, "j": -1}},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale"],
    "claims": {"chi2": {"5": 1}, "tight": true},
    "expect": {
      "tate": {"5": -1},
      "bound": {"5": 1},
      "chi2": {"5": 1},
      "tight": true,
      "etale_chi": {"5": 1},
      "dims": [1, 0, 0],
      "h3_kind": "upper_bound",
      "warnings_empty": true
    }
  }
]
)json";

const std::string k_extras_defect = R"json([
  {
    "id": "defect_totally_imaginary_n2",
    "notes": "Two-dimensional absolutely irreducible adjoint over a totally imaginary quadratic field.",
    "field": {"builtin": "Q(sqrt,-5)"},
    "group": {"builtin": "trivial"},
    "module": {"p": 3, "exponents": [1], "action": "trivial"},
    "outputs": ["defect"],
    "adjoint": {"p": 3, "rep": "trivial", "dim": 2, "absolutely_irreducible": true},
    "expect": {"defect": -3, "warnings_empty": true}
  },
  {
    "id": "defect_real_quadratic_diag",
    "notes": "Real quadratic field with a diagonal involution at both real places.",
    "field": {"builtin": "Q(sqrt,2)"},
    "group": {"builtin": "C2"},
    "module": {"p": 3, "exponents": [1], "action": "trivial"},
    "real_places": [{"involution": "g"}, {"involution": "g"}],
    "outputs": ["defect"],
    "adjoint": {
      "p": 3,
      "rep": {"g": [[1, 0], [0, -1]]},
      "absolutely_irreducible": true,
      "real_places": [{"involution": "g"}, {"involution": "g"}]
    },
    "expect": {"defect": -3, "warnings_empty": true}
  },
  {
    "id": "defect_scalar_boundary",
    "notes": "One-dimensional case without an irreducibility assertion; the fixed space is computed from the image.",
    "field": {"builtin": "Q"},
    "group": {"builtin": "trivial"},
    "module": {"p": 3, "exponents": [1], "action": "trivial"},
    "outputs": ["defect"],
    "adjoint": {"p": 3, "rep": "trivial", "dim": 1, "absolutely_irreducible": false},
    "expect": {"defect": 0, "warnings_empty": true}
  }
]
)json";

const std::string k_extras_minkowski = R"json([
  {
    "id": "minkowski_trivial_p2",
    "notes": "Over Q with archimedean-only S the trivial quotient is the full Galois group, so the exact value is legitimate.",
    "field": {"builtin": "Q"},
    "group": {"builtin": "trivial"},
    "module": {"p": 2, "exponents": [1], "action": "trivial", "cyclo": "trivial"},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale", "ledger"],
    "ledger": {
      "rows": [
        {"id": "F2-trivial", "module": {"p": 2, "exponents": [1], "action": "trivial"}, "classification": "trivial_S_finite_empty"}
      ]
    },
    "claims": {"chi2": {"2": 1}, "tight": false},
    "expect": {
      "tate": {},
      "bound": {"2": 2},
      "chi2": {"2": 1},
      "tight": false,
      "etale_chi": {},
      "dims": [1, 0, 0],
      "h3_kind": "interval",
      "ledger_sup_minus_d": 0,
      "ledger_rhs_bound": 1,
      "warnings_empty": true
    }
  },
  {
    "id": "minkowski_trivial_p3",
    "notes": "Same setting at p = 3; the supplied character on the trivial group is necessarily trivial, so the bound overshoots while the exact value stays 1.",
    "field": {"builtin": "Q"},
    "group": {"builtin": "trivial"},
    "module": {"p": 3, "exponents": [1], "action": "trivial", "cyclo": "trivial"},
    "flags": {"quotient_is_full": true, "faithful_quotient": true},
    "outputs": ["tate", "bound", "exact", "etale"],
    "claims": {"chi2": {"3": 1}, "tight": false},
    "expect": {
      "tate": {},
      "bound": {"3": 2},
      "chi2": {"3": 1},
      "tight": false,
      "etale_chi": {"3": 1},
      "dims": [1, 0, 0],
      "h3_kind": "upper_bound",
      "warnings_empty": true
    }
  }
]
)json";

const std::string k_extras_reduction = R"json([
  {
    "id": "reduction_sp_in_s",
    "notes": "All places above p are selected, so the bound collapses onto the closed-form product.",
    "field": {"builtin": "Q(sqrt,-5)"},
    "group": {"builtin": "C2"},
    "module": {"p": 2, "exponents": [2, 1], "action": "trivial"},
    "S": {"finite": [{"p": 2}]},
    "outputs": ["tate", "bound", "etale"],
    "expect": {
      "tate": {"2": -3},
      "bound": {"2": -3},
      "etale_chi": {"2": -3},
      "warnings_empty": true
    }
  },
  {
    "id": "reduction_totally_imaginary_sign",
    "notes": "Totally imaginary field with all places above p selected; the etale product equals the global one.",
    "field": {"builtin": "Q(sqrt,-1)"},
    "group": {"builtin": "C2"},
    "module": {"p": 3, "exponents": [1], "action": {"g": [[-1]]}},
    "S": {"finite": [{"p": 3}]},
    "outputs": ["tate", "bound", "etale"],
    "expect": {
      "tate": {"3": -1},
      "bound": {"3": -1},
      "etale_chi": {"3": -1},
      "warnings_empty": true
    }
  },
  {
    "id": "index_warning_heuristic",
    "notes": "The defining order is non-maximal at 2, so the computed splitting is flagged as heuristic.",
    "field": {"poly": [3, 0, 1]},
    "group": {"builtin": "trivial"},
    "module": {"p": 2, "exponents": [1], "action": "trivial"},
    "S": {"finite": [{"p": 2}]},
    "outputs": ["tate", "bound"],
    "expect": {
      "tate": {"2": -1},
      "bound": {"2": -1},
      "warnings_contain": ["index_warning"]
    }
  },
  {
    "id": "index_warning_overridden",
    "notes": "Same field with the true splitting supplied explicitly, silencing the heuristic flag.",
    "field": {"poly": [3, 0, 1]},
    "splitting_overrides": [{"p": 2, "factors": [{"e": 1, "f": 2}], "index_warning": false}],
    "group": {"builtin": "trivial"},
    "module": {"p": 2, "exponents": [1], "action": "trivial"},
    "S": {"finite": [{"p": 2}]},
    "outputs": ["tate", "bound"],
    "expect": {
      "tate": {"2": -1},
      "bound": {"2": -1},
      "warnings_empty": true
    }
  }
]
)json";

const std::map<std::string, const std::string*>& table() {
    static const std::map<std::string, const std::string*> t = {
        {"example1_sqrt-5", &k_example1_sqrt_5},
        {"example2_sqrt-120", &k_example2_sqrt_120},
        {"extras_defect", &k_extras_defect},
        {"extras_minkowski", &k_extras_minkowski},
        {"extras_reduction", &k_extras_reduction},
    };
    return t;
}

}  // namespace

std::vector<std::string> bundled_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : table()) names.push_back(name);
    return names;
}

const std::string& bundled_text(const std::string& name) {
    const auto& t = table();
    auto it = t.find(name);
    if (it == t.end()) throw SchemaError("unknown bundled scenario batch: " + name);
    return *it->second;
}

}  // namespace euchar
