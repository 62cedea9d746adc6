#include "euchar/report.hpp"

#include <sstream>

namespace euchar {

namespace {

std::string card_text(const ordered_json& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (!first) os << " * ";
    first = false;
    os << it.key();
    const std::int64_t e = it.value().get<std::int64_t>();
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string vob_text(const ordered_json& v) {
  const std::string kind = v.at("kind").get<std::string>();
  if (kind == "exact") return card_text(v.at("value"));
  if (kind == "upper_bound") return "<= " + card_text(v.at("value"));
  return "in [" + card_text(v.at("lo")) + ", " + card_text(v.at("hi")) + "]";
}

std::string poly_text(const ordered_json& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const auto& c = coeffs[static_cast<std::size_t>(i)];
    std::string cs = c.is_string() ? c.get<std::string>()
                                   : std::to_string(c.get<std::int64_t>());
    if (cs == "0" && !(first && i == 0)) continue;
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      os << (neg ? "-" : "");
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string int_list(const ordered_json& arr) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) os << ", ";
    os << arr[i].get<std::int64_t>();
  }
  os << "]";
  return os.str();
}

void render_scenario(const ordered_json& r, std::ostringstream& os) {
  os << "scenario " << r.at("scenario_id").get<std::string>() << "\n";
  const auto& field = r.at("field");
  os << "  field: " << poly_text(field.at("poly")) << ", signature ("
     << field.at("signature")[0].get<int>() << ","
     << field.at("signature")[1].get<int>() << "), degree "
     << field.at("degree").get<int>() << "\n";
  const auto& s = r.at("S");
  os << "  S: ";
  if (s.at("finite").empty()) {
    os << "archimedean only";
  } else {
    os << "finite";
    for (const auto& e : s.at("finite")) {
      os << " " << e.at("p").get<std::int64_t>();
      if (!e.at("factors").empty()) os << int_list(e.at("factors"));
    }
  }
  os << ", gamma " << s.at("gamma").get<int>() << "\n";
  const auto& m = r.at("module_summary");
  os << "  module: p=" << m.at("p").get<std::int64_t>() << " exponents "
     << int_list(m.at("exponents")) << " over " << m.at("group").get<std::string>()
     << " (order " << m.at("group_order").get<int>() << "), "
     << (m.at("trivial_action").get<bool>() ? "trivial" : "nontrivial")
     << " action, cyclo " << m.at("cyclo").get<std::string>() << "\n";
  os << "  arch:";
  for (const auto& a : m.at("arch")) os << " " << a.get<std::string>();
  os << "\n";

  const auto& res = r.at("results");
  if (res.contains("tate_rhs")) {
    os << "  tate_rhs: " << card_text(res.at("tate_rhs")) << "\n";
  }
  if (res.contains("chi2_bound")) {
    os << "  chi2_bound: " << card_text(res.at("chi2_bound")) << "\n";
  }
  if (res.contains("chi2_exact")) {
    os << "  chi2_exact: " << card_text(res.at("chi2_exact")) << "  tight: "
       << (res.at("tight").get<bool>() ? "true" : "false") << "\n";
    const auto& c = res.at("cohomology");
    os << "  cohomology: h = [" << card_text(c.at("h")[0]) << ", "
       << card_text(c.at("h")[1]) << ", " << card_text(c.at("h")[2]) << "]";
    if (c.contains("dims")) os << ", dims " << int_list(c.at("dims"));
    if (c.contains("dims_fp_linear")) {
      os << ", fp-linear dims " << int_list(c.at("dims_fp_linear"))
         << (c.at("agree").get<bool>() ? " (engines agree)"
                                       : " (ENGINES DISAGREE)");
    }
    os << ", tate_h0 " << card_text(c.at("tate_h0")) << "\n";
  }
  if (res.contains("etale_chi")) {
    os << "  etale_chi: " << card_text(res.at("etale_chi")) << "\n";
  }
  if (res.contains("etale_cards")) {
    const auto& e = res.at("etale_cards");
    os << "  etale_cards: h0 = " << vob_text(e.at("h0")) << ", h1 = "
       << vob_text(e.at("h1")) << ", h2 = " << vob_text(e.at("h2"))
       << ", h3 = " << vob_text(e.at("h3")) << "\n";
  }
  if (res.contains("ledger")) {
    const auto& l = res.at("ledger");
    os << "  ledger: d=" << l.at("d").get<int>() << " sup_r="
       << l.at("sup_r").get<std::int64_t>() << " sup_r-d="
       << l.at("sup_minus_d").get<std::int64_t>() << " rhs="
       << l.at("rhs_bound").get<std::int64_t>() << " relations="
       << l.at("relations").get<std::int64_t>() << " violation="
       << (l.at("violation").get<bool>() ? "true" : "false") << "\n";
    for (const auto& row : l.at("rows")) {
      os << "    row " << row.at("id").get<std::string>() << ": dim "
         << row.at("dim_m").get<std::int64_t>() << ", xi "
         << row.at("xi").get<int>() << ", h1 "
         << row.at("dim_h1").get<std::int64_t>() << ", h2 "
         << row.at("dim_h2").get<std::int64_t>() << ", r "
         << row.at("r").get<std::int64_t>();
      if (row.contains("case_bound")) {
        os << ", r-d bound " << row.at("case_bound").get<std::int64_t>();
      }
      if (row.contains("claimed_dim_h2")) {
        os << ", claimed h2 " << row.at("claimed_dim_h2").get<std::int64_t>()
           << " (r " << row.at("r_claimed").get<std::int64_t>() << ")";
      }
      os << "\n";
    }
  }
  if (res.contains("defect")) {
    os << "  defect: " << res.at("defect").get<std::int64_t>() << "\n";
  }
  if (res.contains("whatif")) {
    const auto& w = res.at("whatif");
    os << "  whatif add " << int_list(w.at("added_primes")) << ": tate "
       << card_text(w.at("tate")) << ", epsilon " << card_text(w.at("epsilon"))
       << ", bound " << card_text(w.at("bound"));
    if (w.contains("exact")) {
      os << ", exact " << card_text(w.at("exact")) << ", tight "
         << (w.at("tight").get<bool>() ? "true" : "false");
    }
    os << "\n";
  }
  if (r.contains("claims_checked")) {
    for (const auto& c : r.at("claims_checked")) {
      os << "  claim " << c.at("name").get<std::string>() << ": claimed "
         << c.at("claimed").dump() << ", computed " << c.at("computed").dump()
         << (c.at("match").get<bool>() ? " (match)" : " (MISMATCH)") << "\n";
    }
  }
  const auto& warnings = r.at("warnings");
  if (warnings.empty()) {
    os << "  warnings: none\n";
  } else {
    os << "  warnings:\n";
    for (const auto& w : warnings) {
      os << "    " << w.get<std::string>() << "\n";
    }
  }
}

}  // namespace

ordered_json cardinality_json(const FormalCardinality& c) {
  ordered_json j = ordered_json::object();
  for (const auto& [p, e] : c.exponents()) j[std::to_string(p)] = e;
  return j;
}

ordered_json value_or_bound_json(const ValueOrBound& v) {
  ordered_json j = ordered_json::object();
  switch (v.kind()) {
    case ValueOrBound::Kind::Exact:
      j["kind"] = "exact";
      j["value"] = cardinality_json(v.value());
      break;
    case ValueOrBound::Kind::UpperBound:
      j["kind"] = "upper_bound";
      j["value"] = cardinality_json(v.value());
      break;
    case ValueOrBound::Kind::Interval:
      j["kind"] = "interval";
      j["lo"] = cardinality_json(v.lo());
      j["hi"] = cardinality_json(v.hi());
      break;
  }
  return j;
}

std::string render_text(const ordered_json& batch) {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : batch) {
    if (!first) os << "\n";
    first = false;
    render_scenario(r, os);
  }
  return os.str();
}

}  // namespace euchar
