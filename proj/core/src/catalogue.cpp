#include "dzv/catalogue.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "dzv/mzv.hpp"
#include "dzv/period_spaces.hpp"

namespace dzv {

using nlohmann::ordered_json;

namespace {

std::string kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::zeta: return "zeta";
    case ValueKind::zeta_half: return "zeta-half";
    case ValueKind::zeta_hat: return "zeta-hat";
    case ValueKind::t_tilde: return "t-tilde";
    case ValueKind::j_value: return "j";
    case ValueKind::colored: return "colored";
  }
  throw std::logic_error("kind_name");
}

ValueKind parse_kind(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ValueKind::colored); ++i)
    if (kind_name(static_cast<ValueKind>(i)) == s) return static_cast<ValueKind>(i);
  throw std::invalid_argument("unknown value kind '" + s + "'");
}

void require_even(int k, RelationFamily f) {
  if (k % 2 != 0)
    throw std::invalid_argument("family '" + family_name(f) + "' needs an even weight, got " +
                                std::to_string(k));
}

CatalogueEntry make_entry(RelationFamily f, RelationVector rel,
                          const std::vector<Rational>& src, const std::string& tag) {
  CatalogueEntry e;
  e.family = f;
  e.relation = std::move(rel);
  e.relation.status = family_status(f);
  e.source_polynomial = src;
  e.space_tag = tag;
  return e;
}

}  // namespace

std::vector<CatalogueEntry> generate_family(RelationFamily f, int k, int level, long digits) {
  std::vector<CatalogueEntry> out;
  const int w = k - 2;
  switch (f) {
    case RelationFamily::gkz:
      require_even(k, f);
      for (const auto& b : basis_W(w, +1).basis)
        out.push_back(make_entry(f, gkz(b), b.coeffs(), "W+"));
      break;
    case RelationFamily::ma_odd:
      require_even(k, f);
      for (const auto& b : basis_W(w, -1).basis)
        out.push_back(make_entry(f, ma_odd(b).normalize(), b.coeffs(), "W-"));
      break;
    case RelationFamily::ma_even:
      require_even(k, f);
      for (const auto& b : basis_W(w, +1).basis) {
        RelationVector r = ma_even(b);
        if (r.terms_zero()) continue;
        out.push_back(make_entry(f, r.normalize(), b.coeffs(), "W+"));
      }
      break;
    case RelationFamily::cuspidal_half_a:
      require_even(k, f);
      for (const auto& b : cuspidal_subspace(w).basis)
        out.push_back(make_entry(f, cuspidal_half(b, 'a').normalize(), b.coeffs(), "W+cusp"));
      break;
    case RelationFamily::cuspidal_half_b:
      require_even(k, f);
      for (const auto& b : basis_W(w, -1).basis)
        out.push_back(make_entry(f, cuspidal_half(b, 'b').normalize(), b.coeffs(), "W-"));
      break;
    case RelationFamily::cuspidal_half_c:
      require_even(k, f);
      for (const auto& b : basis_W(w, +1).basis) {
        RelationVector r = cuspidal_half(b, 'c');
        if (r.terms_zero()) continue;
        out.push_back(make_entry(f, r.normalize(), b.coeffs(), "W+"));
      }
      break;
    case RelationFamily::hirose_i:
      require_even(k, f);
      for (const auto& b : basis_gammaA_minus(w).basis)
        out.push_back(make_entry(f, hirose(b, 1).normalize(), b.coeffs(), "W-gammaA"));
      break;
    case RelationFamily::hirose_ii:
      require_even(k, f);
      for (const auto& b : basis_W(w, +1).basis)
        out.push_back(make_entry(f, hirose(b, 2).normalize(), b.coeffs(), "W+"));
      break;
    case RelationFamily::hirose_iii:
      require_even(k, f);
      for (const auto& b : basis_W(w, +1).basis) {
        RelationVector r = hirose(b, 3);
        if (r.terms_zero()) continue;
        out.push_back(make_entry(f, r.normalize(), b.coeffs(), "W+"));
      }
      break;
    case RelationFamily::hirose_iv:
      require_even(k, f);
      for (const auto& b : basis_W(w, -1).basis)
        out.push_back(make_entry(f, hirose(b, 4).normalize(), b.coeffs(), "W-"));
      break;
    case RelationFamily::bachmann:
      require_even(k, f);
      for (const auto& b : basis_W(w, +1).basis)
        out.push_back(make_entry(f, bachmann(b).normalize(), b.coeffs(), "W+"));
      break;
    case RelationFamily::kaneko_tsumura:
      require_even(k, f);
      if (k < 6) throw std::invalid_argument("kt needs weight >= 6");
      for (const auto& b : span_W4plus(w, digits).basis) {
        KtOutput r = kaneko_tsumura(b, digits);
        if (r.relation.terms_zero()) continue;
        out.push_back(make_entry(f, r.relation.normalize(), b.coeffs(), "W4+"));
      }
      break;
    case RelationFamily::colored: {
      require_even(k, f);
      for (const auto& F : basis_levelN(w, level, +1).coset_basis) {
        ColoredOutput c = colored_deriver(F);
        RelationVector diff = c.lhs;
        for (const auto& [s, co] : c.rhs.terms) diff.add(s, -co);
        diff.single_zeta = Rational(0);
        if (diff.terms.empty()) continue;
        std::vector<Rational> src;
        for (const auto& p : F.values)
          for (const auto& co : p.coeffs()) src.push_back(co);
        out.push_back(make_entry(f, diff, src, "levelN+"));
      }
      break;
    }
    case RelationFamily::ck_kernel: {
      require_even(k, f);
      CkMatrices ck = ck_matrices(k);
      for (const auto& v : ck.left_kernel) {
        RelationVector r;
        r.weight = k;
        r.kind = ValueKind::t_tilde;
        r.single_zeta = std::nullopt;  // recovered numerically
        for (int i = 0; i < k - 1; ++i)
          if (v[i] != 0) r.add(sym_rs(i + 1, k - i - 1), v[i]);
        out.push_back(make_entry(f, r.normalize(), {}, "ckernel"));
      }
      break;
    }
    case RelationFamily::ttilde_weighted_sum:
      require_even(k, f);
      out.push_back(make_entry(f, ttilde_weighted_sum(k), {}, "weighted-sum"));
      break;
    case RelationFamily::restricted_sum:
      require_even(k, f);
      for (auto& r : restricted_sum(k)) out.push_back(make_entry(f, std::move(r), {}, "sum"));
      break;
  }
  return out;
}

void CatalogueDocument::sort_entries() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CatalogueEntry& a, const CatalogueEntry& b) {
                     if (a.relation.weight != b.relation.weight)
                       return a.relation.weight < b.relation.weight;
                     if (a.family != b.family) return a.family < b.family;
                     return a.relation.coefficients() < b.relation.coefficients();
                   });
}

namespace {

ordered_json symbol_json(const DzSymbol& s, ValueKind kind) {
  ordered_json j;
  if (kind == ValueKind::j_value) {
    j["indices"] = {s.i1, s.i2, s.i3};
  } else {
    j["indices"] = s.i2 == 0 && kind == ValueKind::colored ? ordered_json::array({s.i1})
                                                           : ordered_json::array({s.i1, s.i2});
  }
  if (kind == ValueKind::colored) {
    if (s.i2 == 0)
      j["colors"] = {s.c1};
    else
      j["colors"] = {s.c1, s.c2};
  }
  return j;
}

DzSymbol symbol_from_json(const ordered_json& j, ValueKind kind) {
  DzSymbol s;
  auto idx = j.at("indices");
  s.i1 = idx.at(0).get<int>();
  if (idx.size() > 1) s.i2 = idx.at(1).get<int>();
  if (idx.size() > 2) s.i3 = idx.at(2).get<int>();
  if (kind == ValueKind::colored) {
    auto col = j.at("colors");
    s.c1 = col.at(0).get<int>();
    if (col.size() > 1) s.c2 = col.at(1).get<int>();
  } else if (kind == ValueKind::j_value && idx.size() < 3) {
    throw std::invalid_argument("J symbol needs three indices");
  }
  return s;
}

}  // namespace

std::string to_json(const CatalogueDocument& doc, bool pretty) {
  ordered_json root;
  root["schema_version"] = doc.schema_version;
  if (!doc.generated_at.empty()) root["generated_at"] = doc.generated_at;
  root["entries"] = ordered_json::array();
  for (const auto& e : doc.entries) {
    ordered_json je;
    je["family"] = family_name(e.family);
    je["status"] = e.relation.status == RelStatus::proven ? "proven" : "conjectural";
    je["weight"] = e.relation.weight;
    je["level"] = e.relation.level;
    je["value_kind"] = kind_name(e.relation.kind);
    je["coefficients"] = ordered_json::array();
    for (const auto& [s, c] : e.relation.terms) {
      ordered_json jc;
      jc["symbol"] = symbol_json(s, e.relation.kind);
      jc["value"] = to_fraction_string(c);
      je["coefficients"].push_back(jc);
    }
    je["single_zeta"] =
        e.relation.single_zeta ? to_fraction_string(*e.relation.single_zeta) : "symbolic";
    if (e.single_reconstructed) je["single_zeta_reconstructed"] = true;
    if (e.verification) {
      je["verification"] = {{"digits", e.verification->digits},
                            {"residual", e.verification->residual},
                            {"pass", e.verification->pass}};
    } else {
      je["verification"] = nullptr;
    }
    ordered_json prov;
    prov["source_polynomial"] = ordered_json::array();
    for (const auto& c : e.source_polynomial)
      prov["source_polynomial"].push_back(to_fraction_string(c));
    prov["space_tag"] = e.space_tag;
    je["provenance"] = prov;
    root["entries"].push_back(je);
  }
  return pretty ? root.dump(2) + "\n" : root.dump();
}

CatalogueDocument from_json(const std::string& text) {
  ordered_json root = ordered_json::parse(text);
  CatalogueDocument doc;
  doc.schema_version = root.at("schema_version").get<int>();
  if (doc.schema_version != 1)
    throw std::invalid_argument("unsupported catalogue schema version " +
                                std::to_string(doc.schema_version));
  if (root.contains("generated_at")) doc.generated_at = root["generated_at"].get<std::string>();
  for (const auto& je : root.at("entries")) {
    CatalogueEntry e;
    e.family = parse_family(je.at("family").get<std::string>());
    e.relation.kind = parse_kind(je.at("value_kind").get<std::string>());
    e.relation.status =
        je.at("status").get<std::string>() == "proven" ? RelStatus::proven : RelStatus::conjectural;
    e.relation.weight = je.at("weight").get<int>();
    e.relation.level = je.at("level").get<int>();
    for (const auto& jc : je.at("coefficients"))
      e.relation.add(symbol_from_json(jc.at("symbol"), e.relation.kind),
                     parse_rational(jc.at("value").get<std::string>()));
    std::string sz = je.at("single_zeta").get<std::string>();
    if (sz == "symbolic")
      e.relation.single_zeta = std::nullopt;
    else
      e.relation.single_zeta = parse_rational(sz);
    if (je.contains("single_zeta_reconstructed"))
      e.single_reconstructed = je["single_zeta_reconstructed"].get<bool>();
    if (je.contains("verification") && !je["verification"].is_null()) {
      CatalogueEntry::Verification v;
      v.digits = je["verification"].at("digits").get<long>();
      v.residual = je["verification"].at("residual").get<std::string>();
      v.pass = je["verification"].at("pass").get<bool>();
      e.verification = v;
    }
    if (je.contains("provenance")) {
      for (const auto& c : je["provenance"].at("source_polynomial"))
        e.source_polynomial.push_back(parse_rational(c.get<std::string>()));
      e.space_tag = je["provenance"].at("space_tag").get<std::string>();
    }
    doc.entries.push_back(std::move(e));
  }
  return doc;
}

std::string coefficients_csv(const CatalogueDocument& doc) {
  std::ostringstream os;
  os << "family,status,weight,level,value_kind,symbol,coefficient\n";
  for (const auto& e : doc.entries) {
    for (const auto& [s, c] : e.relation.terms) {
      os << family_name(e.family) << ','
         << (e.relation.status == RelStatus::proven ? "proven" : "conjectural") << ','
         << e.relation.weight << ',' << e.relation.level << ',' << kind_name(e.relation.kind)
         << ',' << symbol_name(s, e.relation.kind) << ',' << to_fraction_string(c) << '\n';
    }
    os << family_name(e.family) << ','
       << (e.relation.status == RelStatus::proven ? "proven" : "conjectural") << ','
       << e.relation.weight << ',' << e.relation.level << ',' << kind_name(e.relation.kind)
       << ",single,"
       << (e.relation.single_zeta ? to_fraction_string(*e.relation.single_zeta) : "symbolic")
       << '\n';
  }
  return os.str();
}

VerifySummary verify_catalogue(CatalogueDocument& doc, long digits, double eps,
                               const Integer& maxden) {
  Evaluator ev(digits);
  VerifySummary sum;
  for (auto& e : doc.entries) {
    if (!e.relation.single_zeta) {
      auto rec = ev.reconstruct_single(e.relation, maxden);
      if (rec) {
        e.relation.single_zeta = -*rec;
        e.single_reconstructed = true;
      } else {
        CatalogueEntry::Verification v{digits, "reconstruction-failed", false};
        e.verification = v;
        ++sum.checked;
        if (e.relation.status == RelStatus::proven)
          ++sum.proven_failures;
        else
          ++sum.conjectural_failures;
        continue;
      }
    }
    VerifyReport rep = ev.verify(e.relation, eps);
    CatalogueEntry::Verification v;
    v.digits = digits;
    v.residual = rep.residual.abs_upper().to_string(8);
    v.pass = rep.pass;
    e.verification = v;
    ++sum.checked;
    if (!rep.pass) {
      if (e.relation.status == RelStatus::proven)
        ++sum.proven_failures;
      else
        ++sum.conjectural_failures;
    }
  }
  return sum;
}

}  // namespace dzv
