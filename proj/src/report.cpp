#include "knotcg/report.hpp"

#include <cctype>

namespace knotcg::report {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::Schema, "schema violation: " + what);
}

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class integer_entry(const nlohmann::json& v, std::size_t i, std::size_t j) {
  const std::string where = "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<std::uint64_t>()));
    return mpz_class(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (!is_integer_text(s)) schema_error(where + " is not an integer");
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  }
  schema_error(where + " must be an integer");
}

Json fraction(const mpq_class& q) { return to_string(q); }

Json rational_matrix(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(fraction(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json integer_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json integer_list(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

Json vector_json(const ModPVector& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json subspace_basis(const ModPSubspace& h) {
  Json out = Json::array();
  for (const auto& v : h.basis()) out.push_back(vector_json(v));
  return out;
}

Json label_of(const SeifertMatrix& s) {
  return s.label().empty() ? Json(nullptr) : Json(s.label());
}

}  // namespace

Json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

SeifertMatrix parse_seifert(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "label" && key != "matrix") schema_error("unknown field '" + key + "'");
  std::string label;
  if (doc.contains("label") && !doc["label"].is_null()) {
    if (!doc["label"].is_string()) schema_error("'label' must be a string");
    label = doc["label"].get<std::string>();
  }
  if (!doc.contains("matrix")) schema_error("missing required field 'matrix'");
  const auto& m = doc["matrix"];
  if (!m.is_array()) schema_error("'matrix' must be an array of rows");
  const std::size_t rows = m.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!m[i].is_array()) schema_error("matrix row " + std::to_string(i) + " is not an array");
    if (i == 0) cols = m[i].size();
    if (m[i].size() != cols) schema_error("matrix rows have differing lengths");
  }
  IntMatrix v(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) v(i, j) = integer_entry(m[i][j], i, j);
  return SeifertMatrix(std::move(v), std::move(label));
}

Json to_json(const SeifertMatrix& s) {
  Json out;
  out["label"] = label_of(s);
  out["matrix"] = integer_matrix(s.matrix());
  return out;
}

mpq_class parse_rational(const std::string& text) {
  const auto bad = [&] {
    return Error(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  };
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) throw bad();
    const mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw bad();
    mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!is_integer_text(text)) throw bad();
    return mpq_class(mpz_class(text[0] == '+' ? text.substr(1) : text));
  }
  std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  if (frac.empty() || !is_integer_text(whole) || !is_integer_text(frac) ||
      frac[0] == '-' || frac[0] == '+')
    throw bad();
  const bool negative = whole[0] == '-';
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  mpz_class w(whole[0] == '+' ? whole.substr(1) : whole);
  mpq_class q(abs(w) * scale + mpz_class(frac), scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

Json analyze(const SeifertMatrix& s, long bound) {
  Json out;
  out["label"] = label_of(s);
  out["size"] = s.size();
  out["genus"] = s.genus();
  const IntPolynomial delta = alexander_polynomial(s);
  out["alexander_polynomial"] = {{"coefficients", integer_list(delta.coeffs())},
                                 {"text", to_string(delta)}};
  out["determinant"] = integer(knot_determinant(s));

  Json search;
  search["bound"] = bound;
  if (s.genus() > 3) {
    search["searched"] = false;
    search["reason"] = "search supports genus <= 3";
  } else {
    search["searched"] = true;
    const auto basis = search_metabolizer(s, bound);
    search["found"] = basis.has_value();
    if (basis) {
      Json rows = Json::array();
      for (const auto& v : *basis) rows.push_back(integer_list(v));
      search["basis"] = std::move(rows);
    } else {
      search["note"] = "no metabolizer with entries in [-bound, bound]; not a proof of absence";
    }
  }
  out["metabolizer_search"] = std::move(search);
  return out;
}

Json signature(const SeifertMatrix& s, const RationalAngle& a) {
  Json out;
  out["label"] = label_of(s);
  out["angle"] = a.str();
  if (is_singular_at(s, a)) {
    out["signature"] = nullptr;
    out["singular"] = true;
  } else {
    out["signature"] = tristram_levine(s, a).value;
    out["singular"] = false;
  }
  return out;
}

Json cover(const SeifertMatrix& s, bool with_metabolizers) {
  const CoverHomology h = cover_homology(s);
  const LinkingForm form = linking_form(s);
  Json out;
  out["label"] = label_of(s);
  out["invariant_factors"] = integer_list(h.invariant_factors);
  out["order"] = integer(h.order);
  out["presentation"] = integer_matrix(h.presentation);
  out["gram"] = rational_matrix(form.presentation_gram);

  Json gens = Json::array();
  for (std::size_t c = 0; c < form.generators.cols(); ++c) {
    std::vector<mpz_class> col;
    for (std::size_t i = 0; i < form.generators.rows(); ++i) col.push_back(form.generators(i, c));
    gens.push_back(integer_list(col));
  }
  out["linking_form"] = {{"generators", std::move(gens)},
                         {"orders", integer_list(form.orders)},
                         {"gram", rational_matrix(form.gram)},
                         {"p_elementary", form.p_elementary ? Json(*form.p_elementary)
                                                            : Json(nullptr)},
                         {"nondegenerate", is_nondegenerate(form)}};

  if (with_metabolizers) {
    Json mets = Json::array();
    for (const auto& h : metabolizers(form)) {
      Json chars = Json::array();
      for (const auto& chi : vanishing_characters(h)) chars.push_back(vector_json(chi.values));
      mets.push_back({{"basis", subspace_basis(h)}, {"vanishing_characters", std::move(chars)}});
    }
    out["metabolizer_count"] = mets.size();
    out["metabolizers"] = std::move(mets);
  }
  return out;
}

Json verification(const SeifertMatrix& companion, const VerificationReport& rep,
                  const mpq_class* suggested_for) {
  const std::string sigma = std::to_string(rep.sigma_one_third);
  Json out;
  Json comp;
  comp["label"] = label_of(companion);
  comp["genus"] = companion.genus();
  comp["sigma_1_3"] = rep.sigma_one_third;
  if (suggested_for) {
    comp["matrix"] = integer_matrix(companion.matrix());
    out["suggestion"] = {
        {"C", to_string(*suggested_for)},
        {"left_trefoil_count", suggested_trefoil_count(*suggested_for)},
        {"rule", "n = ceil(C/4) + 1 left-handed trefoils, sigma_1/3(J) = 2n > C/2"}};
  }
  out["companion"] = std::move(comp);
  out["cover"] = {{"invariant_factors", integer_list(rep.cover.invariant_factors)},
                  {"order", integer(rep.cover.order)}};
  out["linking_form"] = {{"gram", rational_matrix(rep.form.gram)},
                         {"p_elementary", rep.form.p_elementary ? Json(*rep.form.p_elementary)
                                                                : Json(nullptr)}};
  out["metabolizer_count"] = rep.metabolizers.size();

  Json mets = Json::array();
  for (const auto& w : rep.witnesses) {
    Json m;
    m["basis"] = subspace_basis(w.metabolizer);
    m["vanishing_character_count"] = w.vanishing_count;
    if (w.witness) {
      const std::string name = "χ_" + to_string(w.witness->values);
      m["witness"] = vector_json(w.witness->values);
      m["multiplier"] = w.multiplier;
      m["correction"] = w.correction;
      m["obstruction"] = "σ(K*, " + name + ") = σ(K, " + name + ") + 2*" +
                         std::to_string(w.multiplier) + "*σ_1/3(J) = σ(K, " + name +
                         ") + " + std::to_string(w.correction) + " >= " +
                         std::to_string(w.correction) + " - C";
      Json ineqs = Json::array();
      for (const auto& q : w.inequalities) {
        const std::string c = to_string(q.c);
        ineqs.push_back(
            {{"C", c},
             {"hypothesis", "σ_1/3(J) = " + sigma + " > C/2 = " + to_string(mpq_class(q.c / 2))},
             {"hypothesis_holds", q.hypothesis_holds},
             {"inequality", "2*" + std::to_string(w.multiplier) + "*" + sigma + " - " + c +
                                " = " + to_string(q.lower_bound) +
                                (q.positive ? " > 0" : " <= 0")},
             {"lower_bound", to_string(q.lower_bound)},
             {"positive", q.positive}});
      }
      m["inequalities"] = std::move(ineqs);
    } else {
      m["witness"] = nullptr;
      m["error"] = "no vanishing character with positive multiplier";
    }
    mets.push_back(std::move(m));
  }
  out["metabolizers"] = std::move(mets);

  const auto& arg = rep.annihilator_argument;
  Json degenerate = Json::array();
  for (const auto& h : arg.degenerate_metabolizers) degenerate.push_back(subspace_basis(h));
  out["annihilator_argument"] = {{"metabolizers_with_a_d_zero", std::move(degenerate)},
                                 {"annihilator_is_span_e2_e3", arg.annihilator_is_span_e2_e3},
                                 {"contains_chi_0110", arg.contains_chi_0110},
                                 {"multiplier_chi_0110", arg.multiplier_0110},
                                 {"holds", arg.holds()}};
  out["lemma_bar_superadditive"] = rep.lemma_holds;
  out["reduction_identity"] = rep.reduction_identity_holds;
  out["conclusion"] =
      "every metabolizer has a vanishing character chi with multiplier m >= 1, so "
      "σ(K*, χ) >= 2*m*σ_1/3(J) - C > 0 whenever σ_1/3(J) > C/2; K* is not slice";
  out["passed"] = rep.passed;
  return out;
}

}  // namespace knotcg::report
