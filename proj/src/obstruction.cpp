#include "knotcg/obstruction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "knotcg/corpus.hpp"

namespace knotcg {

int bar(long x, long p) { return mod_p(x, p) != 0 ? 1 : 0; }

int multiplier(const Character& chi) {
  if (chi.p != 3 || chi.values.size() != 4)
    throw Error(ErrorCode::DimensionMismatch,
                "multiplier is defined for Z_3 characters of rank 4");
  const auto& v = chi.values;
  const long a = v[0], b = v[1], c = v[2], d = v[3];
  return bar(a, 3) + bar(b, 3) + bar(c, 3) + bar(d, 3) - bar(b + c, 3);
}

void validate(const SatelliteSpec& spec, std::size_t rank) {
  std::set<std::string> seen;
  for (const auto& curve : spec.curves) {
    if (!seen.insert(curve.label).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate curve label " + curve.label);
    if (curve.functional.size() != rank)
      throw Error(ErrorCode::DimensionMismatch,
                  "functional of " + curve.label + " has length " +
                      std::to_string(curve.functional.size()) + ", expected " +
                      std::to_string(rank));
  }
}

SatelliteSpec paper_satellite_spec(const SeifertMatrix& companion) {
  const SeifertMatrix minus = mirror(companion);
  return {corpus::paper_knot(),
          3,
          {{"L1", {1, 0, 0, 0}, companion},
           {"L2", {0, 1, 0, 0}, companion},
           {"L3", {0, 0, 1, 0}, companion},
           {"L4", {0, 0, 0, 1}, companion},
           {"L5", {0, 1, 1, 0}, minus}}};
}

namespace {

long apply(const ModPVector& functional, const ModPVector& values, long p) {
  long acc = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    acc = mod_p(acc + functional[i] * values[i], p);
  return acc;
}

std::string character_name(const Character& chi) {
  return "χ_" + to_string(chi.values);
}

// sigma_{k/p} per curve, filled lazily.
class CorrectionTable {
 public:
  explicit CorrectionTable(const SatelliteSpec& spec) : spec_(spec) {}

  SymbolicObstruction evaluate(const Character& chi) {
    if (chi.p != spec_.p)
      throw Error(ErrorCode::InvalidArgument, "character modulus differs from the satellite modulus");
    SymbolicObstruction out;
    out.base_term = "σ(K, " + character_name(chi) + ")";
    out.bound = "|σ(K, " + character_name(chi) + ")| <= C";
    long total = 0;
    for (std::size_t i = 0; i < spec_.curves.size(); ++i) {
      const auto& curve = spec_.curves[i];
      const long k = apply(curve.functional, chi.values, spec_.p);
      out.witness_angle_values.emplace_back(curve.label, k);
      if (k == 0) continue;
      auto key = std::make_pair(i, k);
      auto it = cache_.find(key);
      if (it == cache_.end())
        it = cache_
                 .emplace(key, signature_correction({{curve.companion, k}}, spec_.p))
                 .first;
      total += it->second;
    }
    out.correction = total;
    return out;
  }

 private:
  const SatelliteSpec& spec_;
  std::map<std::pair<std::size_t, long>, long> cache_;
};

std::vector<Character> all_characters(long p, std::size_t rank) {
  std::vector<Character> out;
  for (auto& v : ModPSubspace::full(p, rank).elements()) out.push_back({p, std::move(v)});
  return out;
}

}  // namespace

SymbolicObstruction satellite_obstruction(const SatelliteSpec& spec, const Character& chi) {
  validate(spec, chi.values.size());
  return CorrectionTable(spec).evaluate(chi);
}

bool reduction_identity_check(const SatelliteSpec& spec, const SeifertMatrix& companion) {
  validate(spec, 4);
  const long sigma = tristram_levine(companion, RationalAngle(1, 3)).value;
  CorrectionTable table(spec);
  for (const auto& chi : all_characters(spec.p, 4))
    if (table.evaluate(chi).correction != 2 * multiplier(chi) * sigma) return false;
  return true;
}

bool lemma_bar_superadditive() {
  for (long b = 0; b < 3; ++b)
    for (long c = 0; c < 3; ++c)
      if (bar(b, 3) + bar(c, 3) - bar(b + c, 3) < 0) return false;
  return true;
}

namespace {

// Prime-power decomposition of a finite abelian group given by invariant factors.
std::vector<mpz_class> elementary_divisors(const std::vector<mpz_class>& factors) {
  std::vector<mpz_class> out;
  for (mpz_class d : factors) {
    for (mpz_class q = 2; q * q <= d; ++q) {
      if (d % q != 0) continue;
      mpz_class pw = 1;
      while (d % q == 0) {
        d /= q;
        pw *= q;
      }
      out.push_back(pw);
    }
    if (d > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatMatrix rational_block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

std::size_t character_space_dim(const IntMatrix& presentation, long p) {
  std::vector<ModPVector> rows;
  for (std::size_t i = 0; i < presentation.rows(); ++i) {
    ModPVector r;
    for (std::size_t j = 0; j < presentation.cols(); ++j)
      r.push_back(mod_p(presentation(i, j), p));
    rows.push_back(std::move(r));
  }
  return presentation.rows() - rref_mod_p(std::move(rows), p).size();
}

}  // namespace

AdditivityReport additivity_check(const SeifertMatrix& a, const SeifertMatrix& b,
                                  const RationalAngle& angle) {
  const SeifertMatrix sum = connected_sum(a, b);
  AdditivityReport rep;

  const auto ca = cover_homology(a), cb = cover_homology(b), cs = cover_homology(sum);
  auto joined = elementary_divisors(ca.invariant_factors);
  for (const auto& d : elementary_divisors(cb.invariant_factors)) joined.push_back(d);
  std::sort(joined.begin(), joined.end());
  rep.cover_splits = cs.order == ca.order * cb.order &&
                     elementary_divisors(cs.invariant_factors) == joined;

  rep.linking_form_splits =
      linking_form(sum).presentation_gram ==
      rational_block_diagonal(linking_form(a).presentation_gram,
                              linking_form(b).presentation_gram);

  rep.characters_split = true;
  for (const auto& q : elementary_divisors(cs.invariant_factors)) {
    mpz_class prime = 2;
    while (q % prime != 0) ++prime;
    const long p = prime.get_si();
    rep.characters_split = rep.characters_split &&
                           character_space_dim(cs.presentation, p) ==
                               character_space_dim(ca.presentation, p) +
                                   character_space_dim(cb.presentation, p);
  }

  rep.signature_adds = tristram_levine(sum, angle).value ==
                       tristram_levine(a, angle).value + tristram_levine(b, angle).value;
  return rep;
}

VerificationReport verify_paper_example(const SeifertMatrix& companion,
                                        const std::vector<mpq_class>& sample_bounds) {
  VerificationReport rep;
  rep.sample_bounds = sample_bounds;
  rep.sigma_one_third = tristram_levine(companion, RationalAngle(1, 3)).value;

  const SeifertMatrix k = corpus::paper_knot();
  rep.cover = cover_homology(k);
  rep.form = linking_form(k);
  rep.metabolizers = metabolizers(rep.form);

  const SatelliteSpec spec = paper_satellite_spec(companion);
  validate(spec, rep.form.rank());
  CorrectionTable table(spec);

  const ModPSubspace span_e2_e3(3, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  const Character chi_0110{3, {0, 1, 1, 0}};

  rep.annihilator_argument.multiplier_0110 = multiplier(chi_0110);
  bool all_witnessed = true;
  for (const auto& h : rep.metabolizers) {
    MetabolizerWitness w;
    w.metabolizer = h;
    const auto chars = vanishing_characters(h);
    w.vanishing_count = chars.size();

    // Characters arrive in lexicographic order, so the first maximum wins ties.
    bool only_ad_zero = true;
    for (const auto& chi : chars) {
      const int m = multiplier(chi);
      if (m > w.multiplier) {
        w.multiplier = m;
        w.witness = chi;
      }
      only_ad_zero = only_ad_zero && chi.values[0] == 0 && chi.values[3] == 0;
    }

    if (only_ad_zero) {
      auto& arg = rep.annihilator_argument;
      arg.degenerate_metabolizers.push_back(h);
      const ModPSubspace ann = annihilator(h);
      arg.annihilator_is_span_e2_e3 = arg.annihilator_is_span_e2_e3 && ann == span_e2_e3;
      arg.contains_chi_0110 = arg.contains_chi_0110 && ann.contains(chi_0110.values);
    }

    if (w.witness) {
      w.correction = table.evaluate(*w.witness).correction;
      for (const auto& c : sample_bounds) {
        WitnessInequality ineq;
        ineq.c = c;
        ineq.hypothesis_holds = mpq_class(rep.sigma_one_third) > c / 2;
        ineq.lower_bound = mpq_class(w.correction) - c;
        ineq.positive = ineq.lower_bound > 0;
        if (ineq.hypothesis_holds && !ineq.positive) all_witnessed = false;
        w.inequalities.push_back(ineq);
      }
    } else {
      all_witnessed = false;
    }
    rep.witnesses.push_back(std::move(w));
  }

  rep.lemma_holds = lemma_bar_superadditive();
  rep.reduction_identity_holds = reduction_identity_check(spec, companion);
  const std::vector<mpz_class> z3_4(4, mpz_class(3));
  rep.passed = all_witnessed && rep.lemma_holds && rep.reduction_identity_holds &&
               rep.annihilator_argument.holds() && rep.cover.invariant_factors == z3_4 &&
               !rep.metabolizers.empty();
  return rep;
}

long suggested_trefoil_count(const mpq_class& c) {
  if (c < 0) throw Error(ErrorCode::InvalidArgument, "bound C must be nonnegative");
  mpz_class q;
  const mpz_class den = c.get_den() * 4;
  mpz_cdiv_q(q.get_mpz_t(), c.get_num_mpz_t(), den.get_mpz_t());
  if (!q.fits_slong_p() || q > 100000)
    throw Error(ErrorCode::InvalidArgument, "bound C is too large to realize");
  return q.get_si() + 1;
}

SeifertMatrix suggest_companion(const mpq_class& c) {
  const long n = suggested_trefoil_count(c);
  return corpus::repeated_sum(corpus::left_trefoil(), static_cast<std::size_t>(n),
                              "left-trefoil^#" + std::to_string(n));
}

}  // namespace knotcg
