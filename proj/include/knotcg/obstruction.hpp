#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcg/branched_cover.hpp"
#include "knotcg/signatures.hpp"

namespace knotcg {

/// 1 iff x != 0 in Z_p.
int bar(long x, long p);

/// a' + b' + c' + d' - (b+c)' for a Z_3 character (a,b,c,d), x' = bar(x, 3).
/// Throws DimensionMismatch unless p = 3 and there are four values.
int multiplier(const Character& chi);

/// An infection curve: chi(L~) = functional . chi, tied into `companion`.
struct SatelliteCurve {
  std::string label;
  ModPVector functional;
  SeifertMatrix companion;
};

struct SatelliteSpec {
  SeifertMatrix base;
  long p;
  std::vector<SatelliteCurve> curves;
};

/// Validates label uniqueness and functional lengths against `rank`.
void validate(const SatelliteSpec& spec, std::size_t rank);

/// The five-curve infection of the genus-two knot K with Seifert form
/// [[0,1],[2,0]] + [[0,1],[2,0]]: L1..L4 carry J with functionals a, b, c, d,
/// and L5 carries -J with functional b + c.
SatelliteSpec paper_satellite_spec(const SeifertMatrix& companion);

/// sigma(K*, chi) = base_term + correction, where base_term is the unknown
/// sigma(K, chi) known only through |base_term| <= C.
struct SymbolicObstruction {
  std::string base_term;
  std::string bound;
  long correction = 0;
  std::vector<std::pair<std::string, long>> witness_angle_values;
};

SymbolicObstruction satellite_obstruction(const SatelliteSpec& spec, const Character& chi);

/// Over all p^rank characters, correction == 2 * multiplier * sigma_{1/3}(J).
bool reduction_identity_check(const SatelliteSpec& spec, const SeifertMatrix& companion);

/// b' + c' - (b+c)' >= 0 for all (b, c) in Z_3^2.
bool lemma_bar_superadditive();

struct AdditivityReport {
  bool cover_splits = false;
  bool linking_form_splits = false;
  bool characters_split = false;
  bool signature_adds = false;
  bool holds() const {
    return cover_splits && linking_form_splits && characters_split && signature_adds;
  }
};

/// Cover homology, linking form, character space and the Tristram-Levine
/// signature of S1 # S2 all split as direct sums.
AdditivityReport additivity_check(const SeifertMatrix& a, const SeifertMatrix& b,
                                  const RationalAngle& angle);

struct WitnessInequality {
  mpq_class c;
  bool hypothesis_holds = false;  // sigma_{1/3}(J) > C/2
  mpq_class lower_bound;          // 2 m sigma_{1/3}(J) - C
  bool positive = false;
};

struct MetabolizerWitness {
  ModPSubspace metabolizer;
  std::size_t vanishing_count = 0;
  std::optional<Character> witness;
  int multiplier = 0;
  long correction = 0;
  std::vector<WitnessInequality> inequalities;
};

struct AnnihilatorArgument {
  /// Metabolizers all of whose vanishing characters have a = d = 0.
  std::vector<ModPSubspace> degenerate_metabolizers;
  bool annihilator_is_span_e2_e3 = true;
  bool contains_chi_0110 = true;
  int multiplier_0110 = 0;
  bool holds() const {
    return annihilator_is_span_e2_e3 && contains_chi_0110 && multiplier_0110 == 1;
  }
};

struct VerificationReport {
  CoverHomology cover;
  LinkingForm form;
  std::vector<ModPSubspace> metabolizers;
  std::vector<MetabolizerWitness> witnesses;
  AnnihilatorArgument annihilator_argument;
  bool lemma_holds = false;
  bool reduction_identity_holds = false;
  long sigma_one_third = 0;
  std::vector<mpq_class> sample_bounds;
  bool passed = false;
};

/// Runs the whole argument for the companion J. Every metabolizer of the
/// linking form must receive a witness character with multiplier >= 1; the
/// report's `passed` is false otherwise. Throws DegenerateForm when J is
/// singular at 1/3.
VerificationReport verify_paper_example(const SeifertMatrix& companion,
                                        const std::vector<mpq_class>& sample_bounds = {});

/// Number of left-handed trefoils n = ceil(C/4) + 1, so sigma_{1/3} = 2n > C/2.
long suggested_trefoil_count(const mpq_class& c);
SeifertMatrix suggest_companion(const mpq_class& c);

}  // namespace knotcg
