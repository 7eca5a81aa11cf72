#pragma once

#include <optional>
#include <vector>

#include "knotcg/seifert.hpp"

namespace knotcg {

/// H_1 of the 2-fold branched cover, presented by V + V^t.
struct CoverHomology {
  IntMatrix presentation;
  std::vector<mpz_class> invariant_factors;  // only those > 1
  mpz_class order;
};

CoverHomology cover_homology(const SeifertMatrix& s);

/// Q/Z-valued linking form lambda = +(V + V^t)^{-1} mod 1.
///
/// `presentation_gram` pairs the presentation generators e_i. `generators`
/// (columns, in Z^n) is a minimal generating set of the cokernel with cyclic
/// orders `orders`, and `gram` is the form on it. When V + V^t is p times a
/// unimodular matrix the generators are the e_i themselves.
struct LinkingForm {
  RatMatrix presentation_gram;
  IntMatrix generators;
  std::vector<mpz_class> orders;
  RatMatrix gram;
  /// Set when every order equals the same prime p.
  std::optional<long> p_elementary;

  std::size_t rank() const { return orders.size(); }
};

LinkingForm linking_form(const SeifertMatrix& s);

/// The adjoint map H -> Hom(H, Q/Z) is an isomorphism; checked by the SNF of
/// [ (d_j * lambda(g_i, g_j))^t | diag(d) ].
bool is_nondegenerate(const LinkingForm& form);

/// All subgroups H with |H|^2 = |group| on which lambda vanishes, for a
/// p-elementary form. Odd rank yields an empty list; the trivial group yields
/// its zero subgroup. Throws NotPElementary or EnumerationTooLarge.
std::vector<ModPSubspace> metabolizers(const LinkingForm& form);

/// lambda(x, y) mod 1 on generator coordinates.
mpq_class linking_pairing(const LinkingForm& form, const ModPVector& x, const ModPVector& y);

/// A Z_p-valued character, given by its values on the form's generators.
struct Character {
  long p;
  ModPVector values;

  friend bool operator==(const Character&, const Character&) = default;
};

/// values . P == 0 mod p for a character given on presentation generators of
/// the presentation matrix P.
bool is_well_defined(const Character& chi, const IntMatrix& presentation);

/// The p^(n - dim H) characters whose value vectors lie in annihilator(H),
/// lexicographically ordered, starting with the zero character.
std::vector<Character> vanishing_characters(const ModPSubspace& h);

}  // namespace knotcg
