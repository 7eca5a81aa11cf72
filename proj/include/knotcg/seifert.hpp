#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcg/linalg.hpp"
#include "knotcg/polynomial.hpp"

namespace knotcg {

/// Seifert matrix V of a knot: square, even size 2g, det(V - V^t) = 1. The
/// empty matrix is the unknot.
class SeifertMatrix {
 public:
  /// Validates the invariants; throws InvalidSeifert naming the one violated.
  explicit SeifertMatrix(IntMatrix v, std::string label = {});

  static SeifertMatrix unknot() { return SeifertMatrix(IntMatrix{}, "unknot"); }

  const IntMatrix& matrix() const { return v_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return v_.rows(); }
  std::size_t genus() const { return v_.rows() / 2; }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.v_ == b.v_;
  }

 private:
  IntMatrix v_;
  std::string label_;
};

using IntVector = std::vector<mpz_class>;

/// V + V^t, the presentation matrix of H_1 of the double branched cover.
IntMatrix symmetrize(const SeifertMatrix& s);
/// V - V^t.
IntMatrix antisymmetrize(const SeifertMatrix& s);

/// det(V - t V^t), with t-powers stripped and the leading coefficient positive.
IntPolynomial alexander_polynomial(const SeifertMatrix& s);

/// |det(V + V^t)|.
mpz_class knot_determinant(const SeifertMatrix& s);

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
/// -V^t, the Seifert matrix of the reversed mirror image.
SeifertMatrix mirror(const SeifertMatrix& s);

/// Index sets of the diagonal blocks of V under simultaneous row/column
/// permutation (connected components of the support of V + V^t and V - V^t).
std::vector<std::vector<std::size_t>> block_components(const IntMatrix& v);
IntMatrix principal_submatrix(const IntMatrix& v, const std::vector<std::size_t>& idx);

/// True iff the basis spans a rank-g direct summand of Z^{2g} on which V
/// vanishes. Throws DimensionMismatch on a malformed basis.
bool is_metabolizer(const SeifertMatrix& s, const std::vector<IntVector>& basis);

/// Bounded search for a metabolizer basis with entries in [-bound, bound].
/// A nullopt result does not prove that none exists. Throws GenusTooLarge
/// above genus 3.
std::optional<std::vector<IntVector>> search_metabolizer(const SeifertMatrix& s,
                                                         long bound);

}  // namespace knotcg
