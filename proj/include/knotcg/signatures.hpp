#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcg/seifert.hpp"

namespace knotcg {

/// Reduced fraction k/p with 0 < k < p, standing for omega = exp(2 pi i k/p).
class RationalAngle {
 public:
  /// Reduces k/p; throws InvalidArgument unless 0 < k/p < 1.
  RationalAngle(long k, long p);
  /// Parses "k/p".
  static RationalAngle parse(const std::string& text);

  long k() const { return k_; }
  long p() const { return p_; }
  /// (p - k)/p, the complex conjugate root.
  RationalAngle conjugate() const { return {p_ - k_, p_}; }
  std::string str() const { return std::to_string(k_) + "/" + std::to_string(p_); }

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  long k_;
  long p_;
};

struct SignatureResult {
  long value = 0;
  RationalAngle angle{1, 2};
  bool nondegenerate = true;
};

/// Exact signature of a rational symmetric matrix by congruence
/// diagonalization: (#positive - #negative, nullity).
std::pair<long, std::size_t> symmetric_signature(const RatMatrix& m);

/// True iff Phi_p divides the Alexander polynomial, i.e. the hermitian form
/// (1 - w)V + (1 - conj w)V^t is singular at w = exp(2 pi i k/p).
bool is_singular_at(const SeifertMatrix& s, const RationalAngle& a);

/// Tristram-Levine signature. Throws DegenerateForm at singular angles.
///
/// The form is rescaled to S - i*cot(pi k/p)*A with S = V + V^t, A = V - V^t.
/// Its signature is locally constant in the real parameter s = cot(pi k/p)
/// away from the real roots of det(S - i s A). The target s is isolated as a
/// root of ((s+i)^p - (s-i)^p)/2i by Sturm bisection until the interval is
/// free of roots of the determinant; the signature is then evaluated exactly
/// at a rational point of that interval. No floating point is involved.
SignatureResult tristram_levine(const SeifertMatrix& s, const RationalAngle& a);

struct Companion {
  SeifertMatrix knot;
  long character_value;
};

/// 2 * sum_i sigma_{k_i/p}(J_i), with sigma_{0/p} = 0.
long signature_correction(const std::vector<Companion>& companions, long p);

}  // namespace knotcg
