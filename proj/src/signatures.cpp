#include "knotcg/signatures.hpp"

#include <map>
#include <numeric>

namespace knotcg {

RationalAngle::RationalAngle(long k, long p) {
  if (p <= 0 || k <= 0 || k >= p)
    throw Error(ErrorCode::InvalidArgument,
                "angle " + std::to_string(k) + "/" + std::to_string(p) +
                    " must satisfy 0 < k/p < 1");
  const long g = std::gcd(k, p);
  k_ = k / g;
  p_ = p / g;
}

RationalAngle RationalAngle::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "angle must be written k/p, got '" + text + "'");
  try {
    std::size_t used_k = 0, used_p = 0;
    const std::string ks = text.substr(0, slash), ps = text.substr(slash + 1);
    const long k = std::stol(ks, &used_k);
    const long p = std::stol(ps, &used_p);
    if (used_k != ks.size() || used_p != ps.size()) throw std::invalid_argument(text);
    return {k, p};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "malformed angle '" + text + "'");
  }
}

std::pair<long, std::size_t> symmetric_signature(const RatMatrix& input) {
  if (!input.square())
    throw Error(ErrorCode::DimensionMismatch, "signature of non-square matrix");
  RatMatrix m = input;
  const std::size_t n = m.rows();
  long sig = 0;
  std::size_t nullity = 0;

  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, piv) == 0) ++piv;
    if (piv == n) {
      // Zero diagonal: e_i <- e_i + e_j turns an off-diagonal 2m_ij into a pivot.
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) {
        nullity += n - k;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) m(bi, j) += m(bj, j);
      for (std::size_t i = 0; i < n; ++i) m(i, bi) += m(i, bj);
      piv = bi;
    }
    swap_index(k, piv);
    const mpq_class d = m(k, k);
    sig += sgn(d);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const mpq_class f = m(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) m(i, k) = m(k, i) = 0;
  }
  return {sig, nullity};
}

namespace {

std::string divisibility_witness(const IntPolynomial& delta, long p) {
  return "Φ_" + std::to_string(p) + " divides Δ(t) = " + to_string(delta);
}

bool cyclotomic_divides(const IntPolynomial& delta, long p) {
  return divmod(to_rational(delta), to_rational(cyclotomic(p))).second.is_zero();
}

// ((s+i)^p - (s-i)^p) / 2i; its roots are cot(pi k/p), k = 1..p-1.
RatPolynomial cotangent_polynomial(long p) {
  std::vector<mpq_class> c(static_cast<std::size_t>(p), 0);
  mpz_class binom;
  for (long j = 1; j <= p; j += 2) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p),
                 static_cast<unsigned long>(j));
    const long sign = ((j - 1) / 2) % 2 == 0 ? 1 : -1;
    c[static_cast<std::size_t>(p - j)] = mpq_class(binom * sign);
  }
  return RatPolynomial(std::move(c));
}

// [[S, sA], [-sA, S]], the real form of S - i s A.
IntMatrix realified(const IntMatrix& sym, const IntMatrix& anti, const mpz_class& num,
                    const mpz_class& den) {
  const std::size_t n = sym.rows();
  IntMatrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpz_class sa = num * anti(i, j);
      r(i, j) = r(n + i, n + j) = den * sym(i, j);
      r(i, n + j) = sa;
      r(n + i, j) = -sa;
    }
  return r;
}

long block_signature(const IntMatrix& v, const RationalAngle& a) {
  const IntMatrix vt = v.transpose();
  const IntMatrix sym = v + vt;
  const IntMatrix anti = v - vt;
  const std::size_t n2 = 2 * v.rows();

  std::vector<mpq_class> xs, ys;
  for (std::size_t k = 0; k <= n2; ++k) {
    const mpz_class s = static_cast<unsigned long>(k);
    xs.emplace_back(s);
    ys.emplace_back(determinant(realified(sym, anti, s, 1)));
  }
  const SturmSequence det_roots(squarefree_part(interpolate(xs, ys)));
  const SturmSequence cot_roots(cotangent_polynomial(a.p()));

  // Target is the k-th largest root; keep it inside (lo, hi].
  const mpq_class bound = cot_roots.root_bound();
  mpq_class lo = -bound, hi = bound;
  const std::size_t rank = static_cast<std::size_t>(a.k());
  for (int iter = 0; det_roots.count_roots(lo, hi) != 0; ++iter) {
    if (iter > 4096)
      throw Error(ErrorCode::Internal, "signature sample isolation did not converge");
    mpq_class mid = (lo + hi) / 2;
    if (cot_roots.count_roots(mid, bound) >= rank)
      lo = mid;
    else
      hi = mid;
  }

  const auto [sig, nullity] =
      symmetric_signature(to_rational(realified(sym, anti, hi.get_num(), hi.get_den())));
  if (nullity != 0 || sig % 2 != 0)
    throw Error(ErrorCode::Internal, "sample point landed on a degenerate form");
  return sig / 2;
}

}  // namespace

bool is_singular_at(const SeifertMatrix& s, const RationalAngle& a) {
  for (const auto& block : block_components(s.matrix()))
    if (cyclotomic_divides(
            alexander_polynomial(SeifertMatrix(principal_submatrix(s.matrix(), block))),
            a.p()))
      return true;
  return false;
}

SignatureResult tristram_levine(const SeifertMatrix& s, const RationalAngle& a) {
  std::map<std::vector<mpz_class>, long> memo;
  long total = 0;
  for (const auto& block : block_components(s.matrix())) {
    const IntMatrix v = principal_submatrix(s.matrix(), block);
    auto key = v.entries();
    key.emplace_back(static_cast<unsigned long>(v.rows()));
    auto it = memo.find(key);
    if (it == memo.end()) {
      const IntPolynomial delta = alexander_polynomial(SeifertMatrix(v));
      if (cyclotomic_divides(delta, a.p()))
        throw Error(ErrorCode::DegenerateForm,
                    "form is degenerate at " + a.str() + ": " +
                        divisibility_witness(alexander_polynomial(s), a.p()));
      it = memo.emplace(std::move(key), block_signature(v, a)).first;
    }
    total += it->second;
  }
  return {total, a, true};
}

long signature_correction(const std::vector<Companion>& companions, long p) {
  long total = 0;
  for (const auto& c : companions) {
    if (c.character_value < 0 || c.character_value >= p)
      throw Error(ErrorCode::InvalidArgument,
                  "character value " + std::to_string(c.character_value) +
                      " outside 0.." + std::to_string(p - 1));
    if (c.character_value == 0) continue;
    total += tristram_levine(c.knot, RationalAngle(c.character_value, p)).value;
  }
  return 2 * total;
}

}  // namespace knotcg
