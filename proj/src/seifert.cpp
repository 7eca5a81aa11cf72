#include "knotcg/seifert.hpp"

#include <functional>
#include <numeric>

namespace knotcg {

SeifertMatrix::SeifertMatrix(IntMatrix v, std::string label)
    : v_(std::move(v)), label_(std::move(label)) {
  if (!v_.square())
    throw Error(ErrorCode::InvalidSeifert,
                "Seifert matrix must be square (got " + std::to_string(v_.rows()) +
                    "x" + std::to_string(v_.cols()) + ")");
  if (v_.rows() % 2 != 0)
    throw Error(ErrorCode::InvalidSeifert,
                "Seifert matrix size must be even (got " + std::to_string(v_.rows()) +
                    ")");
  mpz_class d = 1;
  for (const auto& block : block_components(v_)) {
    const IntMatrix b = principal_submatrix(v_, block);
    d *= determinant(b - b.transpose());
  }
  if (d != 1)
    throw Error(ErrorCode::InvalidSeifert,
                "det(V - V^t) must equal 1 (got " + d.get_str() + ")");
}

IntMatrix symmetrize(const SeifertMatrix& s) {
  return s.matrix() + s.matrix().transpose();
}

IntMatrix antisymmetrize(const SeifertMatrix& s) {
  return s.matrix() - s.matrix().transpose();
}

std::vector<std::vector<std::size_t>> block_components(const IntMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v(i, j) != 0) parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> out;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return out;
}

IntMatrix principal_submatrix(const IntMatrix& v, const std::vector<std::size_t>& idx) {
  IntMatrix r(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = v(idx[i], idx[j]);
  return r;
}

namespace {

// det(V - t V^t) by interpolation through t = 0..n.
IntPolynomial alexander_block(const IntMatrix& v) {
  const std::size_t n = v.rows();
  const IntMatrix vt = v.transpose();
  std::vector<mpq_class> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    const mpz_class t = static_cast<unsigned long>(k);
    xs.emplace_back(t);
    ys.emplace_back(determinant(v - t * vt));
  }
  std::vector<mpz_class> c;
  const RatPolynomial poly = interpolate(xs, ys);
  for (const auto& q : poly.coeffs()) {
    if (q.get_den() != 1)
      throw Error(ErrorCode::Internal, "non-integral Alexander coefficient");
    c.push_back(q.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial normalize(const IntPolynomial& p) {
  std::vector<mpz_class> c = p.coeffs();
  std::size_t lead_zeros = 0;
  while (lead_zeros < c.size() && c[lead_zeros] == 0) ++lead_zeros;
  c.erase(c.begin(), c.begin() + static_cast<long>(lead_zeros));
  if (!c.empty() && c.back() < 0)
    for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial alexander_polynomial(const SeifertMatrix& s) {
  IntPolynomial acc{1};
  for (const auto& block : block_components(s.matrix()))
    acc = acc * alexander_block(principal_submatrix(s.matrix(), block));
  return normalize(acc);
}

mpz_class knot_determinant(const SeifertMatrix& s) {
  const IntMatrix sym = symmetrize(s);
  mpz_class d = 1;
  for (const auto& block : block_components(s.matrix()))
    d *= determinant(principal_submatrix(sym, block));
  return abs(d);
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  std::string label;
  if (!a.label().empty() || !b.label().empty())
    label = (a.label().empty() ? "?" : a.label()) + " # " +
            (b.label().empty() ? "?" : b.label());
  return SeifertMatrix(block_diagonal(a.matrix(), b.matrix()), label);
}

SeifertMatrix mirror(const SeifertMatrix& s) {
  return SeifertMatrix(-s.matrix().transpose(),
                       s.label().empty() ? std::string{} : "-(" + s.label() + ")");
}

namespace {

mpz_class bilinear(const IntMatrix& v, const IntVector& x, const IntVector& y) {
  mpz_class acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * v(i, j) * y[j];
  }
  return acc;
}

bool spans_primitive_sublattice(const std::vector<IntVector>& basis, std::size_t dim) {
  if (basis.empty()) return true;
  IntMatrix b(basis.size(), dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = basis[i][j];
  const auto snf = smith_normal_form(b);
  if (snf.invariant_factors.size() != basis.size()) return false;
  for (const auto& d : snf.invariant_factors)
    if (d != 1) return false;
  return true;
}

}  // namespace

bool is_metabolizer(const SeifertMatrix& s, const std::vector<IntVector>& basis) {
  const std::size_t n = s.size();
  if (basis.size() != s.genus())
    throw Error(ErrorCode::DimensionMismatch,
                "metabolizer basis needs " + std::to_string(s.genus()) +
                    " vectors, got " + std::to_string(basis.size()));
  for (const auto& v : basis)
    if (v.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "basis vector length must be " + std::to_string(n));
  if (!spans_primitive_sublattice(basis, n)) return false;
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (bilinear(s.matrix(), x, y) != 0) return false;
  return true;
}

std::optional<std::vector<IntVector>> search_metabolizer(const SeifertMatrix& s,
                                                         long bound) {
  if (s.genus() > 3)
    throw Error(ErrorCode::GenusTooLarge,
                "metabolizer search supports genus <= 3 (got " +
                    std::to_string(s.genus()) + ")");
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be >= 1");
  const std::size_t n = s.size();
  const std::size_t g = s.genus();
  if (g == 0) return std::vector<IntVector>{};

  // Isotropic candidates, sign-normalized: first nonzero coordinate positive.
  std::vector<IntVector> cands;
  std::vector<long> digits(n, -bound);
  for (;;) {
    std::size_t first = 0;
    while (first < n && digits[first] == 0) ++first;
    if (first < n && digits[first] > 0) {
      IntVector v(digits.begin(), digits.end());
      if (bilinear(s.matrix(), v, v) == 0) cands.push_back(std::move(v));
    }
    std::size_t k = n;
    while (k > 0 && digits[k - 1] == bound) digits[--k] = -bound;
    if (k == 0) break;
    ++digits[k - 1];
  }

  std::vector<IntVector> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    if (chosen.size() == g) return true;
    for (std::size_t i = from; i < cands.size(); ++i) {
      const IntVector& v = cands[i];
      bool ok = true;
      for (const auto& w : chosen)
        if (bilinear(s.matrix(), v, w) != 0 || bilinear(s.matrix(), w, v) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(v);
      if (spans_primitive_sublattice(chosen, n) && extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (extend(0)) return chosen;
  return std::nullopt;
}

}  // namespace knotcg
