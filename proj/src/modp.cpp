#include <algorithm>
#include <sstream>
#include <utility>

#include "knotcg/linalg.hpp"

namespace knotcg {

std::int64_t mod_p(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_p(const mpz_class& x, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

std::int64_t inverse_mod_p(std::int64_t x, std::int64_t p) {
  std::int64_t a = mod_p(x, p), m = p, u = 1, v = 0;
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse mod p");
  while (m != 0) {
    const std::int64_t q = a / m;
    a = std::exchange(m, a - q * m);
    u = std::exchange(v, u - q * v);
  }
  return mod_p(u, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_modulus(std::int64_t p) {
  if (!is_prime(p) || p > (std::int64_t{1} << 31))
    throw Error(ErrorCode::InvalidArgument,
                "modulus " + std::to_string(p) + " is not a supported prime");
}

}  // namespace

std::vector<ModPVector> rref_mod_p(std::vector<ModPVector> rows, std::int64_t p) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  for (auto& r : rows) {
    if (r.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "ragged vector list");
    for (auto& x : r) x = mod_p(x, p);
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < n && lead < rows.size(); ++c) {
    std::size_t r = lead;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[lead], rows[r]);
    const std::int64_t inv = inverse_mod_p(rows[lead][c], p);
    for (auto& x : rows[lead]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][c] == 0) continue;
      const std::int64_t f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = mod_p(rows[i][j] - f * rows[lead][j], p);
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

ModPSubspace::ModPSubspace(std::int64_t p, std::size_t ambient_dim,
                           std::vector<ModPVector> spanning)
    : p_(p), n_(ambient_dim) {
  if (n_ == 0 && p_ == 0) return;
  check_modulus(p_);
  for (const auto& v : spanning)
    if (v.size() != n_)
      throw Error(ErrorCode::DimensionMismatch,
                  "vector length differs from ambient dimension");
  basis_ = rref_mod_p(std::move(spanning), p_);
}

ModPSubspace ModPSubspace::zero(std::int64_t p, std::size_t ambient_dim) {
  return ModPSubspace(p, ambient_dim, {});
}

ModPSubspace ModPSubspace::full(std::int64_t p, std::size_t ambient_dim) {
  std::vector<ModPVector> rows(ambient_dim, ModPVector(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return ModPSubspace(p, ambient_dim, std::move(rows));
}

bool ModPSubspace::contains(const ModPVector& v) const {
  if (v.size() != n_)
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  if (n_ == 0) return true;
  auto rows = basis_;
  rows.push_back(v);
  return rref_mod_p(std::move(rows), p_).size() == basis_.size();
}

bool ModPSubspace::is_subspace_of(const ModPSubspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const ModPVector& v) { return other.contains(v); });
}

std::vector<ModPVector> ModPSubspace::elements() const {
  std::vector<ModPVector> out;
  std::vector<std::int64_t> coeff(basis_.size(), 0);
  for (;;) {
    ModPVector v(n_, 0);
    for (std::size_t r = 0; r < basis_.size(); ++r)
      for (std::size_t j = 0; j < n_; ++j)
        v[j] = (v[j] + coeff[r] * basis_[r][j]) % p_;
    out.push_back(std::move(v));
    std::size_t r = 0;
    while (r < coeff.size() && ++coeff[r] == p_) coeff[r++] = 0;
    if (r == coeff.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModPSubspace> enumerate_subspaces(std::int64_t p, std::size_t n,
                                              std::size_t k) {
  check_modulus(p);
  if (k > n)
    throw Error(ErrorCode::InvalidArgument, "subspace dimension exceeds ambient");
  std::int64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= p;
    if (size > (std::int64_t{1} << 24))
      throw Error(ErrorCode::EnumerationTooLarge,
                  "p^n exceeds 2^24; refusing exhaustive enumeration");
  }

  std::vector<ModPSubspace> out;
  // Pivot column sets in lexicographic order; free entries sit right of each
  // pivot outside the other pivot columns.
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  for (;;) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_slots.emplace_back(r, c);

    std::vector<std::int64_t> vals(free_slots.size(), 0);
    for (;;) {
      std::vector<ModPVector> rows(k, ModPVector(n, 0));
      for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        rows[free_slots[s].first][free_slots[s].second] = vals[s];
      out.emplace_back(p, n, std::move(rows));
      std::size_t s = 0;
      while (s < vals.size() && ++vals[s] == p) vals[s++] = 0;
      if (s == vals.size()) break;
    }

    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModPSubspace annihilator(const ModPSubspace& s) {
  const std::size_t n = s.ambient_dim();
  const auto& b = s.basis();
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_col;
  for (const auto& row : b) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    is_pivot[c] = true;
    pivot_col.push_back(c);
  }
  std::vector<ModPVector> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ModPVector v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < b.size(); ++r)
      v[pivot_col[r]] = mod_p(-b[r][f], s.p());
    rows.push_back(std::move(v));
  }
  return ModPSubspace(s.p(), n, std::move(rows));
}

std::string to_string(const ModPVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace knotcg
