#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace knotcg::oracle {

std::vector<long double> jacobi_eigenvalues(std::vector<std::vector<long double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-36L) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300L) continue;
        const long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const long double t = (theta >= 0 ? 1.0L : -1.0L) /
                              (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const long double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const long double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<long double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

namespace {

EigenSignature count(const std::vector<long double>& ev, int divisor) {
  EigenSignature out;
  out.min_abs_eigenvalue = ev.empty() ? 1e300L : std::fabs(ev.front());
  int sig = 0;
  for (auto e : ev) {
    sig += e > 0 ? 1 : (e < 0 ? -1 : 0);
    out.min_abs_eigenvalue = std::min(out.min_abs_eigenvalue, std::fabs(e));
  }
  out.signature = sig / divisor;
  return out;
}

}  // namespace

EigenSignature symmetric_signature(const IntMatrix& m) {
  std::vector<std::vector<long double>> a(m.rows(), std::vector<long double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_d();
  return count(jacobi_eigenvalues(std::move(a)), 1);
}

EigenSignature hermitian_signature(const IntMatrix& v, long k, long p) {
  const std::size_t n = v.rows();
  const long double theta = 2 * std::numbers::pi_v<long double> * k / p;
  const long double wr = std::cos(theta), wi = std::sin(theta);
  // H = (1 - w) V + (1 - conj w) V^t = X + iY
  std::vector<std::vector<long double>> a(2 * n, std::vector<long double>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long double vij = v(i, j).get_d(), vji = v(j, i).get_d();
      const long double x = (1 - wr) * vij + (1 - wr) * vji;
      const long double y = -wi * vij + wi * vji;
      a[i][j] = x;
      a[n + i][n + j] = x;
      a[i][n + j] = -y;
      a[n + i][j] = y;
    }
  return count(jacobi_eigenvalues(std::move(a)), 2);
}

long long gaussian_binomial(long p, int n, int k) {
  long long num = 1, den = 1;
  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  long long pi = 1;
  for (int i = 0; i < k; ++i) {
    num *= pn - pi;
    den *= pk - pi;
    pi *= p;
  }
  return num / den;
}

std::set<ElementSet> brute_force_subspaces(int p, int n, int k) {
  std::vector<std::vector<int>> space;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (;;) {
    space.push_back(v);
    int i = 0;
    while (i < n && ++v[static_cast<std::size_t>(i)] == p) v[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }

  long long target = 1;
  for (int i = 0; i < k; ++i) target *= p;

  std::set<ElementSet> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  for (;;) {
    ElementSet span;
    std::vector<int> coeff(static_cast<std::size_t>(k), 0);
    for (;;) {
      std::vector<int> w(static_cast<std::size_t>(n), 0);
      for (int r = 0; r < k; ++r)
        for (int j = 0; j < n; ++j)
          w[static_cast<std::size_t>(j)] =
              (w[static_cast<std::size_t>(j)] +
               coeff[static_cast<std::size_t>(r)] * space[pick[static_cast<std::size_t>(r)]][static_cast<std::size_t>(j)]) % p;
      span.insert(std::move(w));
      int r = 0;
      while (r < k && ++coeff[static_cast<std::size_t>(r)] == p) coeff[static_cast<std::size_t>(r++)] = 0;
      if (r == k) break;
    }
    if (static_cast<long long>(span.size()) == target) out.insert(std::move(span));
    int r = 0;
    while (r < k && ++pick[static_cast<std::size_t>(r)] == space.size()) pick[static_cast<std::size_t>(r++)] = 0;
    if (r == k) break;
  }
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int moves) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int m = 0; m < moves; ++m) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t col = 0; col < n; ++col) p(i, col) += c * p(j, col);
  }
  return p;
}

IntMatrix random_seifert(std::mt19937_64& rng, int genus) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  std::uniform_int_distribution<int> entry(-2, 2);
  IntMatrix base(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) base(i, j) = base(j, i) = entry(rng);
  for (std::size_t b = 0; b < n; b += 2) base(b, b + 1) += 1;
  const IntMatrix p = random_unimodular(rng, n, 2 * genus);
  return p.transpose() * base * p;
}

}  // namespace knotcg::oracle
