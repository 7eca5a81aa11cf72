#include "knotcg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace knotcg {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a,
                                               const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  std::vector<mpq_class> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (long k = a.degree() - db; k >= 0; --k) {
    const mpq_class f = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

namespace {

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<mpq_class> c = p.coeffs();
  const mpq_class lead = p.leading();
  for (auto& x : c) x /= lead;
  return RatPolynomial(std::move(c));
}

}  // namespace

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RatPolynomial squarefree_part(const RatPolynomial& f) {
  if (f.degree() <= 0) return make_monic(f);
  return make_monic(divmod(f, gcd(f, f.derivative())).first);
}

IntPolynomial cyclotomic(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  // t^n - 1 divided by every Phi_d with d | n, d < n.
  RatPolynomial acc = to_rational(IntPolynomial::monomial(1, static_cast<std::size_t>(n))) -
                      RatPolynomial{1};
  for (long d = 1; d < n; ++d)
    if (n % d == 0) acc = divmod(acc, to_rational(cyclotomic(d))).first;
  std::vector<mpz_class> c;
  for (const auto& x : acc.coeffs()) c.push_back(x.get_num());
  return IntPolynomial(std::move(c));
}

RatPolynomial interpolate(const std::vector<mpq_class>& xs,
                          const std::vector<mpq_class>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw Error(ErrorCode::DimensionMismatch, "interpolation sizes differ");
  std::vector<mpq_class> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  RatPolynomial result;
  for (std::size_t i = n; i-- > 0;)
    result = result * RatPolynomial(std::vector<mpq_class>{-xs[i], 1}) +
             RatPolynomial::constant(dd[i]);
  return result;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = p.degree(); d >= 0; --d) {
    mpz_class c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (a != 1 || d == 0) os << a.get_str();
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

SturmSequence::SturmSequence(const RatPolynomial& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() >= 1) {
    chain_.push_back(squarefree.derivative());
    while (chain_.back().degree() > 0) {
      RatPolynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }
  // Cauchy bound 1 + max |a_i / a_n|.
  bound_ = 1;
  if (squarefree.degree() >= 1) {
    mpq_class m = 0;
    for (long i = 0; i < squarefree.degree(); ++i) {
      mpq_class r = abs(squarefree.coeffs()[static_cast<std::size_t>(i)] / squarefree.leading());
      if (r > m) m = r;
    }
    bound_ = 1 + m;
  }
}

std::size_t SturmSequence::sign_changes(const mpq_class& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& f : chain_) {
    const int s = sgn(f(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count_roots(const mpq_class& lo, const mpq_class& hi) const {
  if (!(lo < hi)) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

}  // namespace knotcg
