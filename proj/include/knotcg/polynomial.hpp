#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "knotcg/errors.hpp"

namespace knotcg {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = v;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Quotient and remainder over Q. Throws InvalidArgument on a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a,
                                               const RatPolynomial& b);

/// Monic greatest common divisor over Q.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// Squarefree part f / gcd(f, f'), made monic.
RatPolynomial squarefree_part(const RatPolynomial& f);

/// The n-th cyclotomic polynomial, n >= 1.
IntPolynomial cyclotomic(long n);

/// Unique polynomial of degree < xs.size() through the given points (Newton).
RatPolynomial interpolate(const std::vector<mpq_class>& xs,
                          const std::vector<mpq_class>& ys);

/// "2t^2 - 5t + 2" style rendering in the variable t.
std::string to_string(const IntPolynomial& p);

/// Sturm sequence of a squarefree polynomial; counts its distinct real roots
/// in half-open intervals (lo, hi].
class SturmSequence {
 public:
  explicit SturmSequence(const RatPolynomial& squarefree);

  std::size_t count_roots(const mpq_class& lo, const mpq_class& hi) const;
  /// A rational M with every real root in (-M, M).
  const mpq_class& root_bound() const { return bound_; }

 private:
  std::size_t sign_changes(const mpq_class& x) const;

  std::vector<RatPolynomial> chain_;
  mpq_class bound_;
};

}  // namespace knotcg
