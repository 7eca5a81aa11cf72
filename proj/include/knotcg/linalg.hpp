#pragma once

// Exact integer, rational and mod-p linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "knotcg/errors.hpp"

namespace knotcg {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& entries() const { return data_; }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorCode::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

RatMatrix to_rational(const IntMatrix& a);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant. The empty matrix has determinant 1.
mpz_class determinant(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix W;
  /// Positive diagonal entries of D, in divisibility order.
  std::vector<mpz_class> invariant_factors;
};

/// Computes unimodular U, W with U*A*W = D, D diagonal, d1 | d2 | ... and all
/// diagonal entries nonnegative. Zero diagonal entries (rank deficiency) trail.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Exact inverse over Q. Throws SingularMatrix when det(A) = 0.
RatMatrix rational_inverse(const IntMatrix& a);

/// Reduces a rational into [0, 1).
mpq_class mod_one(const mpq_class& x);

// ---------------------------------------------------------------------------
// Linear algebra over Z_p for small primes p.

using ModPVector = std::vector<std::int64_t>;

std::int64_t mod_p(std::int64_t x, std::int64_t p);
std::int64_t mod_p(const mpz_class& x, std::int64_t p);
std::int64_t inverse_mod_p(std::int64_t x, std::int64_t p);
bool is_prime(std::int64_t n);

/// A subspace of Z_p^n held as its reduced row-echelon basis, so equal
/// subspaces compare equal. p = 0 is reserved for the zero-dimensional ambient
/// space of a trivial group, where no prime is attached.
class ModPSubspace {
 public:
  ModPSubspace() = default;
  /// Spans the given rows (any spanning set; reduced on construction).
  ModPSubspace(std::int64_t p, std::size_t ambient_dim,
               std::vector<ModPVector> spanning);

  static ModPSubspace zero(std::int64_t p, std::size_t ambient_dim);
  static ModPSubspace full(std::int64_t p, std::size_t ambient_dim);

  std::int64_t p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ModPVector>& basis() const { return basis_; }

  bool contains(const ModPVector& v) const;
  bool is_subspace_of(const ModPSubspace& other) const;
  /// Every element, in lexicographic order of value vectors.
  std::vector<ModPVector> elements() const;

  friend bool operator==(const ModPSubspace&, const ModPSubspace&) = default;
  friend auto operator<=>(const ModPSubspace& a, const ModPSubspace& b) {
    return a.basis_ <=> b.basis_;
  }

 private:
  std::int64_t p_ = 0;
  std::size_t n_ = 0;
  std::vector<ModPVector> basis_;
};

/// Reduced row-echelon form over Z_p with zero rows dropped.
std::vector<ModPVector> rref_mod_p(std::vector<ModPVector> rows, std::int64_t p);

/// All k-dimensional subspaces of Z_p^n in canonical form. Throws
/// EnumerationTooLarge unless n*log2(p) <= 24.
std::vector<ModPSubspace> enumerate_subspaces(std::int64_t p, std::size_t n,
                                              std::size_t k);

/// {v : v.s = 0 mod p for all s in S}.
ModPSubspace annihilator(const ModPSubspace& s);

std::string to_string(const mpq_class& q);
std::string to_string(const ModPVector& v);

}  // namespace knotcg
