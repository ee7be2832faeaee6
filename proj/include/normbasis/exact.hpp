#pragma once

// Exact arithmetic substrate: big rationals, dense matrices over Z and Q,
// univariate polynomials over Q with arithmetic modulo a monic polynomial.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normbasis/error.hpp"

namespace normbasis {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Canonical rational num/den. Throws BadParameter when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Least common multiple of the denominators of `v` (1 for an empty span).
Integer common_denominator(std::span<const Rational> v);

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::BadParameter, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

RatMatrix to_rational(const IntMatrix& m);

/// Row vector times matrix.
RatVector row_times(std::span<const Rational> v, const RatMatrix& m);

/// Exact determinant (fraction-free Bareiss after clearing row denominators).
Rational det_exact(const RatMatrix& m);
Integer det_integer(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;          // row-style HNF, zero rows last
  IntMatrix transform;  // unimodular, transform * m == h
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: upper triangular, positive pivots, entries
/// above each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

/// Exact x with m x = b. Throws NonSquare / Singular.
RatVector solve_linear(const RatMatrix& m, std::span<const Rational> b);
RatMatrix inverse(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Incrementally maintained row echelon basis of a subspace of Q^n.
class RationalEchelon {
 public:
  explicit RationalEchelon(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the stored rows; true iff v is outside the span.
  bool is_independent(std::span<const Rational> v) const;
  /// Adds v if independent; returns whether it was added.
  bool insert(std::span<const Rational> v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

 private:
  RatVector reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  std::vector<RatVector> rows_;       // each normalized: pivot entry 1
  std::vector<std::size_t> pivots_;
};

struct LllResult {
  IntMatrix basis;      // reduced rows
  IntMatrix transform;  // unimodular, transform * input == basis
};

/// Integral LLL (all-integer Gram-Schmidt bookkeeping) on the rows of `basis`,
/// which must be linearly independent. delta in (1/4, 1).
LllResult lll_reduce_integer(const IntMatrix& basis, const Rational& delta = Rational(99, 100));

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(RatVector coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t k);
  static UniPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const RatVector& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coeffs() const;

  Rational eval(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();
  RatVector coeffs_;  // ascending degree, no trailing zeros
};

struct PolyDivMod {
  UniPoly quotient;
  UniPoly remainder;
};

PolyDivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly poly_rem(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both inputs are zero).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
UniPoly poly_pow(const UniPoly& a, unsigned k);

/// a*b reduced modulo the monic f. Throws NonMonicModulus.
UniPoly poly_mul_mod(const UniPoly& a, const UniPoly& b, const UniPoly& f);
/// Inverse of a modulo the monic f. Throws NotInvertible when gcd(a, f) != 1.
UniPoly poly_inv_mod(const UniPoly& a, const UniPoly& f);
/// p(g) reduced modulo f.
UniPoly compose_mod(const UniPoly& p, const UniPoly& g, const UniPoly& f);

/// Resultant-based discriminant (Sylvester determinant).
Rational poly_discriminant(const UniPoly& f);

/// Sturm chain of a squarefree polynomial.
std::vector<UniPoly> sturm_chain(const UniPoly& f);
/// Number of distinct real roots in (lo, hi].
int sturm_count(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi);
/// Number of distinct real roots on the whole line.
int count_real_roots(const UniPoly& f);
/// Integer roots of a squarefree integer polynomial, found by Sturm bisection.
std::vector<Integer> integer_roots(const UniPoly& f);

}  // namespace normbasis
