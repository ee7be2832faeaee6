#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "normbasis/exact.hpp"

namespace normbasis {

/// Element of K = Q[X]/(f), stored as power-basis coordinates.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(RatVector coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const RatVector& coords() const noexcept { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  UniPoly to_poly() const { return UniPoly(coords_); }

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const Rational& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator-(FieldElement a) { return a *= Rational(-1); }
  friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  RatVector coords_;
};

struct FieldSpec {
  UniPoly poly;                     // monic, integer coefficients
  std::optional<RatMatrix> basis;   // rows in power-basis coordinates
  std::string label;
  bool maximal = false;             // the basis is known to span O_K
};

class NumberField {
 public:
  /// Builds and verifies the field. Throws BadParameter, NotSquarefree,
  /// ReduciblePolynomial or NotAnOrder.
  static NumberField make(const FieldSpec& spec);

  const UniPoly& poly() const noexcept { return poly_; }
  std::size_t degree() const noexcept { return n_; }
  std::size_t r1() const noexcept { return r1_; }
  std::size_t r2() const noexcept { return r2_; }
  /// Integral basis rows in power-basis coordinates; row 0 is 1.
  const RatMatrix& basis() const noexcept { return basis_; }
  const RatMatrix& basis_inverse() const noexcept { return basis_inv_; }
  const Integer& disc() const noexcept { return disc_; }
  Integer abs_disc() const { return abs(disc_); }
  /// False when the basis is only known to span an order; bounds are then order-relative.
  bool maximal() const noexcept { return maximal_; }
  const std::string& label() const noexcept { return label_; }
  /// The spec this field was built from, with the canonical basis filled in.
  FieldSpec spec() const;

  FieldElement zero() const { return FieldElement(RatVector(n_)); }
  FieldElement one() const;
  FieldElement theta() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_poly(const UniPoly& p) const;
  FieldElement basis_element(std::size_t i) const;
  /// Element with the given coordinates in the integral basis.
  FieldElement from_integral(std::span<const Rational> coords) const;
  FieldElement from_integral(std::span<const Integer> coords) const;
  /// Coordinates in the integral basis (integers iff the element is in the order).
  RatVector integral_coords(const FieldElement& a) const;
  bool in_order(const FieldElement& a) const;

  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, unsigned k) const;
  /// Throws ReduciblePolynomial when a nonzero element is not invertible.
  FieldElement inverse(const FieldElement& a) const;

  Rational trace(const FieldElement& a) const;
  Rational norm(const FieldElement& a) const;
  /// Column j holds the coordinates of a * X^j.
  RatMatrix multiplication_matrix(const FieldElement& a) const;
  UniPoly characteristic_polynomial(const FieldElement& a) const;
  /// Monic least-degree annihilator. Throws InternalNonField when the result
  /// contradicts f being irreducible.
  UniPoly minimal_polynomial(const FieldElement& a) const;
  bool is_algebraic_integer(const FieldElement& a) const;

 private:
  NumberField() = default;
  void check_size(const FieldElement& a) const;

  UniPoly poly_;
  std::size_t n_ = 0;
  std::size_t r1_ = 0;
  std::size_t r2_ = 0;
  RatMatrix basis_;
  RatMatrix basis_inv_;
  Integer disc_;
  bool maximal_ = false;
  std::string label_;
  RatVector power_traces_;  // Tr(X^k), k < n
};

/// Checks that the rows of `basis` span an order of Q[X]/(f) and returns its
/// discriminant det[Tr(e_i e_j)]. Throws NotAnOrder naming the failed check.
Integer verify_integral_basis(const UniPoly& f, const RatMatrix& basis);

/// Canonical basis of the Z-module spanned by `rows` (power-basis coordinates),
/// echelon in degree: row i has degree i. For an order, row 0 is 1.
RatMatrix module_basis(const RatMatrix& rows);

NumberField quadratic_field(long d);
NumberField cyclotomic_field(long m);
NumberField biquadratic_field(long a, long b);
/// "quadratic(-1)", "cyclotomic(5)", "biquadratic(2,3)".
NumberField catalog_field(std::string_view name);
UniPoly cyclotomic_polynomial(long m);

}  // namespace normbasis
