#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "thp/field.hpp"

namespace thp {

/// Dense matrix over an exact field.  Row-major, indexed from 0.
class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f);

  static Matrix identity(std::size_t n, const FieldSpec& f);
  static Matrix diagonal(const std::vector<Scalar>& entries);
  /// Builds from a rectangular row list; throws DomainError on ragged input
  /// or empty matrices.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> e_;
};

/// Column vector over an exact field, indexed from 0.
class Vector {
 public:
  Vector(std::size_t dim, const FieldSpec& f);
  static Vector unit(std::size_t dim, std::size_t i, const FieldSpec& f);

  std::size_t dim() const { return e_.size(); }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i);
  const Scalar& at(std::size_t i) const;
  bool is_zero() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator*(const Scalar& c, const Vector& v);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b);
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

 private:
  FieldSpec field_;
  std::vector<Scalar> e_;
};

/// Columns of m side by side with columns of n (same row count and field).
Matrix hstack(const Matrix& m, const Matrix& n);
/// The j-th column of m as a Vector / column insertion helpers.
Vector column(const Matrix& m, std::size_t j);
Matrix from_columns(const std::vector<Vector>& cols);

Scalar trace(const Matrix& m);

/// Inverse by Gauss-Jordan elimination with full pivoting (among the
/// remaining entries the structurally simplest nonzero one is chosen, which
/// keeps exact-rational growth down).  Throws DomainError when singular.
Matrix inverse(const Matrix& m);
/// As inverse(), but returns nullopt instead of throwing when singular.
std::optional<Matrix> try_inverse(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Polynomial over an exact field; coefficient k multiplies x^k.  The zero
/// polynomial has an empty coefficient list and degree 0 by convention.
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& f) : field_(f) {}
  /// Trailing zero coefficients are trimmed.  Throws DomainError if the
  /// coefficients disagree about their field.
  Polynomial(std::vector<Scalar> coefficients, const FieldSpec& f);

  static Polynomial constant(const Scalar& c);
  /// The monomial x over f.
  static Polynomial x(const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  Scalar coefficient(std::size_t k) const;
  Scalar leading_coefficient() const;  ///< Throws DomainError on zero poly.
  const std::vector<Scalar>& coefficients() const { return c_; }

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const;
  /// Horner evaluation at a square matrix (constant term times identity).
  Matrix operator()(const Matrix& m) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Euclidean division; throws DomainError when divisor is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                                  const Polynomial& den);
  Polynomial monic() const;  ///< Throws DomainError on the zero polynomial.

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// Characteristic polynomial det(xI - m) via the division-free Berkowitz
/// vector recurrence; exact in any field, no pivoting involved.
Polynomial char_poly(const Matrix& m);

/// Minimal polynomial: the first monic linear dependence among the vectorized
/// powers I, m, m^2, ..., found by incremental echelon reduction.
Polynomial min_poly(const Matrix& m);

struct RootsReport {
  /// (root, multiplicity), ordered by canonical_less on the roots.
  std::vector<std::pair<Scalar, std::size_t>> roots;
  /// True when the multiplicities sum to the degree, i.e. the polynomial
  /// factors into linear terms over its field.
  bool splits = false;
};

/// All roots in the coefficient field, with multiplicities.  Over the
/// rationals: exact rational-root enumeration on the integer-cleared
/// polynomial (complete, so splits=false is a certificate).  Over gf:p the
/// candidates are scanned exhaustively; p > 10^6 throws UnsupportedError, as
/// do adversarial inputs whose integer constants cannot be factored within
/// the internal budget.  Throws DomainError on the zero polynomial.
RootsReport roots_in_field(const Polynomial& p);

struct ShapeFlags {
  bool hessenberg = false;        ///< zero below the subdiagonal, subdiagonal all nonzero
  bool lower_bidiagonal = false;  ///< entries only on diagonal + subdiagonal, subdiagonal all nonzero
  bool upper_bidiagonal = false;  ///< transpose of lower_bidiagonal
  bool diagonal = false;
  bool upper_triangular = false;
};

/// Shape classification of a square matrix.  For 1x1 matrices every flag is
/// true (all the defining clauses are vacuous).
ShapeFlags shape_of(const Matrix& m);

/// Subspace of F^n held as its unique reduced-column-echelon basis, so two
/// Subspace objects are equal as sets exactly when their basis matrices are
/// identical entrywise.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient_dim, const FieldSpec& f);
  static Subspace full(std::size_t ambient_dim, const FieldSpec& f);
  /// Span of the columns of m.
  static Subspace span_of_columns(const Matrix& m);
  static Subspace span(const Vector& v);
  /// Null space of m (as a subspace of F^cols).
  static Subspace kernel(const Matrix& m);
  static Subspace eigenspace(const Matrix& m, const Scalar& lambda);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const FieldSpec& field() const { return basis_.field(); }
  /// ambient_dim x dim matrix in reduced column echelon form; zero columns
  /// are absent (the zero subspace has a 0-column basis).
  const Matrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Span of m * basis (the image of this subspace under m).
  Subspace image_under(const Matrix& m) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersection(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_;
  Matrix basis_;
};

}  // namespace thp
