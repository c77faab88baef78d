#pragma once

#include <string>
#include <vector>

#include "thp/linalg.hpp"

namespace thp {

/// The classifying data of a thin Hessenberg system of diameter d: the
/// eigenvalue sequence theta (d+1 entries), the dual eigenvalue sequence
/// theta_star (d+1 entries) and the split sequence phi (d entries).
struct ParameterArray {
  FieldSpec field = FieldSpec::rationals();
  std::vector<Scalar> theta;
  std::vector<Scalar> theta_star;
  std::vector<Scalar> phi;

  std::size_t d() const { return theta.empty() ? 0 : theta.size() - 1; }

  friend bool operator==(const ParameterArray&, const ParameterArray&) = default;
};

struct ValidationReport {
  bool ok = false;
  std::string detail;  ///< names the first failed condition; empty when ok
};

/// Checks the defining conditions: consistent sizes, the theta mutually
/// distinct, the theta_star mutually distinct, every phi nonzero, and all
/// entries over the declared field.
ValidationReport validate(const ParameterArray& p);

/// A thin Hessenberg system: a matrix pair on F^(d+1) together with the
/// ordered primitive idempotent sequences of both matrices.
struct THSystem {
  FieldSpec field = FieldSpec::rationals();
  Matrix A{1, 1, FieldSpec::rationals()};
  Matrix A_star{1, 1, FieldSpec::rationals()};
  std::vector<Matrix> E;       ///< E[i] projects onto the theta[i] eigenspace
  std::vector<Matrix> E_star;  ///< E_star[i] likewise for A_star
  std::vector<Scalar> theta;
  std::vector<Scalar> theta_star;

  std::size_t d() const { return theta.size() - 1; }
  std::size_t dim() const { return A.rows(); }
};

/// The canonical system of a valid parameter array: A lower bidiagonal with
/// diagonal (theta_d, ..., theta_0) and subdiagonal (phi_1, ..., phi_d);
/// A_star upper bidiagonal with diagonal (theta_star_0, ..., theta_star_d)
/// and unit superdiagonal.  Throws DomainError when the array is invalid.
THSystem build_canonical_system(const ParameterArray& p);

/// Lagrange projections E_i = prod_{j != i} (a - eigenvalue_j I) /
/// (eigenvalue_i - eigenvalue_j).  The eigenvalue list must be pairwise
/// distinct (DomainError otherwise).  When the list is the full spectrum of a
/// multiplicity-free matrix, the results are re-verified to satisfy
/// sum E_i = I, E_i E_j = delta_ij E_i, a = sum eigenvalue_i E_i,
/// rank E_i = 1 and prod (a - eigenvalue_i I) = 0; any violation raises
/// StructuralError naming the identity that broke.
std::vector<Matrix> primitive_idempotents(const Matrix& a,
                                          const std::vector<Scalar>& eigenvalues);

/// (theta_star, theta, phi reversed): swapping the roles of the two matrices
/// gives a system with these parameters.  Involution.
ParameterArray dual_parameter_array(const ParameterArray& p);

/// (A_star; E_star; A; E): the same operators with the roles exchanged.
THSystem dual_system(const THSystem& s);

/// The conjugated system (g A g^-1; g E g^-1; ...); g must be invertible.
THSystem conjugate_system(const THSystem& s, const Matrix& g);

/// nu = prod_{i>=1} (theta_0 - theta_i) * prod_{i>=1} (theta_star_0 -
/// theta_star_i) / prod phi_i; equals 1 when d = 0.  Requires a valid array.
Scalar nu_from_parameters(const ParameterArray& p);

/// nu as 1 / trace(E_0 E_star_0).
Scalar nu_from_idempotents(const THSystem& s);

}  // namespace thp
