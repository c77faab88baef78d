#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thp/bases.hpp"
#include "thp/linalg.hpp"
#include "thp/thcore.hpp"

namespace thp {

/// Two square matrices of the same size over the same field, in the order
/// (A, A_star).  Operations taking a MatrixPair throw DomainError when the
/// shape requirements fail.
struct MatrixPair {
  Matrix A{1, 1, FieldSpec::rationals()};
  Matrix A_star{1, 1, FieldSpec::rationals()};
};

struct MultiplicityFreeReport {
  bool ok = false;
  std::string reason;               ///< set when not ok
  std::vector<Scalar> eigenvalues;  ///< canonical order, set when ok
};

/// A matrix is multiplicity-free when it is diagonalizable with all
/// eigenspaces of dimension one; equivalently its minimal polynomial has
/// degree equal to the order of the matrix and splits into distinct linear
/// factors over the field.
MultiplicityFreeReport is_multiplicity_free(const Matrix& a);

/// All orderings (theta_0, ..., theta_d) of the eigenvalues of pair.A such
/// that the associated idempotents E_i satisfy E_i A* E_j = 0 for i - j > 1
/// and E_i A* E_j != 0 for i - j = 1.  Each candidate theta_0 admits at most
/// one ordering, found by growing the flag W_0 = ker(A - theta_0),
/// W_i = W_{i-1} + A* W_{i-1} and reading off which eigenspace each step
/// absorbs; accepted orderings are re-verified entrywise.  pair.A must be
/// multiplicity-free (DomainError otherwise).
std::vector<std::vector<Scalar>> th_orderings(const MatrixPair& pair);

struct RecognizedSystem {
  THSystem system;
  ParameterArray parameters;
};

struct RecognitionReport {
  bool is_th_pair = false;
  std::string failure_reason;  ///< set when not a TH pair
  /// Every system on the pair, sorted lexicographically by (theta,
  /// theta_star) under the canonical scalar order.
  std::vector<RecognizedSystem> systems;
};

/// Decides whether the pair is a thin Hessenberg pair and enumerates every
/// system living on it: each admissible eigenvalue ordering for A combines
/// freely with each admissible ordering for A_star.
RecognitionReport recognize_th_pair(const MatrixPair& pair);

/// (theta, theta_star, phi) of a system: the eigenvalue sequences are carried
/// by the system; phi is read off the subdiagonal of the representation of A
/// in a split basis.  The result is revalidated and the whole split
/// representation is compared against its closed form (StructuralError on
/// any mismatch).
ParameterArray extract_parameter_array(const THSystem& s);

/// When A is Hessenberg and A_star is upper triangular, the diagonal of
/// A_star read top to bottom is a dual eigenvalue sequence of the pair.
/// Preconditions (shapes and the pair being a TH pair) raise DomainError;
/// the claim is certified by recognition before the sequence is returned.
std::vector<Scalar> dual_eigenvalues_from_triangular(const MatrixPair& pair);

struct IsomorphismWitness {
  Matrix gamma{1, 1, FieldSpec::rationals()};  ///< gamma X = X' gamma
};

/// Two systems on spaces of the same dimension over the same field are
/// isomorphic exactly when their parameter arrays coincide.  On success the
/// witness carries an invertible gamma verified to intertwine both matrices
/// and every idempotent; different fields or dimensions raise DomainError.
std::optional<IsomorphismWitness> isomorphic(const THSystem& s1,
                                             const THSystem& s2);

}  // namespace thp
