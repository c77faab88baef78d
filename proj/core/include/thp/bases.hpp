#pragma once

#include <string>
#include <vector>

#include "thp/linalg.hpp"
#include "thp/thcore.hpp"

namespace thp {

/// The six distinguished bases attached to a thin Hessenberg system.
///
///   PhiSplit         v_d = eta_0,   v_i = (A* - theta_star_{i+1}) v_{i+1}
///   InvPhiSplit      the same vectors in reverse order
///   PhiStarSplit     v_d = eta*_0,  v_i = (A - theta_{i+1}) v_{i+1}
///   InvPhiStarSplit  the same vectors in reverse order
///   PhiStandard      v_i = E*_i eta_0
///   PhiStarStandard  v_i = E_i eta*_0
///
/// where eta_0 is a nonzero vector in E_0 V and eta*_0 a nonzero vector in
/// E*_0 V.
enum class BasisKind {
  PhiSplit,
  PhiStarSplit,
  InvPhiSplit,
  InvPhiStarSplit,
  PhiStandard,
  PhiStarStandard,
};

std::string to_string(BasisKind kind);

/// Accepts "phi-split", "phi-star-split", "inv-phi-split",
/// "inv-phi-star-split", "phi-standard", "phi-star-standard".
BasisKind basis_kind_from_string(const std::string& text);

/// True when the basis is seeded from E_0 V (else from E*_0 V).
bool seeded_from_eigenspace_of_A(BasisKind kind);

struct BasisMatrix {
  BasisKind kind = BasisKind::PhiSplit;
  Matrix columns{1, 1, FieldSpec::rationals()};  ///< column i = basis vector i
  Vector seed{1, FieldSpec::rationals()};
};

/// How the pair acts in a basis: B = M^-1 A M, B_star = M^-1 A* M.
struct RepresentationPair {
  Matrix B{1, 1, FieldSpec::rationals()};
  Matrix B_star{1, 1, FieldSpec::rationals()};
};

/// The first nonzero column of E_0 (for bases seeded from E_0 V) or of
/// E*_0 (for the rest).
Vector default_seed(const THSystem& s, BasisKind kind);

/// Builds the requested basis from an explicit seed, which must be a nonzero
/// vector of the appropriate eigenspace (DomainError otherwise).  The columns
/// of every one of the six constructions are provably independent; failure of
/// that invariant raises StructuralError.
BasisMatrix make_basis(const THSystem& s, BasisKind kind, const Vector& seed);

/// make_basis with default_seed(s, kind).
BasisMatrix make_basis(const THSystem& s, BasisKind kind);

/// Conjugates the pair into the given basis.  DomainError when the columns
/// are not invertible.
RepresentationPair represent(const THSystem& s, const BasisMatrix& basis);

/// What the representation must be, computed from the parameter array alone:
///
///   PhiSplit         B  lower bidiagonal, diag (th_d..th_0), sub (phi_1..phi_d)
///                    B* upper bidiagonal, diag (ts_0..ts_d), unit super
///   PhiStarSplit     B  upper bidiagonal, diag (th_0..th_d), unit super
///                    B* lower bidiagonal, diag (ts_d..ts_0), sub_i = phi_{d-i+1}
///   InvPhiSplit      B  upper bidiagonal, diag (th_0..th_d), super_i = phi_{d-i+1}
///                    B* lower bidiagonal, diag (ts_d..ts_0), unit sub
///   InvPhiStarSplit  B  lower bidiagonal, diag (th_d..th_0), unit sub
///                    B* upper bidiagonal, diag (ts_0..ts_d), super_i = phi_i
///   PhiStandard      B  the Hessenberg form below, B* = diag (ts_0..ts_d)
///   PhiStarStandard  B  = diag (th_0..th_d), B* the Hessenberg form of the
///                    dual array
///
/// (th = theta, ts = theta_star; sub_i / super_i sit in column i-1 / i.)
RepresentationPair closed_form_representation(const ParameterArray& p,
                                              BasisKind kind);

/// The Hessenberg matrix representing A in the basis {E*_i eta_0}, computed
/// entrywise from the parameter array.  Every row sums to theta_0.
Matrix hessenberg_form(const ParameterArray& p);

/// The matrix carrying coordinates between two of the bases: when both bases
/// are built with compatibly linked seeds, M_to = M_from * transition.
/// Supported pairs (others raise UnsupportedError):
///
///   PhiStandard     -> PhiSplit          same seed; upper triangular, entries
///                                        prod_{k=j+1}^d (ts_i - ts_k)
///   PhiStarStandard -> PhiStarSplit      the same matrix over the dual array
///   PhiSplit        -> PhiStarSplit      seeds linked by eta_0 = E_0 eta*_0;
///                                        antidiagonal
///   PhiStarSplit    -> PhiSplit          seeds linked by eta*_0 = E*_0 eta_0;
///                                        antidiagonal
///   PhiStarStandard -> PhiStandard       seeds linked by eta*_0 = E*_0 eta_0
///   PhiStandard     -> PhiStarStandard   seeds linked by eta_0 = E_0 eta*_0
///
/// The last two are computed both as a product of the first four and by a
/// closed-form entry formula; disagreement raises StructuralError.
Matrix transition_matrix(const ParameterArray& p, BasisKind from, BasisKind to);

/// Closed-form inverse of transition_matrix(p, PhiStandard, PhiSplit):
/// upper triangular with entries
/// 1 / [ prod_{h=i}^{j-1} (ts_j - ts_h) * prod_{h=j+1}^{d} (ts_j - ts_h) ].
Matrix standard_to_split_inverse(const ParameterArray& p);

/// The one dimensional subspaces U_i = (E*_0 V + ... + E*_i V) cap
/// (E_0 V + ... + E_{d-i} V).  Their sum is direct and equals V;
/// (A - theta_{d-i}) U_i lies in U_{i+1} and (A* - theta_star_i) U_i in
/// U_{i-1} (with U_{-1} = U_{d+1} = 0).  Violations raise StructuralError.
struct SplitDecomposition {
  std::vector<Subspace> U;
};
SplitDecomposition split_decomposition(const THSystem& s);

/// Candidate tests.  Each takes the (d+1)x(d+1) matrix whose columns are the
/// candidate vectors and decides whether they form the named basis of s.
/// The three split tests agree on every candidate, as do the three standard
/// tests; each triple is proved equivalent.

/// Representation shapes: the candidate is invertible, conjugating gives
/// B lower bidiagonal and B* upper bidiagonal with unit superdiagonal,
/// B_dd = theta_0 and B*_00 = theta_star_0.
bool is_split_basis(const THSystem& s, const Matrix& columns);

/// Last vector is a nonzero member of E_0 V, (A* - theta_star_i) v_i =
/// v_{i-1} for i = d..1, and (A* - theta_star_0) v_0 = 0.
bool is_split_basis_by_lowering(const THSystem& s, const Matrix& columns);

/// First vector is a nonzero member of E*_0 V, (A - theta_{d-i}) v_i =
/// phi_{i+1} v_{i+1} for i = 0..d-1, and (A - theta_0) v_d = 0.  Needs the
/// split sequence, whose entries must all be nonzero.
bool is_split_basis_by_raising(const THSystem& s, const Matrix& columns,
                               const std::vector<Scalar>& phi);

/// E*_i v_i = v_i for every i and the (necessarily nonzero) sum of the
/// candidate vectors is fixed by E_0.
bool is_standard_basis(const THSystem& s, const Matrix& columns);

/// The candidate is invertible, B* equals diag(theta_star_0..theta_star_d)
/// exactly, and every row of B sums to theta_0.
bool is_standard_basis_by_row_sums(const THSystem& s, const Matrix& columns);

/// The candidate is invertible, B is Hessenberg with every row summing to
/// theta_0, B* is diagonal and B*_00 = theta_star_0.
bool is_standard_basis_by_shape(const THSystem& s, const Matrix& columns);

}  // namespace thp
