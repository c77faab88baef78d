#pragma once

#include <string>
#include <vector>

#include "thp/thcore.hpp"

namespace thp {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  ///< empty when pass; names the broken identity otherwise
};

/// Runs every identity the library promises against the canonical system of
/// the array and reports one entry per check, in a fixed documented order:
///
///   parameter_conditions                 the array validates
///   canonical_shapes                     canonical pair has the bidiagonal shapes
///   idempotent_sum                       sum E_i = I, both families
///   idempotent_orthogonality             E_i E_j = delta_ij E_i, both families
///   idempotent_rank_one                  every E_i has rank one
///   spectral_decomposition               A = sum theta_i E_i, dual likewise
///   annihilating_polynomial              prod (A - theta_i I) = 0, dual likewise
///   power_basis_independence             minimal polynomials have degree d+1
///   idempotents_are_polynomials_in_the_matrix
///                                        E_i = Lagrange polynomial at A
///   one_step_overlap                     E_i A* E_j zero iff i-j > 1 below the
///                                        diagonal, nonzero at i-j = 1; dual too
///   split_decomposition                  the U_i are lines summing directly to V,
///                                        raised by A and lowered by A*
///   split_representation                 conjugation into a split basis matches
///                                        the closed form
///   split_variants                       likewise for the other three split bases
///   standard_representation              likewise for both standard bases; the
///                                        Hessenberg forms have constant row sums
///   split_transition                     M_standard T = M_split, T Tinv = I,
///                                        D* T = T B*
///   dual_split_transition                the same over the dual array
///   antidiagonal_transition              both split-to-split transitions are
///                                        antidiagonal, carry the linked bases
///                                        onto each other, and multiply to nu I
///   nu_agreement                         closed form = 1/tr(E_0 E*_0) and the
///                                        sandwich identities
///   standard_transition                  product route = entry formula, first
///                                        column all ones, carries linked bases
///   standard_similarity                  P H = D P and P* H* = D* P*
///   nu_transition_products               P P* = P* P = nu I
///   recognition_round_trip               recognize(canonical pair) recovers the
///                                        array
///   duality_involution                   dualizing twice is the identity and
///                                        extraction commutes with dualizing
///   triangular_readoff                   dual eigenvalues read off the diagonal
///                                        of the upper triangular member in split
///                                        and standard coordinates
///
/// An invalid array yields the single failing parameter_conditions entry.
std::vector<VerifyCheck> run_identity_suite(const ParameterArray& p);

}  // namespace thp
