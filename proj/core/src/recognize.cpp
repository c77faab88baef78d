#include "thp/recognize.hpp"

#include <algorithm>
#include <cstddef>

#include "thp/errors.hpp"

namespace thp {
namespace {

using std::size_t;

void check_pair(const MatrixPair& pair) {
  if (pair.A.rows() != pair.A.cols() || pair.A_star.rows() != pair.A_star.cols()) {
    throw DomainError("both members of a pair must be square");
  }
  if (pair.A.rows() != pair.A_star.rows()) {
    throw DomainError("the members of a pair must have the same size");
  }
  if (!(pair.A.field() == pair.A_star.field())) {
    throw DomainError("the members of a pair must share a field");
  }
}

// E_i b E_j = 0 for i - j > 1 and != 0 for i - j = 1.
bool one_step_overlap(const std::vector<Matrix>& e, const Matrix& b) {
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = 0; j < e.size(); ++j) {
      if (i <= j) continue;
      Matrix prod = e[i] * b * e[j];
      if (i - j == 1 ? prod.is_zero() : !prod.is_zero()) return false;
    }
  }
  return true;
}

bool scalars_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

}  // namespace

MultiplicityFreeReport is_multiplicity_free(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DomainError("multiplicity-freeness is a property of square matrices");
  }
  MultiplicityFreeReport report;
  Polynomial m = min_poly(a);
  if (m.degree() != a.rows()) {
    report.reason = "minimal polynomial has degree " + std::to_string(m.degree()) +
                    " but the matrix has order " + std::to_string(a.rows());
    return report;
  }
  RootsReport roots = roots_in_field(m);
  if (!roots.splits) {
    report.reason = "minimal polynomial does not split over the field";
    return report;
  }
  for (const auto& [root, multiplicity] : roots.roots) {
    if (multiplicity > 1) {
      report.reason = "minimal polynomial has a repeated root";
      return report;
    }
  }
  report.ok = true;
  for (const auto& [root, multiplicity] : roots.roots) {
    report.eigenvalues.push_back(root);
  }
  return report;
}

std::vector<std::vector<Scalar>> th_orderings(const MatrixPair& pair) {
  check_pair(pair);
  MultiplicityFreeReport mf = is_multiplicity_free(pair.A);
  if (!mf.ok) {
    throw DomainError("ordering search requires a multiplicity-free matrix: " +
                      mf.reason);
  }
  const size_t n = pair.A.rows();
  std::vector<Subspace> eigenspaces;
  eigenspaces.reserve(n);
  for (const Scalar& ev : mf.eigenvalues) {
    eigenspaces.push_back(Subspace::eigenspace(pair.A, ev));
  }

  std::vector<std::vector<Scalar>> orderings;
  for (size_t first = 0; first < n; ++first) {
    std::vector<size_t> order{first};
    std::vector<bool> used(n, false);
    used[first] = true;
    Subspace w = eigenspaces[first];
    bool ok = true;
    for (size_t step = 1; step < n; ++step) {
      w = w + w.image_under(pair.A_star);
      if (w.dim() != step + 1) {
        ok = false;
        break;
      }
      size_t next = n;
      for (size_t k = 0; k < n; ++k) {
        if (used[k] || !w.contains(eigenspaces[k])) continue;
        if (next != n) {  // two new eigenspaces cannot fit one new dimension
          ok = false;
        }
        next = k;
      }
      if (!ok || next == n) {
        ok = false;
        break;
      }
      used[next] = true;
      order.push_back(next);
    }
    if (!ok) continue;
    std::vector<Scalar> candidate;
    candidate.reserve(n);
    for (size_t k : order) candidate.push_back(mf.eigenvalues[k]);
    std::vector<Matrix> e = primitive_idempotents(pair.A, candidate);
    if (one_step_overlap(e, pair.A_star)) orderings.push_back(candidate);
  }
  return orderings;
}

ParameterArray extract_parameter_array(const THSystem& s) {
  ParameterArray p;
  p.field = s.field;
  p.theta = s.theta;
  p.theta_star = s.theta_star;
  BasisMatrix basis = make_basis(s, BasisKind::PhiSplit);
  RepresentationPair rep = represent(s, basis);
  for (size_t i = 1; i <= s.d(); ++i) p.phi.push_back(rep.B.at(i, i - 1));
  ValidationReport v = validate(p);
  if (!v.ok) {
    throw StructuralError("extracted parameters fail validation: " + v.detail);
  }
  RepresentationPair want = closed_form_representation(p, BasisKind::PhiSplit);
  if (!(rep.B == want.B) || !(rep.B_star == want.B_star)) {
    throw StructuralError("the split representation of the system does not "
                          "match the closed form of its parameters");
  }
  return p;
}

RecognitionReport recognize_th_pair(const MatrixPair& pair) {
  check_pair(pair);
  RecognitionReport report;
  MultiplicityFreeReport mf_a = is_multiplicity_free(pair.A);
  if (!mf_a.ok) {
    report.failure_reason = "A is not multiplicity-free: " + mf_a.reason;
    return report;
  }
  MultiplicityFreeReport mf_b = is_multiplicity_free(pair.A_star);
  if (!mf_b.ok) {
    report.failure_reason = "A_star is not multiplicity-free: " + mf_b.reason;
    return report;
  }
  std::vector<std::vector<Scalar>> orders_a = th_orderings(pair);
  if (orders_a.empty()) {
    report.failure_reason = "no admissible idempotent ordering for A";
    return report;
  }
  std::vector<std::vector<Scalar>> orders_b =
      th_orderings(MatrixPair{pair.A_star, pair.A});
  if (orders_b.empty()) {
    report.failure_reason = "no admissible idempotent ordering for A_star";
    return report;
  }

  for (const auto& theta : orders_a) {
    for (const auto& theta_star : orders_b) {
      THSystem s;
      s.field = pair.A.field();
      s.A = pair.A;
      s.A_star = pair.A_star;
      s.E = primitive_idempotents(pair.A, theta);
      s.E_star = primitive_idempotents(pair.A_star, theta_star);
      s.theta = theta;
      s.theta_star = theta_star;
      if (!one_step_overlap(s.E, s.A_star) ||
          !one_step_overlap(s.E_star, s.A)) {
        throw StructuralError("an ordering accepted by the flag search fails "
                              "the entrywise overlap conditions");
      }
      RecognizedSystem rs{s, extract_parameter_array(s)};
      report.systems.push_back(std::move(rs));
    }
  }
  std::sort(report.systems.begin(), report.systems.end(),
            [](const RecognizedSystem& x, const RecognizedSystem& y) {
              if (scalars_less(x.parameters.theta, y.parameters.theta)) return true;
              if (scalars_less(y.parameters.theta, x.parameters.theta)) return false;
              return scalars_less(x.parameters.theta_star, y.parameters.theta_star);
            });
  report.is_th_pair = true;
  return report;
}

std::vector<Scalar> dual_eigenvalues_from_triangular(const MatrixPair& pair) {
  check_pair(pair);
  if (!shape_of(pair.A).hessenberg) {
    throw DomainError("A must be Hessenberg (zero below the subdiagonal, "
                      "subdiagonal entries nonzero)");
  }
  if (!shape_of(pair.A_star).upper_triangular) {
    throw DomainError("A_star must be upper triangular");
  }
  std::vector<Scalar> diagonal;
  diagonal.reserve(pair.A_star.rows());
  for (size_t i = 0; i < pair.A_star.rows(); ++i) {
    diagonal.push_back(pair.A_star.at(i, i));
  }
  RecognitionReport report = recognize_th_pair(pair);
  if (!report.is_th_pair) {
    throw DomainError("the pair is not a thin Hessenberg pair: " +
                      report.failure_reason);
  }
  for (const RecognizedSystem& rs : report.systems) {
    if (rs.parameters.theta_star == diagonal) return diagonal;
  }
  throw DomainError("the diagonal of A_star is not a dual eigenvalue "
                    "sequence of the pair");
}

std::optional<IsomorphismWitness> isomorphic(const THSystem& s1,
                                             const THSystem& s2) {
  if (!(s1.field == s2.field)) {
    throw DomainError("isomorphism is only defined over a common field");
  }
  if (s1.dim() != s2.dim()) {
    throw DomainError("isomorphism is only defined for systems of equal "
                      "dimension");
  }
  if (extract_parameter_array(s1) != extract_parameter_array(s2)) {
    return std::nullopt;
  }
  Matrix m1 = make_basis(s1, BasisKind::PhiSplit).columns;
  Matrix m2 = make_basis(s2, BasisKind::PhiSplit).columns;
  Matrix gamma = m2 * inverse(m1);
  auto intertwines = [&](const Matrix& x, const Matrix& y) {
    return gamma * x == y * gamma;
  };
  bool ok = intertwines(s1.A, s2.A) && intertwines(s1.A_star, s2.A_star);
  for (size_t i = 0; ok && i <= s1.d(); ++i) {
    ok = intertwines(s1.E[i], s2.E[i]) && intertwines(s1.E_star[i], s2.E_star[i]);
  }
  if (!ok) {
    throw StructuralError("equal parameter arrays must yield an intertwining "
                          "map, but verification failed");
  }
  return IsomorphismWitness{gamma};
}

}  // namespace thp
