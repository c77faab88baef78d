#include "thp/verify.hpp"

#include <functional>
#include <optional>

#include "thp/bases.hpp"
#include "thp/errors.hpp"
#include "thp/recognize.hpp"

namespace thp {
namespace {

using std::size_t;
using Outcome = std::optional<std::string>;  // nullopt = pass

Outcome fail(std::string why) { return Outcome(std::move(why)); }

bool rows_sum_to(const Matrix& m, const Scalar& value) {
  for (size_t i = 0; i < m.rows(); ++i) {
    Scalar sum = Scalar::zero(m.field());
    for (size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j);
    if (!(sum == value)) return false;
  }
  return true;
}

bool is_antidiagonal_invertible(const Matrix& m) {
  const size_t n = m.rows();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      bool on = (j == n - 1 - i);
      if (on == m.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

struct SuiteContext {
  ParameterArray p;
  ParameterArray q;  // dual array
  THSystem s;
  Matrix id{1, 1, FieldSpec::rationals()};
  Scalar nu;
};

}  // namespace

std::vector<VerifyCheck> run_identity_suite(const ParameterArray& p) {
  std::vector<VerifyCheck> out;
  {
    ValidationReport v = validate(p);
    VerifyCheck first{"parameter_conditions", v.ok, v.ok ? "" : v.detail};
    out.push_back(first);
    if (!v.ok) return out;
  }

  SuiteContext c{p, dual_parameter_array(p), build_canonical_system(p),
                 Matrix::identity(p.d() + 1, p.field), nu_from_parameters(p)};
  const size_t d = p.d();
  const size_t n = d + 1;
  const FieldSpec f = p.field;
  const Scalar one = Scalar::one(f);

  auto run = [&](const char* name, const std::function<Outcome()>& body) {
    VerifyCheck check{name, false, ""};
    try {
      Outcome o = body();
      check.pass = !o.has_value();
      if (o) check.detail = *o;
    } catch (const StructuralError& e) {
      check.detail = e.what();
    } catch (const DomainError& e) {
      check.detail = e.what();
    }
    out.push_back(check);
  };

  run("canonical_shapes", [&]() -> Outcome {
    RepresentationPair want = closed_form_representation(p, BasisKind::PhiSplit);
    if (!(c.s.A == want.B)) return fail("A is not the closed-form split shape");
    if (!(c.s.A_star == want.B_star)) {
      return fail("A_star is not the closed-form split shape");
    }
    if (!shape_of(c.s.A).lower_bidiagonal) return fail("A is not lower bidiagonal");
    if (!shape_of(c.s.A_star).upper_bidiagonal) {
      return fail("A_star is not upper bidiagonal");
    }
    return std::nullopt;
  });

  run("idempotent_sum", [&]() -> Outcome {
    Matrix sum(n, n, f), sum_star(n, n, f);
    for (size_t i = 0; i <= d; ++i) {
      sum = sum + c.s.E[i];
      sum_star = sum_star + c.s.E_star[i];
    }
    if (!(sum == c.id)) return fail("sum of the E_i is not the identity");
    if (!(sum_star == c.id)) return fail("sum of the E*_i is not the identity");
    return std::nullopt;
  });

  run("idempotent_orthogonality", [&]() -> Outcome {
    for (const auto* family : {&c.s.E, &c.s.E_star}) {
      for (size_t i = 0; i <= d; ++i) {
        for (size_t j = 0; j <= d; ++j) {
          Matrix prod = (*family)[i] * (*family)[j];
          bool ok = (i == j) ? prod == (*family)[i] : prod.is_zero();
          if (!ok) return fail("E_i E_j is not delta_ij E_i");
        }
      }
    }
    return std::nullopt;
  });

  run("idempotent_rank_one", [&]() -> Outcome {
    for (const auto* family : {&c.s.E, &c.s.E_star}) {
      for (const Matrix& e : *family) {
        if (rank(e) != 1) return fail("an idempotent does not have rank one");
      }
    }
    return std::nullopt;
  });

  run("spectral_decomposition", [&]() -> Outcome {
    Matrix a(n, n, f), a_star(n, n, f);
    for (size_t i = 0; i <= d; ++i) {
      a = a + p.theta[i] * c.s.E[i];
      a_star = a_star + p.theta_star[i] * c.s.E_star[i];
    }
    if (!(a == c.s.A)) return fail("sum theta_i E_i is not A");
    if (!(a_star == c.s.A_star)) return fail("sum theta*_i E*_i is not A_star");
    return std::nullopt;
  });

  run("annihilating_polynomial", [&]() -> Outcome {
    Matrix prod = c.id, prod_star = c.id;
    for (size_t i = 0; i <= d; ++i) {
      prod = prod * (c.s.A - p.theta[i] * c.id);
      prod_star = prod_star * (c.s.A_star - p.theta_star[i] * c.id);
    }
    if (!prod.is_zero()) return fail("prod (A - theta_i I) is not zero");
    if (!prod_star.is_zero()) return fail("prod (A* - theta*_i I) is not zero");
    return std::nullopt;
  });

  run("power_basis_independence", [&]() -> Outcome {
    if (min_poly(c.s.A).degree() != n) {
      return fail("the powers I, A, ..., A^d are dependent");
    }
    if (min_poly(c.s.A_star).degree() != n) {
      return fail("the powers I, A*, ..., A*^d are dependent");
    }
    return std::nullopt;
  });

  run("idempotents_are_polynomials_in_the_matrix", [&]() -> Outcome {
    for (size_t i = 0; i <= d; ++i) {
      // build the Lagrange polynomial through a separate code path and
      // evaluate it at the matrix by Horner
      for (auto [values, matrix, family] :
           {std::tuple{&p.theta, &c.s.A, &c.s.E},
            std::tuple{&p.theta_star, &c.s.A_star, &c.s.E_star}}) {
        Polynomial lagrange = Polynomial::constant(one);
        for (size_t j = 0; j <= d; ++j) {
          if (j == i) continue;
          Scalar scale = ((*values)[i] - (*values)[j]).inverse();
          lagrange = lagrange * (Polynomial::x(f) -
                                 Polynomial::constant((*values)[j])) *
                     Polynomial::constant(scale);
        }
        if (!(lagrange(*matrix) == (*family)[i])) {
          return fail("a Lagrange polynomial evaluated at the matrix missed "
                      "its idempotent");
        }
      }
    }
    return std::nullopt;
  });

  run("one_step_overlap", [&]() -> Outcome {
    for (auto [family, other] : {std::pair{&c.s.E, &c.s.A_star},
                                 std::pair{&c.s.E_star, &c.s.A}}) {
      for (size_t i = 0; i <= d; ++i) {
        for (size_t j = 0; j + 1 <= i; ++j) {
          Matrix prod = (*family)[i] * (*other) * (*family)[j];
          if (i - j == 1 && prod.is_zero()) {
            return fail("a subdiagonal overlap E_i X E_{i-1} vanishes");
          }
          if (i - j > 1 && !prod.is_zero()) {
            return fail("an overlap E_i X E_j with i - j > 1 is nonzero");
          }
        }
      }
    }
    return std::nullopt;
  });

  run("split_decomposition", [&]() -> Outcome {
    SplitDecomposition sd = split_decomposition(c.s);
    Matrix m = make_basis(c.s, BasisKind::PhiSplit).columns;
    for (size_t i = 0; i <= d; ++i) {
      if (!sd.U[i].contains(column(m, i))) {
        return fail("a split basis vector escapes its summand");
      }
    }
    return std::nullopt;
  });

  run("split_representation", [&]() -> Outcome {
    RepresentationPair got = represent(c.s, make_basis(c.s, BasisKind::PhiSplit));
    RepresentationPair want = closed_form_representation(p, BasisKind::PhiSplit);
    if (!(got.B == want.B) || !(got.B_star == want.B_star)) {
      return fail("split representation disagrees with the closed form");
    }
    return std::nullopt;
  });

  run("split_variants", [&]() -> Outcome {
    for (BasisKind k : {BasisKind::PhiStarSplit, BasisKind::InvPhiSplit,
                        BasisKind::InvPhiStarSplit}) {
      RepresentationPair got = represent(c.s, make_basis(c.s, k));
      RepresentationPair want = closed_form_representation(p, k);
      if (!(got.B == want.B) || !(got.B_star == want.B_star)) {
        return fail("the " + to_string(k) +
                    " representation disagrees with the closed form");
      }
    }
    return std::nullopt;
  });

  run("standard_representation", [&]() -> Outcome {
    for (BasisKind k : {BasisKind::PhiStandard, BasisKind::PhiStarStandard}) {
      RepresentationPair got = represent(c.s, make_basis(c.s, k));
      RepresentationPair want = closed_form_representation(p, k);
      if (!(got.B == want.B) || !(got.B_star == want.B_star)) {
        return fail("the " + to_string(k) +
                    " representation disagrees with the closed form");
      }
    }
    Matrix h = hessenberg_form(p);
    Matrix h_star = hessenberg_form(c.q);
    if (!shape_of(h).hessenberg || !shape_of(h_star).hessenberg) {
      return fail("a standard-basis action is not Hessenberg");
    }
    if (!rows_sum_to(h, p.theta[0])) {
      return fail("rows of the Hessenberg form do not sum to theta_0");
    }
    if (!rows_sum_to(h_star, p.theta_star[0])) {
      return fail("rows of the dual Hessenberg form do not sum to theta*_0");
    }
    return std::nullopt;
  });

  run("split_transition", [&]() -> Outcome {
    Matrix t = transition_matrix(p, BasisKind::PhiStandard, BasisKind::PhiSplit);
    if (!(t * standard_to_split_inverse(p) == c.id)) {
      return fail("the closed-form inverse does not invert the transition");
    }
    Vector eta0 = default_seed(c.s, BasisKind::PhiSplit);
    Matrix m_std = make_basis(c.s, BasisKind::PhiStandard, eta0).columns;
    Matrix m_split = make_basis(c.s, BasisKind::PhiSplit, eta0).columns;
    if (!(m_std * t == m_split)) {
      return fail("the transition does not carry the standard basis to the "
                  "split basis");
    }
    Matrix b_star = closed_form_representation(p, BasisKind::PhiSplit).B_star;
    if (!(Matrix::diagonal(p.theta_star) * t == t * b_star)) {
      return fail("D* T = T B* fails");
    }
    return std::nullopt;
  });

  run("dual_split_transition", [&]() -> Outcome {
    Matrix t = transition_matrix(p, BasisKind::PhiStarStandard,
                                 BasisKind::PhiStarSplit);
    if (!(t == transition_matrix(c.q, BasisKind::PhiStandard,
                                 BasisKind::PhiSplit))) {
      return fail("the dual transition is not the transition of the dual");
    }
    if (!(t * standard_to_split_inverse(c.q) == c.id)) {
      return fail("the closed-form inverse does not invert the dual transition");
    }
    Vector etas0 = default_seed(c.s, BasisKind::PhiStarSplit);
    Matrix m_std = make_basis(c.s, BasisKind::PhiStarStandard, etas0).columns;
    Matrix m_split = make_basis(c.s, BasisKind::PhiStarSplit, etas0).columns;
    if (!(m_std * t == m_split)) {
      return fail("the dual transition does not carry the dual standard basis "
                  "to the dual split basis");
    }
    Matrix b = closed_form_representation(p, BasisKind::PhiStarSplit).B;
    if (!(Matrix::diagonal(p.theta) * t == t * b)) {
      return fail("D T* = T* B fails");
    }
    return std::nullopt;
  });

  run("antidiagonal_transition", [&]() -> Outcome {
    Matrix z = transition_matrix(p, BasisKind::PhiSplit, BasisKind::PhiStarSplit);
    Matrix z_star =
        transition_matrix(p, BasisKind::PhiStarSplit, BasisKind::PhiSplit);
    if (!is_antidiagonal_invertible(z) || !is_antidiagonal_invertible(z_star)) {
      return fail("a split-to-split transition is not antidiagonal");
    }
    if (!(z * z_star == c.nu * c.id) || !(z_star * z == c.nu * c.id)) {
      return fail("the split-to-split transitions do not multiply to nu I");
    }
    {
      Vector etas0 = default_seed(c.s, BasisKind::PhiStarSplit);
      Vector eta0 = c.s.E[0] * etas0;
      Matrix m_split = make_basis(c.s, BasisKind::PhiSplit, eta0).columns;
      Matrix m_dual = make_basis(c.s, BasisKind::PhiStarSplit, etas0).columns;
      if (!(m_split * z == m_dual)) {
        return fail("the transition misses the linked dual split basis");
      }
    }
    {
      Vector eta0 = default_seed(c.s, BasisKind::PhiSplit);
      Vector etas0 = c.s.E_star[0] * eta0;
      Matrix m_split = make_basis(c.s, BasisKind::PhiSplit, eta0).columns;
      Matrix m_dual = make_basis(c.s, BasisKind::PhiStarSplit, etas0).columns;
      if (!(m_dual * z_star == m_split)) {
        return fail("the dual transition misses the linked split basis");
      }
    }
    return std::nullopt;
  });

  run("nu_agreement", [&]() -> Outcome {
    if (!(nu_from_idempotents(c.s) == c.nu)) {
      return fail("1/tr(E_0 E*_0) disagrees with the closed form");
    }
    if (!(trace(c.s.E[0] * c.s.E_star[0]) == c.nu.inverse())) {
      return fail("tr(E_0 E*_0) is not 1/nu");
    }
    if (!(c.nu * (c.s.E[0] * c.s.E_star[0] * c.s.E[0]) == c.s.E[0])) {
      return fail("nu E_0 E*_0 E_0 = E_0 fails");
    }
    if (!(c.nu * (c.s.E_star[0] * c.s.E[0] * c.s.E_star[0]) == c.s.E_star[0])) {
      return fail("nu E*_0 E_0 E*_0 = E*_0 fails");
    }
    return std::nullopt;
  });

  run("standard_transition", [&]() -> Outcome {
    // transition_matrix itself compares the product route with the entry
    // formula and throws StructuralError on disagreement
    Matrix pm = transition_matrix(p, BasisKind::PhiStarStandard,
                                  BasisKind::PhiStandard);
    Matrix pm_star = transition_matrix(p, BasisKind::PhiStandard,
                                       BasisKind::PhiStarStandard);
    for (size_t i = 0; i <= d; ++i) {
      if (!(pm.at(i, 0) == one) || !(pm_star.at(i, 0) == one)) {
        return fail("a standard-to-standard transition's first column is not "
                    "all ones");
      }
    }
    {
      Vector eta0 = default_seed(c.s, BasisKind::PhiStandard);
      Vector etas0 = c.s.E_star[0] * eta0;
      Matrix m_std = make_basis(c.s, BasisKind::PhiStandard, eta0).columns;
      Matrix m_dual = make_basis(c.s, BasisKind::PhiStarStandard, etas0).columns;
      if (!(m_dual * pm == m_std)) {
        return fail("the transition misses the linked standard basis");
      }
    }
    {
      Vector etas0 = default_seed(c.s, BasisKind::PhiStarStandard);
      Vector eta0 = c.s.E[0] * etas0;
      Matrix m_std = make_basis(c.s, BasisKind::PhiStandard, eta0).columns;
      Matrix m_dual = make_basis(c.s, BasisKind::PhiStarStandard, etas0).columns;
      if (!(m_std * pm_star == m_dual)) {
        return fail("the transition misses the linked dual standard basis");
      }
    }
    return std::nullopt;
  });

  run("standard_similarity", [&]() -> Outcome {
    Matrix pm = transition_matrix(p, BasisKind::PhiStarStandard,
                                  BasisKind::PhiStandard);
    Matrix pm_star = transition_matrix(p, BasisKind::PhiStandard,
                                       BasisKind::PhiStarStandard);
    if (!(pm * hessenberg_form(p) == Matrix::diagonal(p.theta) * pm)) {
      return fail("P H = D P fails");
    }
    if (!(pm_star * hessenberg_form(c.q) ==
          Matrix::diagonal(p.theta_star) * pm_star)) {
      return fail("P* H* = D* P* fails");
    }
    return std::nullopt;
  });

  run("nu_transition_products", [&]() -> Outcome {
    Matrix pm = transition_matrix(p, BasisKind::PhiStarStandard,
                                  BasisKind::PhiStandard);
    Matrix pm_star = transition_matrix(p, BasisKind::PhiStandard,
                                       BasisKind::PhiStarStandard);
    if (!(pm * pm_star == c.nu * c.id) || !(pm_star * pm == c.nu * c.id)) {
      return fail("the standard-to-standard transitions do not multiply to "
                  "nu I");
    }
    return std::nullopt;
  });

  run("recognition_round_trip", [&]() -> Outcome {
    RecognitionReport report = recognize_th_pair(MatrixPair{c.s.A, c.s.A_star});
    if (!report.is_th_pair) {
      return fail("the canonical pair is not recognized: " +
                  report.failure_reason);
    }
    for (const RecognizedSystem& rs : report.systems) {
      if (rs.parameters == p) return std::nullopt;
    }
    return fail("no recognized system carries the original array");
  });

  run("duality_involution", [&]() -> Outcome {
    if (!(dual_parameter_array(c.q) == p)) {
      return fail("dualizing the parameter array twice moved it");
    }
    if (!(extract_parameter_array(dual_system(c.s)) == c.q)) {
      return fail("extraction does not commute with dualizing");
    }
    return std::nullopt;
  });

  run("triangular_readoff", [&]() -> Outcome {
    RepresentationPair split = closed_form_representation(p, BasisKind::PhiSplit);
    if (!(dual_eigenvalues_from_triangular(MatrixPair{split.B, split.B_star}) ==
          p.theta_star)) {
      return fail("read-off fails in split coordinates");
    }
    RepresentationPair std_rep =
        closed_form_representation(p, BasisKind::PhiStandard);
    if (!(dual_eigenvalues_from_triangular(
              MatrixPair{std_rep.B, std_rep.B_star}) == p.theta_star)) {
      return fail("read-off fails in standard coordinates");
    }
    return std::nullopt;
  });

  return out;
}

}  // namespace thp
