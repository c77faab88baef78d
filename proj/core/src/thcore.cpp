#include "thp/thcore.hpp"

#include <cstddef>

#include "thp/errors.hpp"

namespace thp {
namespace {

std::string ordinal(std::size_t i) { return std::to_string(i); }

void check_field(const std::vector<Scalar>& xs, const FieldSpec& f,
                 const char* name) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i].field() == f)) {
      throw DomainError(std::string(name) + "[" + ordinal(i) +
                        "] lies in a different field than the array declares");
    }
  }
}

}  // namespace

ValidationReport validate(const ParameterArray& p) {
  ValidationReport r;
  if (p.theta.empty()) {
    r.detail = "theta is empty; a system of diameter d needs d+1 eigenvalues";
    return r;
  }
  const std::size_t d = p.theta.size() - 1;
  if (p.theta_star.size() != d + 1) {
    r.detail = "theta_star has " + ordinal(p.theta_star.size()) +
               " entries but theta has " + ordinal(d + 1);
    return r;
  }
  if (p.phi.size() != d) {
    r.detail = "phi has " + ordinal(p.phi.size()) + " entries; expected " +
               ordinal(d);
    return r;
  }
  check_field(p.theta, p.field, "theta");
  check_field(p.theta_star, p.field, "theta_star");
  check_field(p.phi, p.field, "phi");
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      if (p.theta[i] == p.theta[j]) {
        r.detail = "theta[" + ordinal(i) + "] equals theta[" + ordinal(j) + "]";
        return r;
      }
      if (p.theta_star[i] == p.theta_star[j]) {
        r.detail =
            "theta_star[" + ordinal(i) + "] equals theta_star[" + ordinal(j) + "]";
        return r;
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (p.phi[i].is_zero()) {
      r.detail = "phi[" + ordinal(i + 1) + "] is zero";
      return r;
    }
  }
  r.ok = true;
  return r;
}

std::vector<Matrix> primitive_idempotents(const Matrix& a,
                                          const std::vector<Scalar>& eigenvalues) {
  if (a.rows() != a.cols()) {
    throw DomainError("primitive idempotents need a square matrix");
  }
  const std::size_t m = eigenvalues.size();
  if (m == 0) throw DomainError("empty eigenvalue list");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (eigenvalues[i] == eigenvalues[j]) {
        throw DomainError("eigenvalue list has a repeat; projections need "
                          "pairwise distinct eigenvalues");
      }
    }
  }
  const FieldSpec f = a.field();
  const Matrix id = Matrix::identity(a.rows(), f);
  std::vector<Matrix> e;
  e.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix prod = id;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      Scalar denom = eigenvalues[i] - eigenvalues[j];
      prod = prod * (a - eigenvalues[j] * id);
      prod = denom.inverse() * prod;
    }
    e.push_back(prod);
  }

  // When the list covers the whole spectrum (m = order of the matrix) the
  // projections must obey the standard identities; re-check them so a bad
  // caller fails loudly instead of poisoning later arithmetic.
  if (m == a.rows()) {
    Matrix sum(a.rows(), a.cols(), f);
    for (const Matrix& ei : e) sum = sum + ei;
    if (!(sum == id)) {
      throw StructuralError("eigenprojections do not sum to the identity");
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Matrix prod = e[i] * e[j];
        if (i == j ? !(prod == e[i]) : !prod.is_zero()) {
          throw StructuralError("eigenprojections are not orthogonal idempotents");
        }
      }
    }
    Matrix recon(a.rows(), a.cols(), f);
    for (std::size_t i = 0; i < m; ++i) recon = recon + eigenvalues[i] * e[i];
    if (!(recon == a)) {
      throw StructuralError("weighted sum of eigenprojections does not "
                            "reconstruct the matrix");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (rank(e[i]) != 1) {
        throw StructuralError("an eigenprojection does not have rank one");
      }
    }
    Matrix ann = id;
    for (std::size_t i = 0; i < m; ++i) {
      ann = ann * (a - eigenvalues[i] * id);
    }
    if (!ann.is_zero()) {
      throw StructuralError("the eigenvalue list does not annihilate the matrix");
    }
  }
  return e;
}

THSystem build_canonical_system(const ParameterArray& p) {
  ValidationReport v = validate(p);
  if (!v.ok) throw DomainError("invalid parameter array: " + v.detail);
  const std::size_t d = p.d();
  const std::size_t n = d + 1;
  const FieldSpec f = p.field;

  Matrix a(n, n, f);
  for (std::size_t i = 0; i < n; ++i) a.at(i, i) = p.theta[d - i];
  for (std::size_t i = 1; i < n; ++i) a.at(i, i - 1) = p.phi[i - 1];

  Matrix a_star(n, n, f);
  for (std::size_t i = 0; i < n; ++i) a_star.at(i, i) = p.theta_star[i];
  for (std::size_t i = 0; i + 1 < n; ++i) a_star.at(i, i + 1) = Scalar::one(f);

  THSystem s;
  s.field = f;
  s.A = a;
  s.A_star = a_star;
  s.E = primitive_idempotents(a, p.theta);
  s.E_star = primitive_idempotents(a_star, p.theta_star);
  s.theta = p.theta;
  s.theta_star = p.theta_star;
  return s;
}

ParameterArray dual_parameter_array(const ParameterArray& p) {
  ParameterArray q;
  q.field = p.field;
  q.theta = p.theta_star;
  q.theta_star = p.theta;
  q.phi.assign(p.phi.rbegin(), p.phi.rend());
  return q;
}

THSystem dual_system(const THSystem& s) {
  THSystem t;
  t.field = s.field;
  t.A = s.A_star;
  t.A_star = s.A;
  t.E = s.E_star;
  t.E_star = s.E;
  t.theta = s.theta_star;
  t.theta_star = s.theta;
  return t;
}

THSystem conjugate_system(const THSystem& s, const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() != s.dim()) {
    throw DomainError("conjugating matrix has the wrong size");
  }
  Matrix gi = inverse(g);
  auto conj = [&](const Matrix& m) { return g * m * gi; };
  THSystem t;
  t.field = s.field;
  t.A = conj(s.A);
  t.A_star = conj(s.A_star);
  t.E.reserve(s.E.size());
  t.E_star.reserve(s.E_star.size());
  for (const Matrix& e : s.E) t.E.push_back(conj(e));
  for (const Matrix& e : s.E_star) t.E_star.push_back(conj(e));
  t.theta = s.theta;
  t.theta_star = s.theta_star;
  return t;
}

Scalar nu_from_parameters(const ParameterArray& p) {
  ValidationReport v = validate(p);
  if (!v.ok) throw DomainError("invalid parameter array: " + v.detail);
  const std::size_t d = p.d();
  Scalar num = Scalar::one(p.field);
  for (std::size_t i = 1; i <= d; ++i) {
    num *= p.theta[0] - p.theta[i];
    num *= p.theta_star[0] - p.theta_star[i];
  }
  Scalar den = Scalar::one(p.field);
  for (std::size_t i = 0; i < d; ++i) den *= p.phi[i];
  return num / den;
}

Scalar nu_from_idempotents(const THSystem& s) {
  Scalar t = trace(s.E[0] * s.E_star[0]);
  if (t.is_zero()) {
    throw DomainError("trace(E_0 E*_0) vanishes; the pair of orderings is not "
                      "a thin Hessenberg system");
  }
  return t.inverse();
}

}  // namespace thp
