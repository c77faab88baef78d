#include "thp/bases.hpp"

#include <cstddef>

#include "thp/errors.hpp"

namespace thp {
namespace {

using std::size_t;

void require(bool cond, const char* what) {
  if (!cond) throw DomainError(what);
}

ParameterArray checked(const ParameterArray& p) {
  ValidationReport v = validate(p);
  if (!v.ok) throw DomainError("invalid parameter array: " + v.detail);
  return p;
}

void check_candidate(const THSystem& s, const Matrix& m) {
  require(m.rows() == s.dim() && m.cols() == s.dim(),
          "candidate basis must be square of the system's dimension");
  require(m.field() == s.field, "candidate basis lies in a different field");
}

// B = M^-1 A M for both members, or nothing when M is singular.
struct ConjugatedPair {
  Matrix b;
  Matrix b_star;
};
std::optional<ConjugatedPair> conjugate_into(const THSystem& s, const Matrix& m) {
  std::optional<Matrix> mi = try_inverse(m);
  if (!mi) return std::nullopt;
  return ConjugatedPair{*mi * s.A * m, *mi * s.A_star * m};
}

bool rows_sum_to(const Matrix& m, const Scalar& value) {
  for (size_t i = 0; i < m.rows(); ++i) {
    Scalar sum = Scalar::zero(m.field());
    for (size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j);
    if (!(sum == value)) return false;
  }
  return true;
}

}  // namespace

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::PhiSplit: return "phi-split";
    case BasisKind::PhiStarSplit: return "phi-star-split";
    case BasisKind::InvPhiSplit: return "inv-phi-split";
    case BasisKind::InvPhiStarSplit: return "inv-phi-star-split";
    case BasisKind::PhiStandard: return "phi-standard";
    case BasisKind::PhiStarStandard: return "phi-star-standard";
  }
  throw DomainError("unknown basis kind");
}

BasisKind basis_kind_from_string(const std::string& text) {
  if (text == "phi-split") return BasisKind::PhiSplit;
  if (text == "phi-star-split") return BasisKind::PhiStarSplit;
  if (text == "inv-phi-split") return BasisKind::InvPhiSplit;
  if (text == "inv-phi-star-split") return BasisKind::InvPhiStarSplit;
  if (text == "phi-standard") return BasisKind::PhiStandard;
  if (text == "phi-star-standard") return BasisKind::PhiStarStandard;
  throw ParseError("unknown basis name \"" + text +
                   "\"; expected one of phi-split, phi-star-split, "
                   "inv-phi-split, inv-phi-star-split, phi-standard, "
                   "phi-star-standard");
}

bool seeded_from_eigenspace_of_A(BasisKind kind) {
  switch (kind) {
    case BasisKind::PhiSplit:
    case BasisKind::InvPhiSplit:
    case BasisKind::PhiStandard:
      return true;
    case BasisKind::PhiStarSplit:
    case BasisKind::InvPhiStarSplit:
    case BasisKind::PhiStarStandard:
      return false;
  }
  throw DomainError("unknown basis kind");
}

Vector default_seed(const THSystem& s, BasisKind kind) {
  const Matrix& proj = seeded_from_eigenspace_of_A(kind) ? s.E[0] : s.E_star[0];
  for (size_t j = 0; j < proj.cols(); ++j) {
    Vector c = column(proj, j);
    if (!c.is_zero()) return c;
  }
  throw StructuralError("an eigenprojection is the zero matrix");
}

BasisMatrix make_basis(const THSystem& s, BasisKind kind, const Vector& seed) {
  require(seed.dim() == s.dim(), "seed has the wrong dimension");
  require(seed.field() == s.field, "seed lies in a different field");
  require(!seed.is_zero(), "seed must be nonzero");
  const Matrix& proj = seeded_from_eigenspace_of_A(kind) ? s.E[0] : s.E_star[0];
  require(proj * seed == seed, "seed is not fixed by the relevant "
          "eigenprojection, so it does not lie in the seeding eigenspace");

  const size_t d = s.d();
  std::vector<Vector> v(d + 1, Vector(s.dim(), s.field));
  switch (kind) {
    case BasisKind::PhiSplit:
      v[d] = seed;
      for (size_t i = d; i-- > 0;) {
        v[i] = s.A_star * v[i + 1] - s.theta_star[i + 1] * v[i + 1];
      }
      break;
    case BasisKind::InvPhiSplit:
      v[0] = seed;
      for (size_t i = 1; i <= d; ++i) {
        v[i] = s.A_star * v[i - 1] - s.theta_star[d - i + 1] * v[i - 1];
      }
      break;
    case BasisKind::PhiStarSplit:
      v[d] = seed;
      for (size_t i = d; i-- > 0;) {
        v[i] = s.A * v[i + 1] - s.theta[i + 1] * v[i + 1];
      }
      break;
    case BasisKind::InvPhiStarSplit:
      v[0] = seed;
      for (size_t i = 1; i <= d; ++i) {
        v[i] = s.A * v[i - 1] - s.theta[d - i + 1] * v[i - 1];
      }
      break;
    case BasisKind::PhiStandard:
      for (size_t i = 0; i <= d; ++i) v[i] = s.E_star[i] * seed;
      break;
    case BasisKind::PhiStarStandard:
      for (size_t i = 0; i <= d; ++i) v[i] = s.E[i] * seed;
      break;
  }

  BasisMatrix b;
  b.kind = kind;
  b.columns = from_columns(v);
  b.seed = seed;
  if (!try_inverse(b.columns)) {
    throw StructuralError("the " + to_string(kind) +
                          " construction produced dependent vectors");
  }
  return b;
}

BasisMatrix make_basis(const THSystem& s, BasisKind kind) {
  return make_basis(s, kind, default_seed(s, kind));
}

RepresentationPair represent(const THSystem& s, const BasisMatrix& basis) {
  check_candidate(s, basis.columns);
  std::optional<ConjugatedPair> c = conjugate_into(s, basis.columns);
  if (!c) throw DomainError("basis columns are singular");
  return RepresentationPair{c->b, c->b_star};
}

Matrix hessenberg_form(const ParameterArray& p0) {
  const ParameterArray p = checked(p0);
  const long long d = static_cast<long long>(p.d());
  const FieldSpec f = p.field;
  const auto& th = p.theta;
  const auto& ts = p.theta_star;
  Matrix h(p.d() + 1, p.d() + 1, f);
  for (long long i = 0; i <= d; ++i) {
    for (long long j = 0; j <= d; ++j) {
      if (i > j + 1) continue;  // below the subdiagonal
      auto denominator = [&](long long hh) {
        Scalar den = Scalar::one(f);
        for (long long k = hh; k <= j - 1; ++k) den *= ts[j] - ts[k];
        for (long long k = j + 1; k <= d; ++k) den *= ts[j] - ts[k];
        return den;
      };
      Scalar total = Scalar::zero(f);
      for (long long hh = i; hh <= j; ++hh) {
        Scalar num = th[d - hh];
        for (long long k = hh + 1; k <= d; ++k) num *= ts[i] - ts[k];
        total += num / denominator(hh);
      }
      const long long lo = (i == 0) ? 0 : i - 1;
      const long long hi = (j == d) ? j - 1 : j;
      for (long long hh = lo; hh <= hi; ++hh) {
        Scalar num = p.phi[hh];  // phi_{h+1}
        for (long long k = hh + 2; k <= d; ++k) num *= ts[i] - ts[k];
        total += num / denominator(hh);
      }
      h.at(i, j) = total;
    }
  }
  return h;
}

RepresentationPair closed_form_representation(const ParameterArray& p0,
                                              BasisKind kind) {
  const ParameterArray p = checked(p0);
  const size_t d = p.d();
  const size_t n = d + 1;
  const FieldSpec f = p.field;
  const Scalar one = Scalar::one(f);
  RepresentationPair r{Matrix(n, n, f), Matrix(n, n, f)};
  switch (kind) {
    case BasisKind::PhiSplit:
      for (size_t i = 0; i < n; ++i) r.B.at(i, i) = p.theta[d - i];
      for (size_t i = 1; i < n; ++i) r.B.at(i, i - 1) = p.phi[i - 1];
      for (size_t i = 0; i < n; ++i) r.B_star.at(i, i) = p.theta_star[i];
      for (size_t i = 1; i < n; ++i) r.B_star.at(i - 1, i) = one;
      break;
    case BasisKind::PhiStarSplit:
      for (size_t i = 0; i < n; ++i) r.B.at(i, i) = p.theta[i];
      for (size_t i = 1; i < n; ++i) r.B.at(i - 1, i) = one;
      for (size_t i = 0; i < n; ++i) r.B_star.at(i, i) = p.theta_star[d - i];
      for (size_t i = 1; i < n; ++i) r.B_star.at(i, i - 1) = p.phi[d - i];
      break;
    case BasisKind::InvPhiSplit:
      for (size_t i = 0; i < n; ++i) r.B.at(i, i) = p.theta[i];
      for (size_t i = 1; i < n; ++i) r.B.at(i - 1, i) = p.phi[d - i];
      for (size_t i = 0; i < n; ++i) r.B_star.at(i, i) = p.theta_star[d - i];
      for (size_t i = 1; i < n; ++i) r.B_star.at(i, i - 1) = one;
      break;
    case BasisKind::InvPhiStarSplit:
      for (size_t i = 0; i < n; ++i) r.B.at(i, i) = p.theta[d - i];
      for (size_t i = 1; i < n; ++i) r.B.at(i, i - 1) = one;
      for (size_t i = 0; i < n; ++i) r.B_star.at(i, i) = p.theta_star[i];
      for (size_t i = 1; i < n; ++i) r.B_star.at(i - 1, i) = p.phi[i - 1];
      break;
    case BasisKind::PhiStandard:
      r.B = hessenberg_form(p);
      r.B_star = Matrix::diagonal(p.theta_star);
      break;
    case BasisKind::PhiStarStandard:
      r.B = Matrix::diagonal(p.theta);
      r.B_star = hessenberg_form(dual_parameter_array(p));
      break;
  }
  return r;
}

namespace {

// Upper triangular, entry (i, j) = prod_{k=j+1}^{d} (ts_i - ts_k).
Matrix standard_to_split(const ParameterArray& p) {
  const size_t d = p.d();
  Matrix t(d + 1, d + 1, p.field);
  for (size_t i = 0; i <= d; ++i) {
    for (size_t j = i; j <= d; ++j) {
      Scalar prod = Scalar::one(p.field);
      for (size_t k = j + 1; k <= d; ++k) prod *= p.theta_star[i] - p.theta_star[k];
      t.at(i, j) = prod;
    }
  }
  return t;
}

// Antidiagonal, entry (i, d-i) = prod_{k=1}^{d} (theta_0 - theta_k)
//                                / (phi_{i+1} ... phi_d).
Matrix split_to_dual_split(const ParameterArray& p) {
  const size_t d = p.d();
  Matrix z(d + 1, d + 1, p.field);
  Scalar full = Scalar::one(p.field);
  for (size_t k = 1; k <= d; ++k) full *= p.theta[0] - p.theta[k];
  for (size_t i = 0; i <= d; ++i) {
    Scalar den = Scalar::one(p.field);
    for (size_t k = i + 1; k <= d; ++k) den *= p.phi[k - 1];
    z.at(i, d - i) = full / den;
  }
  return z;
}

// Entry formula for the transition from {E_i eta*_0} to {E*_i eta_0}:
// P_ij = C_j * sum_{h=0}^{d} prod_{l=0}^{h-1} (th_i - th_{d-l})(ts_j - ts_l)
//                            / (phi_1 ... phi_h)
// with C_j = prod_{k=1}^{d} (ts_0 - ts_k) / prod_{k != j} (ts_j - ts_k).
Matrix dual_standard_to_standard_closed(const ParameterArray& p) {
  const size_t d = p.d();
  const FieldSpec f = p.field;
  Scalar top = Scalar::one(f);
  for (size_t k = 1; k <= d; ++k) top *= p.theta_star[0] - p.theta_star[k];
  Matrix m(d + 1, d + 1, f);
  for (size_t j = 0; j <= d; ++j) {
    Scalar bottom = Scalar::one(f);
    for (size_t k = 0; k <= d; ++k) {
      if (k != j) bottom *= p.theta_star[j] - p.theta_star[k];
    }
    const Scalar cj = top / bottom;
    for (size_t i = 0; i <= d; ++i) {
      Scalar sum = Scalar::zero(f);
      Scalar term = Scalar::one(f);  // running value of the h-th summand
      sum += term;
      for (size_t h = 1; h <= d; ++h) {
        term *= p.theta[i] - p.theta[d - h + 1];
        term *= p.theta_star[j] - p.theta_star[h - 1];
        term /= p.phi[h - 1];
        sum += term;
      }
      m.at(i, j) = cj * sum;
    }
  }
  return m;
}

}  // namespace

Matrix standard_to_split_inverse(const ParameterArray& p0) {
  const ParameterArray p = checked(p0);
  const size_t d = p.d();
  Matrix t(d + 1, d + 1, p.field);
  for (size_t i = 0; i <= d; ++i) {
    for (size_t j = i; j <= d; ++j) {
      Scalar den = Scalar::one(p.field);
      for (size_t h = i; h < j; ++h) den *= p.theta_star[j] - p.theta_star[h];
      for (size_t h = j + 1; h <= d; ++h) den *= p.theta_star[j] - p.theta_star[h];
      t.at(i, j) = den.inverse();
    }
  }
  return t;
}

Matrix transition_matrix(const ParameterArray& p0, BasisKind from, BasisKind to) {
  const ParameterArray p = checked(p0);
  const ParameterArray q = dual_parameter_array(p);
  if (from == BasisKind::PhiStandard && to == BasisKind::PhiSplit) {
    return standard_to_split(p);
  }
  if (from == BasisKind::PhiStarStandard && to == BasisKind::PhiStarSplit) {
    return standard_to_split(q);
  }
  if (from == BasisKind::PhiSplit && to == BasisKind::PhiStarSplit) {
    return split_to_dual_split(p);
  }
  if (from == BasisKind::PhiStarSplit && to == BasisKind::PhiSplit) {
    return split_to_dual_split(q);
  }
  if (from == BasisKind::PhiStarStandard && to == BasisKind::PhiStandard) {
    Matrix product = standard_to_split(q) * split_to_dual_split(q) *
                     standard_to_split_inverse(p);
    Matrix closed = dual_standard_to_standard_closed(p);
    if (!(product == closed)) {
      throw StructuralError("the product route and the entry formula for the "
                            "standard-to-standard transition disagree");
    }
    return closed;
  }
  if (from == BasisKind::PhiStandard && to == BasisKind::PhiStarStandard) {
    Matrix product = standard_to_split(p) * split_to_dual_split(p) *
                     standard_to_split_inverse(q);
    Matrix closed = dual_standard_to_standard_closed(q);
    if (!(product == closed)) {
      throw StructuralError("the product route and the entry formula for the "
                            "standard-to-standard transition disagree");
    }
    return closed;
  }
  throw UnsupportedError("no transition formula from " + to_string(from) +
                         " to " + to_string(to) + " is available");
}

SplitDecomposition split_decomposition(const THSystem& s) {
  const size_t d = s.d();
  SplitDecomposition out;
  out.U.reserve(d + 1);

  std::vector<Subspace> star_prefix;  // E*_0 V + ... + E*_i V
  std::vector<Subspace> plain_prefix;  // E_0 V + ... + E_i V
  for (size_t i = 0; i <= d; ++i) {
    Subspace star_i = Subspace::span_of_columns(s.E_star[i]);
    Subspace plain_i = Subspace::span_of_columns(s.E[i]);
    star_prefix.push_back(i == 0 ? star_i : star_prefix.back() + star_i);
    plain_prefix.push_back(i == 0 ? plain_i : plain_prefix.back() + plain_i);
  }
  for (size_t i = 0; i <= d; ++i) {
    Subspace u = intersection(star_prefix[i], plain_prefix[d - i]);
    if (u.dim() != 1) {
      throw StructuralError("a split summand does not have dimension one");
    }
    out.U.push_back(u);
  }

  std::vector<Vector> cols;
  for (const Subspace& u : out.U) cols.push_back(column(u.basis(), 0));
  if (!try_inverse(from_columns(cols))) {
    throw StructuralError("the split summands do not span the whole space");
  }

  const Matrix id = Matrix::identity(s.dim(), s.field);
  for (size_t i = 0; i <= d; ++i) {
    Subspace raised = out.U[i].image_under(s.A - s.theta[d - i] * id);
    Subspace up = (i == d) ? Subspace::zero(s.dim(), s.field) : out.U[i + 1];
    if (!up.contains(raised)) {
      throw StructuralError("raising does not carry a split summand upward");
    }
    Subspace lowered = out.U[i].image_under(s.A_star - s.theta_star[i] * id);
    Subspace down = (i == 0) ? Subspace::zero(s.dim(), s.field) : out.U[i - 1];
    if (!down.contains(lowered)) {
      throw StructuralError("lowering does not carry a split summand downward");
    }
  }
  return out;
}

bool is_split_basis(const THSystem& s, const Matrix& columns) {
  check_candidate(s, columns);
  std::optional<ConjugatedPair> c = conjugate_into(s, columns);
  if (!c) return false;
  const size_t d = s.d();
  if (!shape_of(c->b).lower_bidiagonal) return false;
  if (!shape_of(c->b_star).upper_bidiagonal) return false;
  const Scalar one = Scalar::one(s.field);
  for (size_t i = 1; i <= d; ++i) {
    if (!(c->b_star.at(i - 1, i) == one)) return false;
  }
  if (!(c->b.at(d, d) == s.theta[0])) return false;
  if (!(c->b_star.at(0, 0) == s.theta_star[0])) return false;
  return true;
}

bool is_split_basis_by_lowering(const THSystem& s, const Matrix& columns) {
  check_candidate(s, columns);
  const size_t d = s.d();
  Vector last = column(columns, d);
  if (last.is_zero() || !(s.E[0] * last == last)) return false;
  for (size_t i = d; i >= 1; --i) {
    Vector vi = column(columns, i);
    Vector moved = s.A_star * vi - s.theta_star[i] * vi;
    if (!(moved == column(columns, i - 1))) return false;
  }
  Vector v0 = column(columns, 0);
  if (!(s.A_star * v0 - s.theta_star[0] * v0).is_zero()) return false;
  return true;
}

bool is_split_basis_by_raising(const THSystem& s, const Matrix& columns,
                               const std::vector<Scalar>& phi) {
  check_candidate(s, columns);
  const size_t d = s.d();
  require(phi.size() == d, "split sequence has the wrong length");
  for (const Scalar& f : phi) {
    require(f.field() == s.field, "split sequence lies in a different field");
    require(!f.is_zero(), "split sequence entries must be nonzero");
  }
  Vector first = column(columns, 0);
  if (first.is_zero() || !(s.E_star[0] * first == first)) return false;
  for (size_t i = 0; i < d; ++i) {
    Vector vi = column(columns, i);
    Vector moved = s.A * vi - s.theta[d - i] * vi;
    if (!(moved == phi[i] * column(columns, i + 1))) return false;
  }
  Vector last = column(columns, d);
  if (!(s.A * last - s.theta[0] * last).is_zero()) return false;
  return true;
}

bool is_standard_basis(const THSystem& s, const Matrix& columns) {
  check_candidate(s, columns);
  const size_t d = s.d();
  Vector w(s.dim(), s.field);
  for (size_t i = 0; i <= d; ++i) {
    Vector vi = column(columns, i);
    if (!(s.E_star[i] * vi == vi)) return false;
    w = w + vi;
  }
  if (w.is_zero()) return false;
  return s.E[0] * w == w;
}

bool is_standard_basis_by_row_sums(const THSystem& s, const Matrix& columns) {
  check_candidate(s, columns);
  std::optional<ConjugatedPair> c = conjugate_into(s, columns);
  if (!c) return false;
  if (!(c->b_star == Matrix::diagonal(s.theta_star))) return false;
  return rows_sum_to(c->b, s.theta[0]);
}

bool is_standard_basis_by_shape(const THSystem& s, const Matrix& columns) {
  check_candidate(s, columns);
  std::optional<ConjugatedPair> c = conjugate_into(s, columns);
  if (!c) return false;
  if (!shape_of(c->b).hessenberg) return false;
  if (!rows_sum_to(c->b, s.theta[0])) return false;
  if (!shape_of(c->b_star).diagonal) return false;
  return c->b_star.at(0, 0) == s.theta_star[0];
}

}  // namespace thp
