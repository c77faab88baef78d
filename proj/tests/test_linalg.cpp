#include <doctest.h>

#include "support.hpp"
#include "thp/errors.hpp"
#include "thp/linalg.hpp"

using namespace thp;
using test_support::gf;
using test_support::mat;
using test_support::q;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("matrix construction, equality, and arithmetic") {
  Matrix A = mat({{q(2), q(0), q(0)}, {q(1), q(1), q(0)}, {q(0), q(1), q(0)}});
  CHECK(A.rows() == 3);
  CHECK(A.at(1, 0) == q(1));
  CHECK(A + Matrix(3, 3, Q) == A);
  CHECK(A - A == Matrix(3, 3, Q));
  CHECK((q(2) * A).at(0, 0) == q(4));
  CHECK(Matrix::identity(3, Q) * A == A);
  Matrix Z = mat({{q(0), q(0), q(2)}, {q(0), q(2), q(0)}, {q(2), q(0), q(0)}});
  CHECK(Z * Z == q(4) * Matrix::identity(3, Q));
  CHECK(A.transpose().at(0, 1) == q(1));
  CHECK(trace(A) == q(3));
  CHECK_THROWS_AS((void)Matrix::from_rows({{q(1), q(2)}, {q(3)}}), DomainError);
  CHECK_THROWS_AS((void)Matrix::from_rows({}), DomainError);
}

TEST_CASE("inverse matches a hand-inverted transition") {
  Matrix T = mat({{q(2), q(-2), q(1)}, {q(0), q(-1), q(1)}, {q(0), q(0), q(1)}});
  Matrix expected =
      mat({{q(1, 2), q(-1), q(1, 2)}, {q(0), q(-1), q(1)}, {q(0), q(0), q(1)}});
  Matrix Ti = inverse(T);
  CHECK(Ti == expected);
  CHECK(T * Ti == Matrix::identity(3, Q));
  CHECK(Ti * T == Matrix::identity(3, Q));
  Matrix singular = mat({{q(1), q(2)}, {q(2), q(4)}});
  CHECK_THROWS_AS((void)inverse(singular), DomainError);
}

TEST_CASE("characteristic and minimal polynomials on diagonal matrices") {
  Matrix D = Matrix::diagonal({q(0), q(1), q(2)});
  Polynomial cp = char_poly(D);
  CHECK(cp == Polynomial({q(0), q(2), q(-3), q(1)}, Q));  // x^3 - 3x^2 + 2x
  CHECK(cp(D).is_zero());
  Matrix DD = Matrix::diagonal({q(0), q(0), q(1)});
  CHECK(min_poly(DD) == Polynomial({q(0), q(-1), q(1)}, Q));  // x^2 - x
  CHECK(min_poly(D).degree() == 3);
  // a nontrivial 3x3: char poly is monic of degree 3 and annihilates
  Matrix A = mat({{q(2), q(1), q(0)}, {q(1), q(1), q(3)}, {q(0), q(1), q(0)}});
  Polynomial cpa = char_poly(A);
  CHECK(cpa.degree() == 3);
  CHECK(cpa(A).is_zero());
  CHECK(min_poly(A)(A).is_zero());
}

TEST_CASE("polynomial arithmetic and evaluation") {
  Polynomial x = Polynomial::x(Q);
  Polynomial p = (x - Polynomial::constant(q(1))) * (x - Polynomial::constant(q(2)));
  CHECK(p.degree() == 2);
  CHECK(p(q(1)).is_zero());
  CHECK(p(q(3)) == q(2));
  CHECK(p(Matrix::diagonal({q(1), q(2)})).is_zero());
  CHECK((p - p) == Polynomial({}, Q));
}

TEST_CASE("root finding over the rationals") {
  Polynomial cp = char_poly(Matrix::diagonal({q(0), q(1), q(2)}));
  RootsReport rr = roots_in_field(cp);
  REQUIRE(rr.splits);
  REQUIRE(rr.roots.size() == 3);
  CHECK(rr.roots[0].first == q(0));
  CHECK(rr.roots[1].first == q(1));
  CHECK(rr.roots[2].first == q(2));
  for (const auto& [root, mult] : rr.roots) CHECK(mult == 1);

  // (x - 1/2)^2 (x + 3): multiplicities and fractional roots
  Polynomial p1({q(-1, 2), q(1)}, Q), p2({q(3), q(1)}, Q);
  RootsReport rr2 = roots_in_field(p1 * p1 * p2);
  REQUIRE(rr2.splits);
  REQUIRE(rr2.roots.size() == 2);
  CHECK(rr2.roots[0].first == q(-3));
  CHECK(rr2.roots[0].second == 1);
  CHECK(rr2.roots[1].first == q(1, 2));
  CHECK(rr2.roots[1].second == 2);

  // x^2 + 1 has no rational roots
  RootsReport rr3 = roots_in_field(Polynomial({q(1), q(0), q(1)}, Q));
  CHECK(!rr3.splits);
  CHECK(rr3.roots.empty());
}

TEST_CASE("root finding over a prime field") {
  FieldSpec F5 = FieldSpec::prime(5);
  auto s5 = [&](long long v) { return gf(v, F5); };
  // x^2 + 1 = (x - 2)(x - 3) over gf:5
  RootsReport rr = roots_in_field(Polynomial({s5(1), s5(0), s5(1)}, F5));
  REQUIRE(rr.splits);
  REQUIRE(rr.roots.size() == 2);
  CHECK(rr.roots[0].first == s5(2));
  CHECK(rr.roots[1].first == s5(3));
  // x^2 + 2 has no roots over gf:5
  RootsReport rr2 = roots_in_field(Polynomial({s5(2), s5(0), s5(1)}, F5));
  CHECK(!rr2.splits);
}

TEST_CASE("shape flags classify bidiagonal, Hessenberg, and 1x1 matrices") {
  Matrix A = mat({{q(2), q(0), q(0)}, {q(1), q(1), q(0)}, {q(0), q(1), q(0)}});
  ShapeFlags sh = shape_of(A);
  CHECK(sh.hessenberg);
  CHECK(sh.lower_bidiagonal);
  CHECK(!sh.upper_bidiagonal);
  CHECK(!sh.diagonal);
  CHECK(!sh.upper_triangular);

  // 1x1: vacuously everything
  ShapeFlags sh1 = shape_of(Matrix::identity(1, Q));
  CHECK(sh1.hessenberg);
  CHECK(sh1.lower_bidiagonal);
  CHECK(sh1.upper_bidiagonal);
  CHECK(sh1.diagonal);
  CHECK(sh1.upper_triangular);

  // a diagonal matrix of order > 1 has a zero subdiagonal, so it is neither
  // Hessenberg nor bidiagonal under the all-nonzero-subdiagonal convention
  ShapeFlags shd = shape_of(Matrix::diagonal({q(1), q(2)}));
  CHECK(!shd.hessenberg);
  CHECK(!shd.lower_bidiagonal);
  CHECK(!shd.upper_bidiagonal);
  CHECK(shd.diagonal);
  CHECK(shd.upper_triangular);

  Matrix U = mat({{q(1), q(1), q(0)}, {q(0), q(2), q(3)}, {q(0), q(0), q(3)}});
  ShapeFlags shu = shape_of(U);
  CHECK(shu.upper_bidiagonal);
  CHECK(shu.upper_triangular);
  CHECK(!shu.hessenberg);
}

TEST_CASE("subspaces: spans, kernels, sums, and intersections") {
  Vector e0 = Vector::unit(3, 0, Q), e1 = Vector::unit(3, 1, Q);
  Subspace s01 = Subspace::span(e0) + Subspace::span(e1);
  CHECK(s01.dim() == 2);
  Vector v(3, Q);
  v.at(0) = q(5);
  v.at(1) = q(-7);
  CHECK(s01.contains(v));
  v.at(2) = q(1);
  CHECK(!s01.contains(v));

  Matrix A = mat({{q(2), q(0), q(0)}, {q(1), q(1), q(0)}, {q(0), q(1), q(0)}});
  CHECK(rank(A) == 2);
  CHECK(Subspace::kernel(A).dim() == 1);
  CHECK(intersection(s01, Subspace::span(e0)).dim() == 1);
  CHECK(Subspace::eigenspace(Matrix::diagonal({q(0), q(1), q(2)}), q(1)).dim() == 1);

  // dim(X + Y) + dim(X ∩ Y) = dim X + dim Y
  Subspace X = Subspace::span_of_columns(
      mat({{q(1), q(0)}, {q(1), q(1)}, {q(0), q(1)}}));
  CHECK((X + s01).dim() + intersection(X, s01).dim() == X.dim() + s01.dim());

  // image of a subspace under a matrix
  CHECK(s01.image_under(Matrix::identity(3, Q)) == s01);
}

TEST_CASE("prime-field linear algebra round trip") {
  FieldSpec F = FieldSpec::prime(101);
  auto g = [&](long long v) { return gf(v, F); };
  Matrix A = mat({{g(3), g(10)}, {g(44), g(90)}});
  Matrix Ai = inverse(A);
  CHECK(A * Ai == Matrix::identity(2, F));
  Polynomial cp = char_poly(A);
  CHECK(cp(A).is_zero());
  CHECK(rank(A) == 2);
}
