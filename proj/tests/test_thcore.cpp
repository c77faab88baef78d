#include <doctest.h>

#include "support.hpp"
#include "thp/errors.hpp"
#include "thp/thcore.hpp"

using namespace thp;
using test_support::gf;
using test_support::mat;
using test_support::q;
using test_support::worked_example;

TEST_CASE("parameter validation names the violated condition") {
  ParameterArray p = worked_example();
  CHECK(validate(p).ok);

  SUBCASE("zero phi entry, reported 1-based") {
    p.phi[1] = q(0);
    ValidationReport v = validate(p);
    CHECK(!v.ok);
    CHECK(v.detail == "phi[2] is zero");
    CHECK_THROWS_AS((void)build_canonical_system(p), DomainError);
  }
  SUBCASE("repeated eigenvalue") {
    p.theta[2] = q(0);
    ValidationReport v = validate(p);
    CHECK(!v.ok);
    CHECK(v.detail == "theta[0] equals theta[2]");
  }
  SUBCASE("repeated dual eigenvalue") {
    p.theta_star[1] = q(2);
    ValidationReport v = validate(p);
    CHECK(!v.ok);
    CHECK(v.detail == "theta_star[1] equals theta_star[2]");
  }
  SUBCASE("length mismatches") {
    ParameterArray bad = p;
    bad.theta_star.pop_back();
    CHECK(validate(bad).detail == "theta_star has 2 entries but theta has 3");
    bad = p;
    bad.phi.pop_back();
    CHECK(validate(bad).detail == "phi has 1 entries; expected 2");
    bad = p;
    bad.theta.clear();
    bad.theta_star.clear();
    bad.phi.clear();
    CHECK(validate(bad).detail ==
          "theta is empty; a system of diameter d needs d+1 eigenvalues");
  }
  SUBCASE("mixed fields are a domain error, not a validation failure") {
    p.phi[0] = gf(1, FieldSpec::prime(5));
    CHECK_THROWS_AS((void)validate(p), DomainError);
  }
}

TEST_CASE("the canonical system of the worked example has frozen matrices") {
  ParameterArray p = worked_example();
  THSystem s = build_canonical_system(p);

  CHECK(s.A == mat({{q(2), q(0), q(0)}, {q(1), q(1), q(0)}, {q(0), q(1), q(0)}}));
  CHECK(s.A_star ==
        mat({{q(0), q(1), q(0)}, {q(0), q(1), q(1)}, {q(0), q(0), q(2)}}));

  // primitive idempotents, all nine entries each
  CHECK(s.E[0] == mat({{q(0), q(0), q(0)},
                       {q(0), q(0), q(0)},
                       {q(1, 2), q(-1), q(1)}}));
  CHECK(s.E[1] == mat({{q(0), q(0), q(0)},
                       {q(-1), q(1), q(0)},
                       {q(-1), q(1), q(0)}}));
  CHECK(s.E[2] == mat({{q(1), q(0), q(0)},
                       {q(1), q(0), q(0)},
                       {q(1, 2), q(0), q(0)}}));
  CHECK(s.E_star[0] == mat({{q(1), q(-1), q(1, 2)},
                            {q(0), q(0), q(0)},
                            {q(0), q(0), q(0)}}));
  CHECK(s.E_star[1] == mat({{q(0), q(1), q(-1)},
                            {q(0), q(1), q(-1)},
                            {q(0), q(0), q(0)}}));
  CHECK(s.E_star[2] == mat({{q(0), q(0), q(1, 2)},
                            {q(0), q(0), q(1)},
                            {q(0), q(0), q(1)}}));
}

TEST_CASE("nu agrees between the closed form and the idempotent trace") {
  ParameterArray p = worked_example();
  THSystem s = build_canonical_system(p);
  CHECK(nu_from_parameters(p) == q(4));
  CHECK(nu_from_idempotents(s) == q(4));
  CHECK(q(4) * (s.E[0] * s.E_star[0] * s.E[0]) == s.E[0]);
  CHECK(q(4) * (s.E_star[0] * s.E[0] * s.E_star[0]) == s.E_star[0]);
}

TEST_CASE("the worked example is self-dual") {
  ParameterArray p = worked_example();
  THSystem s = build_canonical_system(p);
  CHECK(dual_parameter_array(p) == p);
  THSystem ds = dual_system(s);
  CHECK(ds.A == s.A_star);
  CHECK(ds.A_star == s.A);
  CHECK(ds.E_star[2] == s.E[2]);
  CHECK(nu_from_idempotents(ds) == q(4));
}

TEST_CASE("dualizing reverses phi and is an involution") {
  ParameterArray p;
  p.field = FieldSpec::rationals();
  p.theta = {q(1), q(5), q(-2)};
  p.theta_star = {q(0), q(3), q(7)};
  p.phi = {q(2), q(-3)};
  ParameterArray d = dual_parameter_array(p);
  CHECK(d.theta == p.theta_star);
  CHECK(d.theta_star == p.theta);
  CHECK(d.phi == std::vector<Scalar>{q(-3), q(2)});
  CHECK(dual_parameter_array(d) == p);
}

TEST_CASE("conjugation preserves nu, spectra, and the idempotent sum") {
  ParameterArray p = worked_example();
  THSystem s = build_canonical_system(p);
  Matrix g = mat({{q(1), q(2), q(0)}, {q(0), q(1), q(3)}, {q(1), q(0), q(1)}});
  THSystem cs = conjugate_system(s, g);
  CHECK(nu_from_idempotents(cs) == q(4));
  CHECK(cs.A != s.A);
  Matrix sum(3, 3, p.field);
  for (const Matrix& e : cs.E) sum = sum + e;
  CHECK(sum == Matrix::identity(3, p.field));
  CHECK_THROWS_AS((void)conjugate_system(s, mat({{q(1), q(2)}, {q(2), q(4)}})),
                  DomainError);
}

TEST_CASE("the worked example over gf:5 uses modular inverses") {
  FieldSpec G = FieldSpec::prime(5);
  ParameterArray p;
  p.field = G;
  p.theta = {gf(0, G), gf(1, G), gf(2, G)};
  p.theta_star = {gf(0, G), gf(1, G), gf(2, G)};
  p.phi = {gf(1, G), gf(1, G)};
  THSystem s = build_canonical_system(p);
  CHECK(nu_from_parameters(p) == gf(4, G));
  CHECK(nu_from_idempotents(s) == gf(4, G));
  CHECK(s.E[0].at(2, 0) == gf(3, G));  // 1/2 = 3 mod 5
}

TEST_CASE("a diameter-zero system is the scalar pair") {
  ParameterArray p;
  p.field = FieldSpec::rationals();
  p.theta = {q(7)};
  p.theta_star = {q(9)};
  CHECK(validate(p).ok);
  THSystem s = build_canonical_system(p);
  CHECK(nu_from_parameters(p) == q(1));
  CHECK(nu_from_idempotents(s) == q(1));
  CHECK(s.E[0] == Matrix::identity(1, p.field));
  CHECK(s.A.at(0, 0) == q(7));
  CHECK(s.A_star.at(0, 0) == q(9));
}

TEST_CASE("idempotent construction rejects a wrong eigenvalue list") {
  Matrix A = mat({{q(2), q(0), q(0)}, {q(1), q(1), q(0)}, {q(0), q(1), q(0)}});
  CHECK_THROWS_AS((void)primitive_idempotents(A, {q(0), q(1), q(3)}),
                  StructuralError);
}
