#include <doctest.h>

#include "support.hpp"
#include "thp/thcore.hpp"
#include "thp/verify.hpp"

using namespace thp;
using test_support::gf;
using test_support::q;
using test_support::worked_example;

namespace {

void expect_all_pass(const ParameterArray& p) {
  std::vector<VerifyCheck> checks = run_identity_suite(p);
  REQUIRE(checks.size() == 24);
  for (const VerifyCheck& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("the identity suite passes on the worked example") {
  expect_all_pass(worked_example());
}

TEST_CASE("the identity suite passes over gf:5") {
  FieldSpec G = FieldSpec::prime(5);
  ParameterArray p;
  p.field = G;
  p.theta = {gf(0, G), gf(1, G), gf(2, G)};
  p.theta_star = {gf(0, G), gf(1, G), gf(2, G)};
  p.phi = {gf(1, G), gf(1, G)};
  expect_all_pass(p);
}

TEST_CASE("the identity suite passes on an asymmetric rational array") {
  ParameterArray p;
  p.field = FieldSpec::rationals();
  p.theta = {q(1, 2), q(3), q(-1)};
  p.theta_star = {q(2), q(-5, 3), q(7)};
  p.phi = {q(2, 7), q(4)};
  expect_all_pass(p);
}

TEST_CASE("the identity suite passes at the diameter edges") {
  ParameterArray p0;
  p0.field = FieldSpec::rationals();
  p0.theta = {q(5)};
  p0.theta_star = {q(-3)};
  expect_all_pass(p0);

  FieldSpec G = FieldSpec::prime(101);
  ParameterArray p1;
  p1.field = G;
  p1.theta = {gf(3, G), gf(7, G)};
  p1.theta_star = {gf(11, G), gf(42, G)};
  p1.phi = {gf(99, G)};
  expect_all_pass(p1);
}

TEST_CASE("an invalid array yields the single failing first check") {
  ParameterArray p;
  p.field = FieldSpec::rationals();
  p.theta = {q(1), q(1)};
  p.theta_star = {q(0), q(2)};
  p.phi = {q(1)};
  std::vector<VerifyCheck> checks = run_identity_suite(p);
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].name == "parameter_conditions");
  CHECK(!checks[0].pass);
  CHECK(checks[0].detail == "theta[0] equals theta[1]");
}

TEST_CASE("check names come in the documented order") {
  const char* names[] = {
      "parameter_conditions", "canonical_shapes", "idempotent_sum",
      "idempotent_orthogonality", "idempotent_rank_one",
      "spectral_decomposition", "annihilating_polynomial",
      "power_basis_independence", "idempotents_are_polynomials_in_the_matrix",
      "one_step_overlap", "split_decomposition", "split_representation",
      "split_variants", "standard_representation", "split_transition",
      "dual_split_transition", "antidiagonal_transition", "nu_agreement",
      "standard_transition", "standard_similarity", "nu_transition_products",
      "recognition_round_trip", "duality_involution", "triangular_readoff"};
  std::vector<VerifyCheck> checks = run_identity_suite(worked_example());
  REQUIRE(checks.size() == std::size(names));
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].name == names[i]);
  }
}
