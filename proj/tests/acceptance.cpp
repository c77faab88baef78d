// Acceptance gate: one pass/fail line per criterion, exit 0 only when every
// criterion holds.  Usage: acceptance <path-to-thp-binary>
//
// All comparisons are exact; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "support.hpp"
#include "thp/bases.hpp"
#include "thp/io.hpp"
#include "thp/random.hpp"
#include "thp/recognize.hpp"
#include "thp/thcore.hpp"
#include "thp/verify.hpp"

using namespace thp;
using test_support::mat;
using test_support::q;
using test_support::run_cli;
using test_support::shell_quote;
using test_support::worked_example;
using test_support::write_scratch_file;

namespace {

std::string g_thp_binary;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure(message);
}

// ---------------------------------------------------------------------------
// Shared corpus: 200 seeded arrays per field, diameters cycling through 0..8.

const std::vector<FieldSpec>& corpus_fields() {
  static const std::vector<FieldSpec> fields = {FieldSpec::rationals(),
                                                FieldSpec::prime(10007)};
  return fields;
}

const std::vector<ParameterArray>& corpus() {
  static const std::vector<ParameterArray> arrays = [] {
    std::vector<ParameterArray> out;
    for (std::size_t f = 0; f < corpus_fields().size(); ++f) {
      for (std::size_t k = 0; k < 200; ++k) {
        out.push_back(random_parameter_array(
            k % 9, corpus_fields()[f], 0x5EED0000ULL + f * 200 + k));
      }
    }
    return out;
  }();
  return arrays;
}

std::vector<Scalar> distinct_scalars(DeterministicRng& rng,
                                     const FieldSpec& field, std::size_t count) {
  std::vector<Scalar> out;
  while (out.size() < count) {
    Scalar candidate = rng.next_scalar(field);
    bool fresh = true;
    for (const Scalar& seen : out) fresh = fresh && !(seen == candidate);
    if (fresh) out.push_back(candidate);
  }
  return out;
}

Matrix random_matrix(DeterministicRng& rng, const FieldSpec& field,
                     std::size_t n) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.next_scalar(field);
  }
  return m;
}

Matrix random_invertible(DeterministicRng& rng, const FieldSpec& field,
                         std::size_t n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m = random_matrix(rng, field, n);
    if (rank(m) == n) return m;
  }
  throw Failure("could not draw an invertible matrix");
}

// ---------------------------------------------------------------------------
// 1. Build -> recognize -> one recognized array equals the input, corpus-wide.

void classification_round_trip() {
  auto start = std::chrono::steady_clock::now();
  for (const ParameterArray& p : corpus()) {
    THSystem s = build_canonical_system(p);
    RecognitionReport report = recognize_th_pair(MatrixPair{s.A, s.A_star});
    require(report.is_th_pair, "canonical pair not recognized");
    bool found = false;
    for (const RecognizedSystem& r : report.systems) {
      found = found || r.parameters == p;
    }
    require(found, "no recognized system reproduced the input array");
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  require(elapsed.count() < 60, "round trip exceeded the 60 s budget");
}

// ---------------------------------------------------------------------------
// 2. The full identity suite passes on every corpus instance.

void identity_suite_over_corpus() {
  auto start = std::chrono::steady_clock::now();
  for (const ParameterArray& p : corpus()) {
    std::vector<VerifyCheck> checks = run_identity_suite(p);
    require(checks.size() == 24, "expected 24 checks");
    for (const VerifyCheck& c : checks) {
      require(c.pass, "identity check failed: " + c.name + ": " + c.detail);
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  require(elapsed.count() < 120, "identity suite exceeded the 120 s budget");
}

// ---------------------------------------------------------------------------
// 3. Frozen goldens of the worked example, in-library and through the CLI.

void worked_example_goldens() {
  const ParameterArray p = worked_example();
  const Matrix T = mat({{q(2), q(-2), q(1)}, {q(0), q(-1), q(1)}, {q(0), q(0), q(1)}});
  const Matrix H = mat({{q(1), q(-1), q(0)},
                        {q(-1, 2), q(1), q(-1, 2)},
                        {q(0), q(-1), q(1)}});
  const Matrix Z = mat({{q(0), q(0), q(2)}, {q(0), q(2), q(0)}, {q(2), q(0), q(0)}});
  const Matrix P = mat({{q(1), q(2), q(1)}, {q(1), q(0), q(-1)}, {q(1), q(-2), q(1)}});

  require(transition_matrix(p, BasisKind::PhiStandard, BasisKind::PhiSplit) == T,
          "standard-to-split transition mismatch");
  require(hessenberg_form(p) == H, "Hessenberg form mismatch");
  require(transition_matrix(p, BasisKind::PhiSplit, BasisKind::PhiStarSplit) == Z,
          "split-to-dual-split transition mismatch");
  require(transition_matrix(p, BasisKind::PhiStarSplit, BasisKind::PhiSplit) == Z,
          "dual-split-to-split transition mismatch");
  require(transition_matrix(p, BasisKind::PhiStarStandard,
                            BasisKind::PhiStandard) == P,
          "dual-standard-to-standard transition mismatch");
  require(transition_matrix(p, BasisKind::PhiStandard,
                            BasisKind::PhiStarStandard) == P,
          "standard-to-dual-standard transition mismatch");
  require(nu_from_parameters(p) == q(4), "closed-form nu mismatch");

  THSystem s = build_canonical_system(p);
  require(nu_from_idempotents(s) == q(4), "trace-form nu mismatch");

  // conjugation/definition oracle: with seeds linked by eta*_0 = E*_0 eta_0,
  // the transition really carries one basis onto the other
  BasisMatrix std_basis = make_basis(s, BasisKind::PhiStandard);
  Vector eta0_star = s.E_star[0] * std_basis.seed;
  BasisMatrix dual_std = make_basis(s, BasisKind::PhiStarStandard, eta0_star);
  require(std_basis.columns ==
              dual_std.columns *
                  transition_matrix(p, BasisKind::PhiStarStandard,
                                    BasisKind::PhiStandard),
          "transition does not carry the linked bases onto each other");

  // the same goldens through the command-line interface, byte for byte
  std::string file =
      write_scratch_file("acc_R.json", param_array_to_json_text(p));
  auto nu_run = run_cli(shell_quote(g_thp_binary) + " nu " + shell_quote(file));
  require(nu_run.exit_code == 0, "nu command failed");
  require(nu_run.output ==
              "{\n  \"closed_form\": \"4\",\n  \"trace_form\": \"4\"\n}\n",
          "nu command bytes mismatch");
  auto tr_run = run_cli(shell_quote(g_thp_binary) + " transition " +
                        shell_quote(file) +
                        " --from phi-star-standard --to phi-standard");
  require(tr_run.exit_code == 0, "transition command failed");
  require(tr_run.output.find("\"transition\": [\n    [\n      \"1\",\n"
                             "      \"2\",\n      \"1\"\n    ]") !=
              std::string::npos,
          "transition command bytes mismatch");
}

// ---------------------------------------------------------------------------
// 4. Duality is an involution and commutes with build/extract, corpus-wide.

void duality_involution_and_extraction() {
  for (const ParameterArray& p : corpus()) {
    require(dual_parameter_array(dual_parameter_array(p)) == p,
            "dualizing twice did not return the input");
    THSystem s = build_canonical_system(p);
    require(extract_parameter_array(dual_system(s)) == dual_parameter_array(p),
            "extraction of the dual system disagrees with the dual array");
  }
}

// ---------------------------------------------------------------------------
// 5. Non-pairs are rejected with the exact documented reason, 50 cases each.

void negative_recognition_reasons() {
  const FieldSpec field = FieldSpec::rationals();

  for (std::size_t k = 0; k < 50; ++k) {
    // commuting pair: two diagonal matrices with distinct entries
    std::size_t n = 2 + k % 5;
    DeterministicRng rng(0x5EED5000ULL + k);
    Matrix a = Matrix::diagonal(distinct_scalars(rng, field, n));
    Matrix b = Matrix::diagonal(distinct_scalars(rng, field, n));
    RecognitionReport r = recognize_th_pair(MatrixPair{a, b});
    require(!r.is_th_pair, "commuting diagonal pair was accepted");
    require(r.failure_reason == "no admissible idempotent ordering for A",
            "commuting pair: wrong reason: " + r.failure_reason);
  }

  for (std::size_t k = 0; k < 50; ++k) {
    // repeated eigenvalue: first diagonal entry duplicated
    std::size_t n = 2 + k % 5;
    DeterministicRng rng(0x5EED6000ULL + k);
    std::vector<Scalar> diag = distinct_scalars(rng, field, n - 1);
    diag.insert(diag.begin(), diag.front());
    Matrix a = Matrix::diagonal(diag);
    RecognitionReport r =
        recognize_th_pair(MatrixPair{a, Matrix::identity(n, field)});
    require(!r.is_th_pair, "repeated-eigenvalue pair was accepted");
    std::string expected =
        "A is not multiplicity-free: minimal polynomial has degree " +
        std::to_string(n - 1) + " but the matrix has order " +
        std::to_string(n);
    require(r.failure_reason == expected,
            "repeated eigenvalue: wrong reason: " + r.failure_reason);
  }

  for (std::size_t k = 0; k < 50; ++k) {
    // characteristic polynomial with an irreducible quadratic factor
    // x^2 + c, c > 0: companion block plus a distinct diagonal tail
    std::size_t n = 2 + k % 4;
    DeterministicRng rng(0x5EED7000ULL + k);
    Scalar c = Scalar::of_integer(Integer(1 + rng.next_below(50)), field);
    Matrix a(n, n, field);
    a.at(0, 1) = Scalar::of_integer(Integer(0), field) - c;
    a.at(1, 0) = Scalar::of_integer(Integer(1), field);
    std::vector<Scalar> tail = distinct_scalars(rng, field, n - 2);
    for (std::size_t i = 0; i < tail.size(); ++i) a.at(2 + i, 2 + i) = tail[i];
    RecognitionReport r =
        recognize_th_pair(MatrixPair{a, Matrix::identity(n, field)});
    require(!r.is_th_pair, "non-splitting pair was accepted");
    require(r.failure_reason ==
                "A is not multiplicity-free: minimal polynomial does not "
                "split over the field",
            "non-splitting: wrong reason: " + r.failure_reason);
  }
}

// ---------------------------------------------------------------------------
// 6. Conjugation preserves the recognized arrays and yields a verified
//    witness; perturbing any single phi entry breaks isomorphism.

void isomorphism_under_conjugation() {
  const ParameterArray p =
      random_parameter_array(4, FieldSpec::rationals(), 0x15011A30ULL);
  THSystem s = build_canonical_system(p);
  RecognitionReport base = recognize_th_pair(MatrixPair{s.A, s.A_star});
  require(base.is_th_pair, "base pair not recognized");

  for (std::size_t k = 0; k < 50; ++k) {
    DeterministicRng rng(0xAB000000ULL + k);
    Matrix gamma = random_invertible(rng, p.field, s.dim());
    THSystem conj = conjugate_system(s, gamma);
    RecognitionReport moved = recognize_th_pair(MatrixPair{conj.A, conj.A_star});
    require(moved.is_th_pair, "conjugated pair not recognized");
    require(moved.systems.size() == base.systems.size(),
            "conjugation changed the number of systems");
    for (std::size_t i = 0; i < moved.systems.size(); ++i) {
      require(moved.systems[i].parameters == base.systems[i].parameters,
              "conjugation changed a recognized parameter array");
    }
    // isomorphic() verifies internally that the witness intertwines both
    // matrices and every idempotent, so has_value() certifies the witness
    std::optional<IsomorphismWitness> w = isomorphic(s, conj);
    require(w.has_value(), "conjugated system not isomorphic to the original");
    require(rank(w->gamma) == s.dim(), "witness is not invertible");
  }

  for (std::size_t i = 0; i < p.phi.size(); ++i) {
    ParameterArray perturbed = p;
    perturbed.phi[i] = perturbed.phi[i] + perturbed.phi[i];
    require(validate(perturbed).ok, "perturbed array should stay valid");
    THSystem other = build_canonical_system(perturbed);
    require(!isomorphic(s, other).has_value(),
            "doubling phi[" + std::to_string(i) + "] kept the systems isomorphic");
  }
}

// ---------------------------------------------------------------------------
// 7. The three split-basis characterizations agree pairwise on every
//    candidate, as do the three standard-basis characterizations.

void scale_column(Matrix& m, std::size_t j, const Scalar& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = c * m.at(i, j);
}

Matrix reversed_columns(const Matrix& m) {
  Matrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out.at(i, j) = m.at(i, m.cols() - 1 - j);
    }
  }
  return out;
}

void characterization_agreement() {
  std::size_t index = 0;
  for (const ParameterArray& p : corpus()) {
    THSystem s = build_canonical_system(p);
    const std::size_t n = s.dim();
    DeterministicRng rng(0xCA7D0000ULL + index++);
    const Scalar seven = Scalar::of_integer(Integer(7), p.field);

    Matrix split = make_basis(s, BasisKind::PhiSplit).columns;
    Matrix standard = make_basis(s, BasisKind::PhiStandard).columns;

    std::vector<Matrix> candidates = {split, standard, seven * split,
                                      seven * standard};
    Matrix split_cols = split;
    Matrix standard_cols = standard;
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c = Scalar::of_integer(Integer(2 + j), p.field);
      scale_column(split_cols, j, c);
      scale_column(standard_cols, j, c);
    }
    candidates.push_back(split_cols);
    candidates.push_back(standard_cols);
    Matrix crushed = split;
    for (std::size_t i = 0; i < n; ++i) {
      crushed.at(i, 0) = Scalar::of_integer(Integer(0), p.field);
    }
    candidates.push_back(crushed);
    candidates.push_back(reversed_columns(split));
    candidates.push_back(random_matrix(rng, p.field, n));
    candidates.push_back(random_invertible(rng, p.field, n));

    for (const Matrix& m : candidates) {
      bool s1 = is_split_basis(s, m);
      bool s2 = is_split_basis_by_lowering(s, m);
      bool s3 = is_split_basis_by_raising(s, m, p.phi);
      require(s1 == s2 && s2 == s3, "split characterizations disagree");
      bool t1 = is_standard_basis(s, m);
      bool t2 = is_standard_basis_by_row_sums(s, m);
      bool t3 = is_standard_basis_by_shape(s, m);
      require(t1 == t2 && t2 == t3, "standard characterizations disagree");
    }
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* name;
  std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <path-to-thp-binary>\n", argv[0]);
    return 2;
  }
  g_thp_binary = argv[1];

  const std::vector<Criterion> criteria = {
      {"classification_round_trip", classification_round_trip},
      {"identity_suite_over_corpus", identity_suite_over_corpus},
      {"worked_example_goldens", worked_example_goldens},
      {"duality_involution_and_extraction", duality_involution_and_extraction},
      {"negative_recognition_reasons", negative_recognition_reasons},
      {"isomorphism_under_conjugation", isomorphism_under_conjugation},
      {"characterization_agreement", characterization_agreement},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    try {
      auto start = std::chrono::steady_clock::now();
      c.body();
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::printf("PASS - %s (%lld ms)\n", c.name,
                  static_cast<long long>(ms));
    } catch (const std::exception& e) {
      all_pass = false;
      std::printf("FAIL - %s: %s\n", c.name, e.what());
    }
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
