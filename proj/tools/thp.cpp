// thp: command-line interface to the thin Hessenberg pair library.
//
// Exit codes, uniform across subcommands:
//   0  success / affirmative answer
//   1  well-formed negative answer (invalid parameter array, a pair that is
//      not a thin Hessenberg pair, non-isomorphic inputs, a random request
//      that no parameter array can satisfy)
//   2  input or usage error (malformed files, unknown flags, mismatched
//      inputs, unsupported requests, internal consistency failures)
//
// All output is deterministic JSON with every matrix entry and eigenvalue
// written as an exact scalar string.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thp/bases.hpp"
#include "thp/errors.hpp"
#include "thp/io.hpp"
#include "thp/random.hpp"
#include "thp/recognize.hpp"
#include "thp/thcore.hpp"
#include "thp/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace thp;

json strings_node(const std::vector<std::string>& v) {
  json node = json::array();
  for (const std::string& s : v) node.push_back(s);
  return node;
}

json matrix_node(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : matrix_to_strings(m)) rows.push_back(strings_node(row));
  return rows;
}

void emit(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

ParameterArray load_params(const std::string& path) {
  return param_array_from_json_text(read_text_file(path));
}

/// Loads a parameter array and insists it is valid; a parseable but invalid
/// array is the well-formed negative (exit 1), reported on standard error.
std::optional<ParameterArray> load_valid_params(const std::string& path) {
  ParameterArray p = load_params(path);
  ValidationReport v = validate(p);
  if (!v.ok) {
    std::cerr << "error: invalid parameter array in \"" << path
              << "\": " << v.detail << "\n";
    return std::nullopt;
  }
  return p;
}

int cmd_validate(const std::string& path, const std::string& out_path) {
  ParameterArray p = load_params(path);
  ValidationReport v = validate(p);
  json doc;
  doc["valid"] = v.ok;
  doc["detail"] = v.ok ? "" : v.detail;
  emit(doc, out_path);
  return v.ok ? 0 : 1;
}

int cmd_build(const std::string& path, const std::string& out_path) {
  auto p = load_valid_params(path);
  if (!p) return 1;
  THSystem s = build_canonical_system(*p);
  emit_text(pair_to_json_text(MatrixPair{s.A, s.A_star}), out_path);
  return 0;
}

int cmd_matrices(const std::string& path, const std::string& basis,
                 const std::string& out_path) {
  auto p = load_valid_params(path);
  if (!p) return 1;
  RepresentationPair rep =
      closed_form_representation(*p, basis_kind_from_string(basis));
  json doc;
  doc["field"] = p->field.to_string();
  doc["basis"] = basis;
  doc["B"] = matrix_node(rep.B);
  doc["B_star"] = matrix_node(rep.B_star);
  emit(doc, out_path);
  return 0;
}

int cmd_transition(const std::string& path, const std::string& from,
                   const std::string& to, const std::string& out_path) {
  auto p = load_valid_params(path);
  if (!p) return 1;
  Matrix t = transition_matrix(*p, basis_kind_from_string(from),
                               basis_kind_from_string(to));
  json doc;
  doc["field"] = p->field.to_string();
  doc["from"] = from;
  doc["to"] = to;
  doc["transition"] = matrix_node(t);
  emit(doc, out_path);
  return 0;
}

int cmd_nu(const std::string& path, const std::string& out_path) {
  auto p = load_valid_params(path);
  if (!p) return 1;
  Scalar closed = nu_from_parameters(*p);
  Scalar traced = nu_from_idempotents(build_canonical_system(*p));
  if (!(closed == traced)) {
    throw StructuralError("the two computations of nu disagree: " +
                          closed.to_string() + " vs " + traced.to_string());
  }
  json doc;
  doc["closed_form"] = closed.to_string();
  doc["trace_form"] = traced.to_string();
  emit(doc, out_path);
  return 0;
}

int cmd_dual(const std::string& path, const std::string& out_path) {
  auto p = load_valid_params(path);
  if (!p) return 1;
  emit_text(param_array_to_json_text(dual_parameter_array(*p)), out_path);
  return 0;
}

json report_node(const RecognitionReport& report, const FieldSpec& f) {
  json doc;
  doc["field"] = f.to_string();
  doc["is_th_pair"] = report.is_th_pair;
  doc["failure_reason"] = report.failure_reason;
  json systems = json::array();
  for (const RecognizedSystem& rs : report.systems) {
    json entry;
    entry["theta"] = strings_node(scalars_to_strings(rs.parameters.theta));
    entry["theta_star"] =
        strings_node(scalars_to_strings(rs.parameters.theta_star));
    entry["phi"] = strings_node(scalars_to_strings(rs.parameters.phi));
    systems.push_back(entry);
  }
  doc["systems"] = systems;
  return doc;
}

int cmd_recognize(const std::string& path, const std::string& out_path) {
  MatrixPair pair = pair_from_json_text(read_text_file(path));
  RecognitionReport report = recognize_th_pair(pair);
  emit(report_node(report, pair.A.field()), out_path);
  return report.is_th_pair ? 0 : 1;
}

/// Systems carried by one isomorphic-command input, which may be either a
/// parameter-array file (one canonical system) or a matrix-pair file (every
/// recognized system).  `order` is the matrix order, known before any
/// recognition runs so mismatched inputs fail fast.
struct LoadedInput {
  FieldSpec field = FieldSpec::rationals();
  std::size_t order = 0;
  bool valid = true;  ///< false: a parseable but invalid parameter array
  std::vector<THSystem> systems;
};

LoadedInput load_isomorphic_input(const std::string& path) {
  std::string text = read_text_file(path);
  LoadedInput in;
  if (json_text_is_pair_file(text)) {
    MatrixPair pair = pair_from_json_text(text);
    in.field = pair.A.field();
    in.order = pair.A.rows();
    RecognitionReport report = recognize_th_pair(pair);
    for (RecognizedSystem& rs : report.systems) {
      in.systems.push_back(std::move(rs.system));
    }
  } else {
    ParameterArray p = param_array_from_json_text(text);
    ValidationReport v = validate(p);
    if (!v.ok) {
      std::cerr << "error: invalid parameter array in \"" << path
                << "\": " << v.detail << "\n";
      in.valid = false;
      return in;
    }
    in.field = p.field;
    in.order = p.d() + 1;
    in.systems.push_back(build_canonical_system(p));
  }
  return in;
}

int cmd_isomorphic(const std::string& path_a, const std::string& path_b,
                   const std::string& out_path) {
  LoadedInput a = load_isomorphic_input(path_a);
  if (!a.valid) return 1;
  LoadedInput b = load_isomorphic_input(path_b);
  if (!b.valid) return 1;
  if (!(a.field == b.field)) {
    throw DomainError("the two inputs are over different fields: " +
                      a.field.to_string() + " vs " + b.field.to_string());
  }
  if (a.order != b.order) {
    throw DomainError("the two inputs have different matrix orders: " +
                      std::to_string(a.order) + " vs " +
                      std::to_string(b.order));
  }
  for (const THSystem& sa : a.systems) {
    for (const THSystem& sb : b.systems) {
      if (auto witness = isomorphic(sa, sb)) {
        json doc;
        doc["isomorphic"] = true;
        doc["field"] = a.field.to_string();
        doc["gamma"] = matrix_node(witness->gamma);
        emit(doc, out_path);
        return 0;
      }
    }
  }
  json doc;
  doc["isomorphic"] = false;
  emit(doc, out_path);
  return 1;
}

int cmd_random(std::uint64_t d, const std::string& field_text,
               std::uint64_t seed, const std::string& out_path) {
  FieldSpec field = FieldSpec::parse(field_text);
  if (field.is_prime() && field.characteristic() < d + 1) {
    std::cerr << "error: " << field.to_string() << " cannot host " << (d + 1)
              << " distinct eigenvalues\n";
    return 1;
  }
  ParameterArray p =
      random_parameter_array(static_cast<std::size_t>(d), field, seed);
  emit_text(param_array_to_json_text(p), out_path);
  return 0;
}

int cmd_verify(const std::string& path, const std::string& out_path) {
  ParameterArray p = load_params(path);
  std::vector<VerifyCheck> checks = run_identity_suite(p);
  bool all_pass = true;
  json list = json::array();
  for (const VerifyCheck& c : checks) {
    all_pass = all_pass && c.pass;
    json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    list.push_back(entry);
  }
  json doc;
  doc["field"] = p.field.to_string();
  doc["all_pass"] = all_pass;
  doc["checks"] = list;
  emit(doc, out_path);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact constructor, recognizer, and classifier for thin Hessenberg "
      "pairs and systems over the rationals and prime fields.\n"
      "Exit codes: 0 affirmative, 1 well-formed negative, 2 input or usage "
      "error."};
  app.require_subcommand(1);

  const std::vector<std::string> all_bases = {
      "phi-split",     "inv-phi-split",    "phi-star-split",
      "inv-phi-star-split", "phi-standard", "phi-star-standard"};
  const std::vector<std::string> transition_bases = {
      "phi-split", "phi-star-split", "phi-standard", "phi-star-standard"};

  std::string params_path, pair_path, path_a, path_b, out_path;
  std::string basis = "phi-split";
  std::string from_basis, to_basis;
  std::uint64_t rand_d = 0, rand_seed = 0;
  std::string rand_field = "rational";

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path,
                    "Write the JSON result to this file instead of stdout");
  };

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Check a parameter-array file (exit 0 valid, 1 invalid)");
  validate_cmd->add_option("params", params_path, "Parameter-array JSON file")
      ->required();
  add_output(validate_cmd);

  CLI::App* build_cmd = app.add_subcommand(
      "build", "Print the canonical matrix pair of a parameter array");
  build_cmd->add_option("params", params_path, "Parameter-array JSON file")
      ->required();
  add_output(build_cmd);

  CLI::App* matrices_cmd = app.add_subcommand(
      "matrices", "Print the pair represented in a chosen basis");
  matrices_cmd->add_option("params", params_path, "Parameter-array JSON file")
      ->required();
  matrices_cmd->add_option("--basis", basis, "Basis kind")
      ->required()
      ->check(CLI::IsMember(all_bases));
  add_output(matrices_cmd);

  CLI::App* transition_cmd = app.add_subcommand(
      "transition", "Print the transition matrix between two bases");
  transition_cmd->add_option("params", params_path, "Parameter-array JSON file")
      ->required();
  transition_cmd->add_option("--from", from_basis, "Source basis")
      ->required()
      ->check(CLI::IsMember(transition_bases));
  transition_cmd->add_option("--to", to_basis, "Target basis")
      ->required()
      ->check(CLI::IsMember(transition_bases));
  add_output(transition_cmd);

  CLI::App* nu_cmd = app.add_subcommand(
      "nu", "Print the scaling constant nu computed two independent ways");
  nu_cmd->add_option("params", params_path, "Parameter-array JSON file")
      ->required();
  add_output(nu_cmd);

  CLI::App* dual_cmd =
      app.add_subcommand("dual", "Print the dual parameter array");
  dual_cmd->add_option("params", params_path, "Parameter-array JSON file")
      ->required();
  add_output(dual_cmd);

  CLI::App* recognize_cmd = app.add_subcommand(
      "recognize",
      "Decide whether a matrix pair is a thin Hessenberg pair and list every "
      "system on it (exit 0 yes, 1 no)");
  recognize_cmd->add_option("pair", pair_path, "Matrix-pair JSON file")
      ->required();
  add_output(recognize_cmd);

  CLI::App* isomorphic_cmd = app.add_subcommand(
      "isomorphic",
      "Decide whether two inputs (parameter-array or matrix-pair files) carry "
      "isomorphic systems (exit 0 yes with witness, 1 no)");
  isomorphic_cmd->add_option("a", path_a, "First input file")->required();
  isomorphic_cmd->add_option("b", path_b, "Second input file")->required();
  add_output(isomorphic_cmd);

  CLI::App* random_cmd = app.add_subcommand(
      "random", "Generate a deterministic pseudo-random valid parameter array");
  random_cmd->add_option("--d", rand_d, "Diameter (matrix order minus one)")
      ->required();
  random_cmd->add_option("--field", rand_field,
                         "Field spec: \"rational\" or \"gf:<p>\"");
  random_cmd->add_option("--seed", rand_seed, "64-bit seed");
  add_output(random_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Run the full identity suite on the canonical system of a parameter "
      "array (exit 0 iff every check passes)");
  verify_cmd->add_option("params", params_path, "Parameter-array JSON file")
      ->required();
  add_output(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(params_path, out_path);
    if (*build_cmd) return cmd_build(params_path, out_path);
    if (*matrices_cmd) return cmd_matrices(params_path, basis, out_path);
    if (*transition_cmd) {
      return cmd_transition(params_path, from_basis, to_basis, out_path);
    }
    if (*nu_cmd) return cmd_nu(params_path, out_path);
    if (*dual_cmd) return cmd_dual(params_path, out_path);
    if (*recognize_cmd) return cmd_recognize(pair_path, out_path);
    if (*isomorphic_cmd) return cmd_isomorphic(path_a, path_b, out_path);
    if (*random_cmd) return cmd_random(rand_d, rand_field, rand_seed, out_path);
    if (*verify_cmd) return cmd_verify(params_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
