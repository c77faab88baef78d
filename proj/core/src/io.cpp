#include "thp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "thp/errors.hpp"

namespace thp {
namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("the document must be a JSON object");
  return doc;
}

void require_keys(const json& doc, const std::set<std::string>& keys,
                  const char* what) {
  for (const auto& item : doc.items()) {
    if (!keys.count(item.key())) {
      throw ParseError("unknown key \"" + item.key() + "\" in a " + what);
    }
  }
  for (const std::string& key : keys) {
    if (!doc.contains(key)) {
      throw ParseError("missing key \"" + key + "\" in a " + what);
    }
  }
}

FieldSpec field_of(const json& doc) {
  const json& f = doc.at("field");
  if (!f.is_string()) throw ParseError("\"field\" must be a string");
  return FieldSpec::parse(f.get<std::string>());
}

std::vector<Scalar> scalar_list(const json& node, const std::string& key,
                                const FieldSpec& f) {
  if (!node.is_array()) throw ParseError("\"" + key + "\" must be an array");
  std::vector<Scalar> out;
  out.reserve(node.size());
  for (const json& item : node) {
    if (!item.is_string()) {
      throw ParseError("every entry of \"" + key +
                       "\" must be a scalar string");
    }
    out.push_back(Scalar::parse(item.get<std::string>(), f));
  }
  return out;
}

Matrix matrix_of(const json& node, const std::string& key, const FieldSpec& f) {
  if (!node.is_array() || node.empty()) {
    throw ParseError("\"" + key + "\" must be a nonempty array of rows");
  }
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(node.size());
  for (const json& row : node) {
    rows.push_back(scalar_list(row, key, f));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError("\"" + key + "\" has rows of different lengths");
    }
  }
  if (rows.front().size() != rows.size()) {
    throw ParseError("\"" + key + "\" must be square");
  }
  return Matrix::from_rows(rows);
}

json strings_node(const std::vector<std::string>& v) {
  json node = json::array();
  for (const std::string& s : v) node.push_back(s);
  return node;
}

}  // namespace

ParameterArray param_array_from_json_text(const std::string& text) {
  json doc = parse_document(text);
  require_keys(doc, {"field", "theta", "theta_star", "phi"},
               "parameter-array file");
  ParameterArray p;
  p.field = field_of(doc);
  p.theta = scalar_list(doc.at("theta"), "theta", p.field);
  p.theta_star = scalar_list(doc.at("theta_star"), "theta_star", p.field);
  p.phi = scalar_list(doc.at("phi"), "phi", p.field);
  return p;
}

std::string param_array_to_json_text(const ParameterArray& p) {
  json doc;
  doc["field"] = p.field.to_string();
  doc["theta"] = strings_node(scalars_to_strings(p.theta));
  doc["theta_star"] = strings_node(scalars_to_strings(p.theta_star));
  doc["phi"] = strings_node(scalars_to_strings(p.phi));
  return doc.dump(2) + "\n";
}

MatrixPair pair_from_json_text(const std::string& text) {
  json doc = parse_document(text);
  require_keys(doc, {"field", "A", "A_star"}, "matrix-pair file");
  FieldSpec f = field_of(doc);
  MatrixPair pair{matrix_of(doc.at("A"), "A", f),
                  matrix_of(doc.at("A_star"), "A_star", f)};
  if (pair.A.rows() != pair.A_star.rows()) {
    throw ParseError("\"A\" and \"A_star\" must have the same order");
  }
  return pair;
}

std::string pair_to_json_text(const MatrixPair& pair) {
  json doc;
  doc["field"] = pair.A.field().to_string();
  json a = json::array(), a_star = json::array();
  for (const auto& row : matrix_to_strings(pair.A)) {
    a.push_back(strings_node(row));
  }
  for (const auto& row : matrix_to_strings(pair.A_star)) {
    a_star.push_back(strings_node(row));
  }
  doc["A"] = a;
  doc["A_star"] = a_star;
  return doc.dump(2) + "\n";
}

bool json_text_is_pair_file(const std::string& text) {
  json doc = parse_document(text);
  if (doc.contains("A") && doc.contains("A_star")) return true;
  if (doc.contains("theta") && doc.contains("theta_star")) return false;
  throw ParseError(
      "the document is neither a parameter-array file nor a matrix-pair file");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
  out << content;
  if (!out) throw ParseError("failed while writing \"" + path + "\"");
}

std::vector<std::vector<std::string>> matrix_to_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i].push_back(m.at(i, j).to_string());
    }
  }
  return out;
}

std::vector<std::string> scalars_to_strings(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

}  // namespace thp
