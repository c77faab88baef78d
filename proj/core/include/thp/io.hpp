#pragma once

#include <string>
#include <vector>

#include "thp/linalg.hpp"
#include "thp/recognize.hpp"
#include "thp/thcore.hpp"

/// JSON serialization of parameter arrays and raw matrix pairs, plus small
/// file helpers.  Two document shapes are supported, both UTF-8 JSON objects
/// with every scalar written as a string (never a number):
///
///   parameter-array file: {"field": "rational" | "gf:<p>",
///                          "theta": [...], "theta_star": [...], "phi": [...]}
///   matrix-pair file:     {"field": ..., "A": [[...], ...], "A_star": [[...], ...]}
///
/// Parsing is strict: unknown keys, missing keys, non-string scalars, and
/// malformed scalar text all raise ParseError.  Matrix-pair documents must
/// hold two square matrices of the same nonzero order; parameter-array length
/// relationships are left to validate() so that callers can report them as
/// ordinary validation failures.
namespace thp {

ParameterArray param_array_from_json_text(const std::string& text);
std::string param_array_to_json_text(const ParameterArray& p);

MatrixPair pair_from_json_text(const std::string& text);
std::string pair_to_json_text(const MatrixPair& pair);

/// True when the JSON document has exactly the keys of a matrix-pair file.
/// Used by commands that accept either document shape.  Throws ParseError on
/// malformed JSON or on a document that matches neither shape.
bool json_text_is_pair_file(const std::string& text);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);
/// Writes (replacing) a whole file; throws ParseError when it cannot be written.
void write_text_file(const std::string& path, const std::string& content);

/// Row-major matrix entries in canonical text form.
std::vector<std::vector<std::string>> matrix_to_strings(const Matrix& m);
/// Canonical text form of each scalar in order.
std::vector<std::string> scalars_to_strings(const std::vector<Scalar>& v);

}  // namespace thp
