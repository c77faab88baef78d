#pragma once

// Helpers shared by the unit, CLI, and acceptance suites.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "thp/field.hpp"
#include "thp/linalg.hpp"
#include "thp/thcore.hpp"

namespace test_support {

using namespace thp;

inline Scalar q(long long n, long long d = 1) {
  return Scalar::of_rational(Integer(n), Integer(d));
}

inline Scalar gf(long long v, const FieldSpec& f) {
  return Scalar::of_integer(Integer(v), f);
}

inline Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return Matrix::from_rows(r);
}

/// The worked 3x3 example used throughout the suites:
/// theta = theta_star = (0, 1, 2), phi = (1, 1) over the rationals.
inline ParameterArray worked_example() {
  ParameterArray p;
  p.field = FieldSpec::rationals();
  p.theta = {q(0), q(1), q(2)};
  p.theta_star = {q(0), q(1), q(2)};
  p.phi = {q(1), q(1)};
  return p;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs a shell command, capturing standard output and the exit code.
/// Standard error passes through to the test log.
inline CliResult run_cli(const std::string& command) {
  CliResult r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = ::pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

/// Quotes one argument for the shell.
inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

/// Directory for this process's scratch files, created on first use.
inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("thp-tests-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

/// Writes content to <scratch>/<name> and returns the full path.
inline std::string write_scratch_file(const std::string& name,
                                      const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  return path.string();
}

}  // namespace test_support
