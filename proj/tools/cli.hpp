#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace griffiths::cli {

/// Invalid flags or provider specs; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyConfig {
  std::string command;
  std::optional<int> n;
  std::string s = "1";
  std::optional<std::string> k;
  std::optional<std::string> provider;
  std::optional<std::string> u;            // comma-separated direction
  std::optional<std::string> A;            // JSON square matrix
  std::optional<std::string> eigenvalues;  // comma-separated
  std::optional<std::string> scalM;
  std::optional<std::string> r_nu;
  std::optional<std::uint64_t> seed;
  int samples = 1000;
  int ascent = 100;
  double tol = 1e-10;
  std::string output;
};

struct RunResult {
  int exit_code = 0;
  std::string json;
};

constexpr std::uint64_t default_seed = 20240601;

/// Parses argv into a config; throws ConfigError on bad input.
VerifyConfig parse_config(int argc, const char* const* argv);

/// Flag value, then GRIFFITHS_SEED, then default_seed.
std::uint64_t effective_seed(const VerifyConfig& config);

/// Executes one command; exit_code 0 when every check passes, 1 otherwise.
RunResult run(const VerifyConfig& config);

/// Full front end: parse, run, write the report; returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace griffiths::cli
