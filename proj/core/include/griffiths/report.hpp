#pragma once

#include <string>
#include <vector>

#include "griffiths/exterior.hpp"
#include "griffiths/scalar.hpp"

namespace griffiths {

struct Check {
  std::string name;
  bool pass = false;
  std::string residual;
};

/// Ordered list of named pass/fail checks.
class Report {
 public:
  /// Passes when the residual is exactly zero (exact) or at most tol (floating).
  void add_residual(const std::string& name, const Scalar& residual, double tol = 1e-10);
  /// Residual is the max-norm of the coefficient vector of `difference`.
  void add_form(const std::string& name, const ExteriorForm& difference, double tol = 1e-10);
  void add(const std::string& name, bool pass, std::string residual = "0");
  void append(const Report& other, const std::string& prefix = "");

  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;
  std::size_t failures() const;

 private:
  std::vector<Check> checks_;
};

bool residual_negligible(const Scalar& residual, double tol);

}  // namespace griffiths
