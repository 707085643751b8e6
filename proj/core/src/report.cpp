#include "griffiths/report.hpp"

#include <algorithm>
#include <utility>

namespace griffiths {

bool residual_negligible(const Scalar& residual, double tol) {
  if (residual.is_exact()) return residual.is_zero();
  return residual.abs().to_double() <= tol;
}

void Report::add_residual(const std::string& name, const Scalar& residual, double tol) {
  Scalar magnitude = residual.abs();
  checks_.push_back({name, residual_negligible(magnitude, tol), magnitude.str()});
}

void Report::add_form(const std::string& name, const ExteriorForm& difference, double tol) {
  add_residual(name, difference.max_abs(), tol);
}

void Report::add(const std::string& name, bool pass, std::string residual) {
  checks_.push_back({name, pass, std::move(residual)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.residual});
}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

}  // namespace griffiths
