#pragma once

#include <cstdint>
#include <vector>

#include "griffiths/exterior.hpp"
#include "griffiths/report.hpp"
#include "griffiths/riemann.hpp"

namespace griffiths {

/// phi = theta ^ d theta + alpha_2 - alpha_0 for n = 3, s = 1.
ExteriorForm gwistor_phi(ScalarMode mode = ScalarMode::exact);

struct CoclosureDiagnostics {
  bool a0_minus_a2 = false;
  bool a1_minus_a3 = false;
  bool phi = false;
};

/// Coclosure of alpha_0 - alpha_2, alpha_1 - alpha_3 and phi over all fiber
/// probes of an n = 3 tensor, s = 1.
CoclosureDiagnostics coclosure_diagnostics(const RiemannTensor& R, double tol = 1e-10);

/// Pair (real part, imaginary part) of a complex-valued form.
struct ComplexForm {
  ExteriorForm re;
  ExteriorForm im;
};

ComplexForm complex_wedge(const ComplexForm& a, const ComplexForm& b);

/// (e^4 + i e^1) ^ (e^5 + i e^2) ^ (e^6 + i e^3) on the 7-dimensional coframe.
ComplexForm special_lagrangian_form();

/// special_lagrangian_form() == (alpha_0 - alpha_2) + i (alpha_1 - alpha_3)
/// with alphas[i] standing for alpha_i.
bool special_lagrangian_identity(const std::vector<ExteriorForm>& alphas);
bool special_lagrangian_identity();

/// For each n = 3 sample, d(alpha_0 - alpha_2) and d(alpha_1 - alpha_3) must both be nonzero.
Report never_closed_check(const std::vector<RiemannTensor>& samples);

struct ComassEstimate {
  double lower_bound = 0.0;
  bool converged = false;  // the best plane reached a stationary point within n_ascent steps
  int samples = 0;
};

/// Largest value of the form over sampled oriented orthonormal p-frames, each
/// refined by projected gradient ascent on the Stiefel manifold. Sample i is
/// drawn from a generator seeded with (seed, i), so the estimate never
/// decreases as n_samples grows.
ComassEstimate comass_estimate(const ExteriorForm& form, int n_samples, int n_ascent, std::uint64_t seed = 1,
                               unsigned threads = 0);

}  // namespace griffiths
