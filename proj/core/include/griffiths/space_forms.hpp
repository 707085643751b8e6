#pragma once

#include "griffiths/report.hpp"
#include "griffiths/riemann.hpp"
#include "griffiths/scalar.hpp"

namespace griffiths {

/// R_{ijpq} = k (delta_iq delta_jp - delta_ip delta_jq) on n + 1 dimensions.
RiemannTensor riemann_csc(const Scalar& k, int n);

/// Closed-form d alpha_i, R alpha_i and coclosure of every alpha_i for the space form.
Report verify_csc(const Scalar& k, const Scalar& s, int n);

/// R equals riemann_csc(R_{0110}, n) exactly, or within tol for floating tensors.
bool is_space_form_tensor(const RiemannTensor& R, double tol = 1e-10);

}  // namespace griffiths
