#pragma once

// Independent closed-form transcriptions used to cross-check the engine.
// Everything here is written directly from the closed-form expressions, not
// through the operator implementations in calculus/connection/curvature, so a
// bug on either side shows up as a mismatch.

#include "qsl2/calculus.hpp"
#include "qsl2/connection.hpp"
#include "qsl2/curvature.hpp"

namespace qsl2 {

// Closed form of d(c^k b^n d^m) as an explicit five-term expression in
// geometric q^2-integers (the engine computes d via the graded theta bracket
// over the tabulated commutation rules instead).
Form1 reference_monomial_differential(const Calculus& calc, Monomial mon);

// Closed forms of pi~ on the four generators.
std::array<Scalar, 4> reference_tilde_pi(const FieldContext& ctx, char gen);

// The metric in its expanded first form, with the Hodge-natural weight
// lambda = q(1 - q - q^2)/(1 + q) on theta (x) theta.
std::array<std::array<Scalar, 4>, 4> reference_metric_components(const FieldContext& ctx);

// General solution family of the torsion equation with free parameters
// x, y, z (constant coefficients here).
Connection reference_torsion_family(const Calculus& calc, const Scalar& x, const Scalar& y,
                                    const Scalar& z);

// Closed forms of nabla e_i for the canonical connection.
Tensor11 reference_nabla_basis(const Calculus& calc, int i);

// Closed forms of the Riemann curvature on the basis 1-forms.
Tensor21 reference_riemann_basis(const Calculus& calc, int i);

// Closed-form lifts of e_b ^ e_z, e_c ^ e_z and e_c ^ e_b.
Tensor11 reference_lift_bz(const Calculus& calc);
Tensor11 reference_lift_cz(const Calculus& calc);
Tensor11 reference_lift_cb(const Calculus& calc);

// Closed form of the Ricci tensor.
Tensor11 reference_ricci(const Calculus& calc);

}  // namespace qsl2
