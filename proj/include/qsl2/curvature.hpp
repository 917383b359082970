#pragma once

// Killing metric, Riemann curvature, self-dual decomposition of invariant
// 2-forms, the lifting map i (a section of the wedge product), the quantum
// trace, and the Ricci tensor.

#include <utility>

#include "qsl2/connection.hpp"

namespace qsl2 {

// Invariant metric with its component matrix, inverse and quantum trace.
// Shifting by multiples of theta (x) theta can make the matrix degenerate, in
// which case inv/qtrace are left unset and invertible is false.
struct Metric {
    Tensor11 tensor;                             // sum eta^{ij} e_i (x) e_j
    std::array<std::array<Scalar, 4>, 4> comp;   // eta^{ij}
    bool invertible = false;
    std::array<std::array<Scalar, 4>, 4> inv;    // eta_{ij}
    std::array<std::array<Scalar, 4>, 4> qtrace; // u^j_k = sum_i eta^{ij} eta_{ik}
};

// eta = e_c (x) e_b + q^2 e_b (x) e_c + q^4/[2]_{q^2} (e_z (x) e_z - theta (x) theta),
// optionally shifted by extra * theta (x) theta.
Metric metric(const Calculus& calc);
Metric metric_shifted(const Calculus& calc, const Scalar& extra);

// Apply the wedge to both legs of a (1,1) tensor.
Form2 wedge_apply(const Calculus& calc, const Tensor11& t);

// Riemann = ((id ^ nabla) - d (x) id) o nabla : Omega^1 -> Omega^2 (x) Omega^1.
Tensor21 riemann(const Calculus& calc, const Connection& A, const Form1& omega);

// Lifting map i : Lambda^2 -> Lambda^1 (x) Lambda^1, extended left-linearly.
Tensor11 lift_i(const Calculus& calc, const Form2& omega);
// Scalar images of the six basis 2-forms: img[I][p][s] is the e_p (x) e_s
// coefficient of i(e_I).
struct LiftTable {
    std::array<std::array<std::array<Scalar, 4>, 4>, 6> img;
};
LiftTable lift_i_table(const Calculus& calc);

// Decomposition over the self-dual / antiself-dual bases of Lambda^2.
std::pair<Form2, Form2> selfdual_split(const Calculus& calc, const Form2& omega);

// Ricci via the quantum trace against the lifted Riemann tensor.
Tensor11 ricci(const Calculus& calc, const Connection& A, const Metric& g);

// Exact determinant of a 4x4 component matrix.
Scalar det4(const std::array<std::array<Scalar, 4>, 4>& m);

}  // namespace qsl2
