#pragma once

// Spin connections for the 4D calculus: the torsion and cotorsion equations,
// their joint solution (existence + uniqueness), the covariant derivative and
// its compatibility residuals, and the regularity condition.
//
// A connection is a collection of four 1-forms A_a, A_b, A_c, A_d written as
// A_i = sum_j A^j_i e_j; the canonical one has constant components
//     A_a = alpha e_z = -A_d,  A_b = beta e_b,  A_c = beta e_c,
// with alpha = q^4/[4]_{q^2} and beta = 1/(q^2 + q^{-2}).

#include <array>
#include <optional>

#include "qsl2/calculus.hpp"

namespace qsl2 {

class Connection {
   public:
    Connection() = default;

    // component(j, i) = A^j_i, so that A_i = sum_j component(j, i) e_j
    const AlgebraElement& component(int j, int i) const { return comp_[static_cast<size_t>(j)][static_cast<size_t>(i)]; }
    void set_component(int j, int i, AlgebraElement v) { comp_[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(v); }

    Form1 form(int i) const;  // A_i

    static Connection zero();
    static Connection canonical(const Calculus& calc);
    // the two coefficients of the canonical connection
    static Scalar alpha(const FieldContext& ctx);  // q^4 / [4]_{q^2}
    static Scalar beta(const FieldContext& ctx);   // 1 / (q^2 + q^{-2})

    bool operator==(const Connection& o) const;

   private:
    std::array<std::array<AlgebraElement, 4>, 4> comp_;
};

// Left-hand sides of the torsion / cotorsion equations, one Form2 per i.
std::array<Form2, 4> torsion_residual(const Calculus& calc, const Connection& A);
std::array<Form2, 4> cotorsion_residual(const Calculus& calc, const Connection& A);

// Solve torsion = cotorsion = 0 over constant (Scalar) components.  Throws if
// the system is inconsistent or has extra solutions.
Connection solve_constant(const Calculus& calc);

// Full solve with all 16 components ranging over the function algebra
// (root-of-unity mode).  Reports the torsion-only kernel dimension as well.
struct GeneralSolveResult {
    Connection particular;    // joint solution
    int joint_nullity = -1;   // dim ker of torsion+cotorsion (0 = uniqueness)
    int torsion_nullity = -1; // dim ker of torsion alone
};
GeneralSolveResult solve_general(const Calculus& calc);

// Dimension of the solution space of torsion = cotorsion (as 2-forms, not
// necessarily zero).  constant_only restricts components to scalars.
int torsion_equals_cotorsion_dimension(const Calculus& calc, bool constant_only);

// Covariant derivative on 1-forms: nabla(f e_i) = df (x) e_i + f nabla e_i,
// nabla e_i = -sum_{j,k} A_j (x) e_k ad_L(jk|i).
Tensor11 nabla1(const Calculus& calc, const Connection& A, const Form1& omega);

// Skew metric-compatibility residual (d (x) id - id ^ nabla) applied to eta.
Tensor21 skew_compat_residual(const Calculus& calc, const Connection& A, const Tensor11& eta);

// Derivation extension of nabla to Omega^1 (x) Omega^1, with the derivative's
// 1-form output kept at the far left.
Tensor111 nabla_on_tensor(const Calculus& calc, const Connection& A, const Tensor11& t);

// Regularity residual sum_{i,j} A_i ^ A_j eps(partial^i partial^j f); the
// argument must lie in ker pi~.
Form2 regularity_residual(const Calculus& calc, const Connection& A, const AlgebraElement& f);

}  // namespace qsl2
