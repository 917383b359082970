#pragma once

// The 4D bicovariant first- and second-order differential calculus on the
// reduced quantum SL(2) algebra.
//
// Omega^1 is a free left module on the invariant basis (e_a, e_b, e_c, e_d);
// Omega^2 on (e_ab, e_ac, e_bc, e_ad, e_bd, e_cd) where e_xy = e_x ^ e_y.
// Everything is kept in left-normal form: algebra coefficients sit to the
// left of the invariant basis forms.  Moving a coefficient through a basis
// form ("push_left") is driven by the closed-form commutation rules on basis
// monomials, tabulated once per context.
//
// The exterior derivative is the graded bracket d = mu^{-1} [theta, . } with
// theta = e_a + e_d; the derived constant e_z = q^{-2} e_a - e_d.

#include <array>
#include <memory>
#include <tuple>
#include <vector>

#include "qsl2/algebra.hpp"
#include "qsl2/scalar.hpp"

namespace qsl2 {

enum Basis1 : int { EA = 0, EB = 1, EC = 2, ED = 3 };
enum Basis2 : int { EAB = 0, EAC = 1, EBC = 2, EAD = 3, EBD = 4, ECD = 5 };

extern const char* const kBasis1Names[4];   // "e_a", ...
extern const char* const kBasis2Names[6];   // "e_ab", ...

class Form1 {
   public:
    Form1() = default;
    std::array<AlgebraElement, 4> c;

    bool is_zero() const;
    Form1 operator+(const Form1& o) const;
    Form1 operator-(const Form1& o) const;
    Form1 operator-() const;
    Form1 scaled(const Scalar& s) const;
    Form1 left_mul(const AlgebraElement& f) const;
    bool operator==(const Form1& o) const;
    std::string str() const;
};

class Form2 {
   public:
    Form2() = default;
    std::array<AlgebraElement, 6> c;

    bool is_zero() const;
    Form2 operator+(const Form2& o) const;
    Form2 operator-(const Form2& o) const;
    Form2 operator-() const;
    Form2 scaled(const Scalar& s) const;
    Form2 left_mul(const AlgebraElement& f) const;
    bool operator==(const Form2& o) const;
    std::string str() const;
};

// Omega^1 (x)_A Omega^1 in left-normal form: component [i][j] multiplies e_i (x) e_j.
class Tensor11 {
   public:
    std::array<std::array<AlgebraElement, 4>, 4> c;
    bool is_zero() const;
    Tensor11 operator+(const Tensor11& o) const;
    Tensor11 operator-(const Tensor11& o) const;
    Tensor11 scaled(const Scalar& s) const;
    bool operator==(const Tensor11& o) const;
    std::string str() const;
};

// Omega^2 (x)_A Omega^1: component [I][j] multiplies e_I (x) e_j.
class Tensor21 {
   public:
    std::array<std::array<AlgebraElement, 4>, 6> c;
    bool is_zero() const;
    Tensor21 operator+(const Tensor21& o) const;
    Tensor21 operator-(const Tensor21& o) const;
    Tensor21 scaled(const Scalar& s) const;
    bool operator==(const Tensor21& o) const;
    std::string str() const;
};

// Omega^1 (x) Omega^1 (x) Omega^1.
class Tensor111 {
   public:
    Tensor111();
    std::array<AlgebraElement, 64> c;  // index (i*4 + j)*4 + k
    AlgebraElement& at(int i, int j, int k) { return c[static_cast<size_t>((i * 4 + j) * 4 + k)]; }
    const AlgebraElement& at(int i, int j, int k) const { return c[static_cast<size_t>((i * 4 + j) * 4 + k)]; }
    bool is_zero() const;
    Tensor111 operator+(const Tensor111& o) const;
    Tensor111 operator-(const Tensor111& o) const;
};

// Structure constants of the braided Lie algebra: coefficient of e_j (x) e_k
// in ad(e_i), indexed [j][k][i].
struct StructureConstants {
    std::array<std::array<std::array<Scalar, 4>, 4>, 4> L;
    std::array<std::array<std::array<Scalar, 4>, 4>, 4> R;
};

class Calculus {
   public:
    explicit Calculus(std::shared_ptr<const FieldContext> ctx);

    const FieldContext& context() const { return *ctx_; }
    std::shared_ptr<const FieldContext> context_ptr() const { return ctx_; }

    // e_i * f = sum_k Delta_i^k(f) e_k, returned as a Form1 in left-normal form.
    Form1 push_left(int i, const AlgebraElement& f) const;

    // Wedge of basis forms as scalar components, and of general 1-forms.
    const std::array<Scalar, 6>& wedge_basis(int i, int j) const;
    Form2 wedge11(const Form1& alpha, const Form1& beta) const;
    Form2 wedge_form_basis(const Form1& alpha, int j) const;  // alpha ^ e_j

    // Exterior derivative.
    Form1 d0(const AlgebraElement& f) const;
    Form2 d1(const Form1& omega) const;
    const std::array<Scalar, 6>& d_basis(int i) const;  // d e_i
    std::array<AlgebraElement, 4> partials(const AlgebraElement& f) const;

    // Projection pi~(f) = sum_i eps(partial^i f) e_i.
    std::array<Scalar, 4> tilde_pi(const AlgebraElement& f) const;
    Form1 tilde_pi_form(const AlgebraElement& f) const;

    // Exact basis of ker pi~ (root-of-unity mode).
    std::vector<AlgebraElement> ker_tilde_pi_basis() const;

    const StructureConstants& ad() const { return ad_; }

    // Invariant constants.
    const std::array<Scalar, 4>& e_z() const { return ez_; }
    const std::array<Scalar, 4>& theta() const { return theta_; }
    Form1 basis_form(int i) const;
    Form1 constant_form(const std::array<Scalar, 4>& comps) const;

    // (x)_A normal form of a formal sum of f e_i (x) g e_j.
    Tensor11 tensor_normalize(
        const std::vector<std::tuple<AlgebraElement, int, AlgebraElement, int>>& terms) const;

   private:
    std::shared_ptr<const FieldContext> ctx_;

    struct PushTerm {
        int form;        // output basis index
        Monomial mon;    // output monomial
        Scalar coeff;
    };
    // push_tab_[i][monomial_index] lists Delta_i(mon); root-of-unity mode only.
    std::array<std::vector<std::vector<PushTerm>>, 4> push_tab_;

    std::array<std::array<std::array<Scalar, 6>, 4>, 4> wedge_tab_;
    std::array<std::array<Scalar, 6>, 4> d_tab_;
    std::array<Scalar, 4> ez_, theta_;
    StructureConstants ad_;
    Scalar mu_, mu_inv_;

    void build_push_table();
    void build_wedge_table();
    void build_d_table();
    void build_ad_constants();
};

}  // namespace qsl2
