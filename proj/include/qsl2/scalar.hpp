#pragma once

// Exact coefficient-field arithmetic for the reduced quantum group engine.
//
// Two field modes behind one Scalar type:
//   * RootOfUnity(r): the cyclotomic field Q(q) with q a primitive r-th root
//     of unity, r odd >= 3.  Elements are rational-coefficient polynomials in
//     q reduced mod the r-th cyclotomic polynomial.
//   * RationalQ(q): plain rationals with a fixed rational deformation
//     parameter q (q != 0, q^2 != 1).  Elements are single rationals.
//
// Scalars are immutable values; a default-constructed Scalar is an exact zero
// not yet attached to a context and adopts the other operand's context in
// arithmetic.

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qsl2 {

using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& x);

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("scalar division by zero") {}
};

enum class FieldMode { RootOfUnity, RationalQ };

class FieldContext {
   public:
    static std::shared_ptr<const FieldContext> root_of_unity(int r);
    static std::shared_ptr<const FieldContext> rational_q(const Rational& q);

    FieldMode mode() const { return mode_; }
    bool is_root_of_unity() const { return mode_ == FieldMode::RootOfUnity; }

    // RootOfUnity accessors
    int order() const;   // r
    int degree() const;  // deg Phi_r = phi(r)
    // x^k mod Phi_r for 0 <= k < r, as integer coefficient rows of length degree()
    const std::vector<std::vector<Rational>>& power_table() const;
    const std::vector<Rational>& cyclotomic() const;  // Phi_r, monic, length degree()+1

    // RationalQ accessor
    const Rational& q_value() const;

    std::string describe() const;

   private:
    FieldContext() = default;
    FieldMode mode_ = FieldMode::RationalQ;
    int r_ = 0;
    int degree_ = 1;
    Rational q_;
    std::vector<Rational> cyclo_;
    std::vector<std::vector<Rational>> powers_;
};

class Scalar {
   public:
    Scalar() = default;  // exact zero, context-free

    static Scalar zero(const FieldContext& ctx);
    static Scalar one(const FieldContext& ctx);
    static Scalar of_int(const FieldContext& ctx, long v);
    static Scalar of_rational(const FieldContext& ctx, const Rational& v);
    // q^n for any integer n (negative exponents via q^{-1})
    static Scalar q_power(const FieldContext& ctx, long n);

    const FieldContext* context() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;  // throws DivisionByZero on zero

    // Galois map q -> q^{-1}; RootOfUnity mode only.
    Scalar conjugate_q() const;

    // Evaluate at q = exp(2*pi*i*k/r); requires RootOfUnity mode and gcd(k,r)=1.
    std::complex<double> embed(int k = 1) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // RationalQ value / cyclotomic coefficient access (coefficient of q^i)
    const Rational& rational_value() const;
    Rational coefficient(int i) const;

    std::string str() const;  // human-readable, e.g. "1 - (3/4)q^2"

   private:
    friend class FieldContext;
    const FieldContext* ctx_ = nullptr;
    std::vector<Rational> c_;  // size degree() in RoU mode, size 1 in RationalQ

    static void require_same(const Scalar& a, const Scalar& b);
};

// q-combinatorics ------------------------------------------------------------

// Balanced q-integer [n] = (q^n - q^{-n})/(q - q^{-1}).
Scalar q_int(const FieldContext& ctx, long n);
// Geometric q-integer at base q^2: [n]_{q^2} = (1 - q^{2n})/(1 - q^2).
Scalar q2_int(const FieldContext& ctx, long n);
// Geometric q-integer at base q: (1 - q^n)/(1 - q).
Scalar q1_int(const FieldContext& ctx, long n);
// mu = 1 - q^{-2}; never zero under context invariants.
Scalar mu(const FieldContext& ctx);

}  // namespace qsl2
