#pragma once

// The reduced coordinate algebra of quantum SL(2) at an odd r-th root of
// unity: r^3-dimensional with monomial basis c^k b^n d^m (0 <= k,n,m < r),
// subject to
//     b a = q a b,  c a = q a c,  d b = q b d,  d c = q c d,  c b = b c,
//     a d - q^{-1} b c = 1,       b^r = c^r = 0,  d^r = 1,
// and a = (1 + q^{-1} b c) d^{-1} eliminated onto the basis.
//
// In rational-q mode the function algebra is not finite dimensional; only
// scalar multiples of the unit are representable and products that would
// require exponent wrapping throw.

#include <map>
#include <string>

#include "qsl2/scalar.hpp"

namespace qsl2 {

struct Monomial {
    int k = 0, n = 0, m = 0;  // c^k b^n d^m
    auto operator<=>(const Monomial&) const = default;
};

class AlgebraElement {
   public:
    AlgebraElement() = default;  // zero

    static AlgebraElement zero(const FieldContext& ctx);
    static AlgebraElement unit(const FieldContext& ctx);
    static AlgebraElement monomial(const FieldContext& ctx, Monomial mon, Scalar coeff);
    static AlgebraElement monomial(const FieldContext& ctx, Monomial mon);

    const FieldContext* context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    Scalar coefficient(Monomial mon) const;

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;  // normal-ordered product
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }

    AlgebraElement scaled(const Scalar& s) const;
    AlgebraElement pow(int e) const;

    Scalar counit() const;  // eps(c^k b^n d^m) = [k == 0][n == 0]

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string str() const;

    void add_term(Monomial mon, const Scalar& coeff);

   private:
    const FieldContext* ctx_ = nullptr;
    std::map<Monomial, Scalar> terms_;  // no explicit zero coefficients
};

inline AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) { return x.scaled(s); }

// Generators on the monomial basis; 'a' expands to d^{r-1} + q^{-1} c b d^{r-1}
// and therefore requires root-of-unity mode.
AlgebraElement generator(const FieldContext& ctx, char name);

// Basis enumeration helpers (root-of-unity mode): index = (k*r + n)*r + m.
int monomial_index(const FieldContext& ctx, Monomial mon);
Monomial monomial_at(const FieldContext& ctx, int index);
int basis_dimension(const FieldContext& ctx);  // r^3

}  // namespace qsl2
