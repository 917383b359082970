#include "qsl2/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qsl2 {

Rational rational_from_string(const std::string& s) {
    Rational x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    x.canonicalize();
    if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return x;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

// --- cyclotomic polynomials --------------------------------------------------

namespace {

// Exact division of integer polynomials (num / den), remainder must be zero.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dd < 0 || den[dd] == 0) throw std::logic_error("bad divisor");
    std::vector<mpz_class> quot(dn - dd + 1, mpz_class(0));
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        mpz_class f = num[i] / den[dd];
        if (f * den[dd] != num[i]) throw std::logic_error("non-exact polynomial division");
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("nonzero remainder in exact division");
    return quot;
}

// n-th cyclotomic polynomial with integer coefficients.
std::vector<mpz_class> cyclotomic_poly(int n) {
    if (n == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
    std::vector<mpz_class> p(n + 1, mpz_class(0));     // x^n - 1
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = poly_divide_exact(std::move(p), cyclotomic_poly(d));
    }
    return p;
}

}  // namespace

std::shared_ptr<const FieldContext> FieldContext::root_of_unity(int r) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("root-of-unity order must be odd and >= 3");
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->mode_ = FieldMode::RootOfUnity;
    ctx->r_ = r;
    auto phi = cyclotomic_poly(r);
    ctx->degree_ = static_cast<int>(phi.size()) - 1;
    ctx->cyclo_.reserve(phi.size());
    for (auto& c : phi) ctx->cyclo_.emplace_back(c);

    // x^k mod Phi_r for k = 0 .. r-1, computed incrementally.
    const int d = ctx->degree_;
    std::vector<Rational> row(d, Rational(0));
    row[0] = 1;
    ctx->powers_.push_back(row);
    for (int k = 1; k < r; ++k) {
        std::vector<Rational> next(d, Rational(0));
        for (int i = 0; i + 1 < d; ++i) next[i + 1] = row[i];
        const Rational top = row[d - 1];
        if (top != 0) {
            // x^d = -(phi_0 + phi_1 x + ... + phi_{d-1} x^{d-1})  (phi monic)
            for (int i = 0; i < d; ++i) next[i] -= top * ctx->cyclo_[i];
        }
        ctx->powers_.push_back(next);
        row = std::move(next);
    }
    return ctx;
}

std::shared_ptr<const FieldContext> FieldContext::rational_q(const Rational& q) {
    if (q == 0 || q == 1 || q == -1)
        throw std::invalid_argument("rational deformation parameter requires q != 0 and q^2 != 1");
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->mode_ = FieldMode::RationalQ;
    ctx->q_ = q;
    ctx->degree_ = 1;
    return ctx;
}

int FieldContext::order() const {
    if (mode_ != FieldMode::RootOfUnity) throw std::logic_error("order() requires root-of-unity mode");
    return r_;
}

int FieldContext::degree() const { return degree_; }

const std::vector<std::vector<Rational>>& FieldContext::power_table() const {
    if (mode_ != FieldMode::RootOfUnity) throw std::logic_error("power table requires root-of-unity mode");
    return powers_;
}

const std::vector<Rational>& FieldContext::cyclotomic() const {
    if (mode_ != FieldMode::RootOfUnity) throw std::logic_error("cyclotomic() requires root-of-unity mode");
    return cyclo_;
}

const Rational& FieldContext::q_value() const {
    if (mode_ != FieldMode::RationalQ) throw std::logic_error("q_value() requires rational mode");
    return q_;
}

std::string FieldContext::describe() const {
    if (mode_ == FieldMode::RootOfUnity) return "q primitive root of unity of order " + std::to_string(r_);
    return "q = " + rational_to_string(q_);
}

// --- Scalar ------------------------------------------------------------------

Scalar Scalar::zero(const FieldContext& ctx) {
    Scalar s;
    s.ctx_ = &ctx;
    s.c_.assign(ctx.degree(), Rational(0));
    return s;
}

Scalar Scalar::one(const FieldContext& ctx) { return of_int(ctx, 1); }

Scalar Scalar::of_int(const FieldContext& ctx, long v) { return of_rational(ctx, Rational(v)); }

Scalar Scalar::of_rational(const FieldContext& ctx, const Rational& v) {
    Scalar s = zero(ctx);
    s.c_[0] = v;
    s.c_[0].canonicalize();
    return s;
}

Scalar Scalar::q_power(const FieldContext& ctx, long n) {
    if (ctx.mode() == FieldMode::RationalQ) {
        Rational q = ctx.q_value();
        Rational v(1);
        const bool neg = n < 0;
        unsigned long e = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
        Rational base = neg ? Rational(q.get_den(), q.get_num()) : q;
        base.canonicalize();
        while (e) {
            if (e & 1) v *= base;
            base *= base;
            e >>= 1;
        }
        return of_rational(ctx, v);
    }
    const int r = ctx.order();
    long k = n % r;
    if (k < 0) k += r;
    Scalar s;
    s.ctx_ = &ctx;
    s.c_ = ctx.power_table()[static_cast<size_t>(k)];
    return s;
}

bool Scalar::is_zero() const {
    if (!ctx_) return true;
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool Scalar::is_one() const {
    if (!ctx_) return false;
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw std::invalid_argument("field context mismatch");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(*this, o);
    if (!ctx_) return o;
    if (!o.ctx_) return *this;
    Scalar s = *this;
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i] += o.c_[i];
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(*this, o);
    if (!ctx_ || !o.ctx_) return Scalar();
    const FieldContext& ctx = *ctx_;
    if (ctx.mode() == FieldMode::RationalQ) return of_rational(ctx, c_[0] * o.c_[0]);

    const int d = ctx.degree();
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    Scalar s = zero(ctx);
    const auto& pow = ctx.power_table();
    const int r = ctx.order();
    for (int e = 0; e < 2 * d - 1; ++e) {
        if (conv[e] == 0) continue;
        const auto& row = pow[static_cast<size_t>(e % r)];
        for (int i = 0; i < d; ++i)
            if (row[i] != 0) s.c_[i] += conv[e] * row[i];
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const FieldContext& ctx = *ctx_;
    if (ctx.mode() == FieldMode::RationalQ) {
        Rational inv(c_[0].get_den(), c_[0].get_num());
        inv.canonicalize();
        return of_rational(ctx, inv);
    }
    // Extended Euclid in Q[x] against Phi_r: s*this + t*Phi = 1.
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<size_t>(i)] != 0) return i;
        return -1;
    };
    Poly a(ctx.cyclotomic());
    Poly b(c_.begin(), c_.end());
    Poly sa(1, Rational(0)), sb(1, Rational(1));  // cofactors of b in a, b
    while (true) {
        int db = deg(b);
        if (db < 0) throw std::logic_error("cyclotomic polynomial not coprime to nonzero element");
        if (db == 0) {
            Rational lead = b[0];
            Scalar out = zero(ctx);
            for (size_t i = 0; i < sb.size() && i < out.c_.size(); ++i) out.c_[i] = sb[i] / lead;
            return out;
        }
        int da = deg(a);
        if (da < db) {
            std::swap(a, b);
            std::swap(sa, sb);
            continue;
        }
        // a -= (lead_a/lead_b) x^{da-db} * b; same op on cofactors
        Rational f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        int shift = da - db;
        if (sa.size() < sb.size() + static_cast<size_t>(shift)) sa.resize(sb.size() + static_cast<size_t>(shift), Rational(0));
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= f * b[static_cast<size_t>(i)];
        for (size_t i = 0; i < sb.size(); ++i) sa[i + static_cast<size_t>(shift)] -= f * sb[i];
    }
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::conjugate_q() const {
    if (!ctx_) return Scalar();
    const FieldContext& ctx = *ctx_;
    if (ctx.mode() != FieldMode::RootOfUnity)
        throw std::logic_error("q-conjugation requires root-of-unity mode");
    const int r = ctx.order();
    Scalar out = zero(ctx);
    const auto& pow = ctx.power_table();
    for (int i = 0; i < ctx.degree(); ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        const auto& row = pow[static_cast<size_t>((i * (r - 1)) % r)];
        for (int j = 0; j < ctx.degree(); ++j)
            if (row[j] != 0) out.c_[static_cast<size_t>(j)] += c_[static_cast<size_t>(i)] * row[j];
    }
    return out;
}

std::complex<double> Scalar::embed(int k) const {
    if (!ctx_) return {0.0, 0.0};
    const FieldContext& ctx = *ctx_;
    if (ctx.mode() != FieldMode::RootOfUnity)
        throw std::logic_error("complex embedding requires root-of-unity mode");
    const int r = ctx.order();
    if (std::gcd(((k % r) + r) % r, r) != 1) throw std::invalid_argument("invalid embedding index");
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < ctx.degree(); ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        const double angle = 2.0 * M_PI * static_cast<double>(k) * static_cast<double>(i) / static_cast<double>(r);
        acc += c_[static_cast<size_t>(i)].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!ctx_ || !o.ctx_) {
        const Scalar& attached = ctx_ ? *this : o;
        return attached.is_zero();
    }
    require_same(*this, o);
    return c_ == o.c_;
}

const Rational& Scalar::rational_value() const {
    if (!ctx_ || ctx_->mode() != FieldMode::RationalQ)
        throw std::logic_error("rational_value() requires rational mode");
    return c_[0];
}

Rational Scalar::coefficient(int i) const {
    if (!ctx_) return Rational(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    const FieldContext& ctx = *ctx_;
    if (ctx.mode() == FieldMode::RationalQ) return rational_to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ctx.degree(); ++i) {
        const Rational& co = c_[static_cast<size_t>(i)];
        if (co == 0) continue;
        Rational abs = co < 0 ? Rational(-co) : co;
        if (first) {
            if (co < 0) os << "-";
            first = false;
        } else {
            os << (co < 0 ? " - " : " + ");
        }
        const bool unit_coeff = (abs == 1 && i > 0);
        if (!unit_coeff) {
            if (abs.get_den() == 1)
                os << abs.get_str();
            else
                os << "(" << abs.get_str() << ")";
        }
        if (i == 1)
            os << "q";
        else if (i > 1)
            os << "q^" << i;
    }
    return os.str();
}


// --- q-combinatorics ----------------------------------------------------------

Scalar q_int(const FieldContext& ctx, long n) {
    if (n < 0) return -q_int(ctx, -n);
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
    Scalar acc = Scalar::zero(ctx);
    for (long i = 0; i < n; ++i) acc += Scalar::q_power(ctx, n - 1 - 2 * i);
    return acc;
}

Scalar q2_int(const FieldContext& ctx, long n) {
    if (n >= 0) {
        Scalar acc = Scalar::zero(ctx);
        for (long i = 0; i < n; ++i) acc += Scalar::q_power(ctx, 2 * i);
        return acc;
    }
    Scalar num = Scalar::one(ctx) - Scalar::q_power(ctx, 2 * n);
    Scalar den = Scalar::one(ctx) - Scalar::q_power(ctx, 2);
    return num / den;
}

Scalar q1_int(const FieldContext& ctx, long n) {
    if (n >= 0) {
        Scalar acc = Scalar::zero(ctx);
        for (long i = 0; i < n; ++i) acc += Scalar::q_power(ctx, i);
        return acc;
    }
    Scalar num = Scalar::one(ctx) - Scalar::q_power(ctx, n);
    Scalar den = Scalar::one(ctx) - Scalar::q_power(ctx, 1);
    return num / den;
}

Scalar mu(const FieldContext& ctx) { return Scalar::one(ctx) - Scalar::q_power(ctx, -2); }

}  // namespace qsl2
