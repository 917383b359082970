#include "qsl2/algebra.hpp"

#include <sstream>

namespace qsl2 {

AlgebraElement AlgebraElement::zero(const FieldContext& ctx) {
    AlgebraElement x;
    x.ctx_ = &ctx;
    return x;
}

AlgebraElement AlgebraElement::unit(const FieldContext& ctx) {
    return monomial(ctx, Monomial{0, 0, 0}, Scalar::one(ctx));
}

AlgebraElement AlgebraElement::monomial(const FieldContext& ctx, Monomial mon, Scalar coeff) {
    if (mon.k < 0 || mon.n < 0 || mon.m < 0) throw std::invalid_argument("negative monomial exponent");
    if (ctx.is_root_of_unity()) {
        const int r = ctx.order();
        if (mon.k >= r || mon.n >= r || mon.m >= r) throw std::invalid_argument("monomial exponent out of range");
    } else if (mon.k != 0 || mon.n != 0 || mon.m != 0) {
        throw std::domain_error("nontrivial monomials require root-of-unity mode");
    }
    AlgebraElement x = zero(ctx);
    x.add_term(mon, coeff);
    return x;
}

AlgebraElement AlgebraElement::monomial(const FieldContext& ctx, Monomial mon) {
    return monomial(ctx, mon, Scalar::one(ctx));
}

Scalar AlgebraElement::coefficient(Monomial mon) const {
    auto it = terms_.find(mon);
    if (it == terms_.end()) return ctx_ ? Scalar::zero(*ctx_) : Scalar();
    return it->second;
}

void AlgebraElement::add_term(Monomial mon, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    if (!ctx_) ctx_ = coeff.context();
    auto it = terms_.find(mon);
    if (it == terms_.end()) {
        terms_.emplace(mon, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement x = *this;
    for (auto& [mon, c] : x.terms_) c = -c;
    return x;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw std::invalid_argument("field context mismatch");
    AlgebraElement x = ctx_ ? *this : o;
    if (!ctx_) return x;
    for (const auto& [mon, c] : o.terms_) x.add_term(mon, c);
    return x;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw std::invalid_argument("field context mismatch");
    if (!ctx_ || !o.ctx_) return AlgebraElement();
    const FieldContext& ctx = *ctx_;
    AlgebraElement out = zero(ctx);
    for (const auto& [x, cx] : terms_) {
        for (const auto& [y, cy] : o.terms_) {
            // d^m past c^K b^N costs one q per crossing; b, c commute.
            const long crossings = static_cast<long>(x.m) * (y.k + y.n);
            if (ctx.is_root_of_unity()) {
                const int r = ctx.order();
                if (x.k + y.k >= r || x.n + y.n >= r) continue;  // b^r = c^r = 0
                Monomial mon{x.k + y.k, x.n + y.n, (x.m + y.m) % r};
                Scalar coeff = cx * cy;
                if (crossings) coeff *= Scalar::q_power(ctx, crossings);
                out.add_term(mon, coeff);
            } else {
                const bool left_trivial = (x.k == 0 && x.n == 0 && x.m == 0);
                const bool right_trivial = (y.k == 0 && y.n == 0 && y.m == 0);
                if (!left_trivial && !right_trivial)
                    throw std::domain_error("monomial products require root-of-unity mode");
                Monomial mon{x.k + y.k, x.n + y.n, x.m + y.m};
                out.add_term(mon, cx * cy);
            }
        }
    }
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    if (!ctx_) return AlgebraElement();
    AlgebraElement x = zero(*ctx_);
    if (s.is_zero()) return x;
    for (const auto& [mon, c] : terms_) x.add_term(mon, c * s);
    return x;
}

AlgebraElement AlgebraElement::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative algebra power");
    if (!ctx_) throw std::logic_error("pow on context-free zero");
    AlgebraElement acc = unit(*ctx_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Scalar AlgebraElement::counit() const {
    Scalar acc = ctx_ ? Scalar::zero(*ctx_) : Scalar();
    for (const auto& [mon, c] : terms_)
        if (mon.k == 0 && mon.n == 0) acc += c;
    return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return (*this - o).is_zero();
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mon, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool trivial_mon = (mon.k == 0 && mon.n == 0 && mon.m == 0);
        bool coeff_written = true;
        if (c.is_one() && !trivial_mon) {
            coeff_written = false;
        } else {
            std::string cs = c.str();
            const bool composite = cs.find_first_of("+- ") != std::string::npos;
            if (composite && !trivial_mon)
                os << "(" << cs << ")";
            else
                os << cs;
        }
        bool first_factor = !coeff_written;
        auto put = [&](char g, int e) {
            if (e == 0) return;
            if (!first_factor) os << "*";
            first_factor = false;
            os << g;
            if (e > 1) os << "^" << e;
        };
        put('c', mon.k);
        put('b', mon.n);
        put('d', mon.m);
    }
    return os.str();
}

AlgebraElement generator(const FieldContext& ctx, char name) {
    switch (name) {
        case 'b':
            return AlgebraElement::monomial(ctx, Monomial{0, 1, 0});
        case 'c':
            return AlgebraElement::monomial(ctx, Monomial{1, 0, 0});
        case 'd':
            return AlgebraElement::monomial(ctx, Monomial{0, 0, 1});
        case 'a': {
            if (!ctx.is_root_of_unity())
                throw std::domain_error("generator a requires root-of-unity mode (uses d^{-1})");
            const int r = ctx.order();
            AlgebraElement x = AlgebraElement::monomial(ctx, Monomial{0, 0, r - 1});
            x.add_term(Monomial{1, 1, r - 1}, Scalar::q_power(ctx, -1));
            return x;
        }
        default:
            throw std::invalid_argument(std::string("unknown generator: ") + name);
    }
}

int monomial_index(const FieldContext& ctx, Monomial mon) {
    const int r = ctx.order();
    return (mon.k * r + mon.n) * r + mon.m;
}

Monomial monomial_at(const FieldContext& ctx, int index) {
    const int r = ctx.order();
    Monomial mon;
    mon.m = index % r;
    index /= r;
    mon.n = index % r;
    mon.k = index / r;
    return mon;
}

int basis_dimension(const FieldContext& ctx) {
    const int r = ctx.order();
    return r * r * r;
}

}  // namespace qsl2
